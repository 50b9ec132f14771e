#include <doctest.h>

#include <random>

#include "idp/pbw.hpp"
#include "idp/qarith.hpp"

using namespace idp;

namespace {

RatFunc qp(int e) { return RatFunc(LaurentPoly::q_power(e)); }

PBWElement rnd_element(std::mt19937& gen, int max_terms = 3) {
    std::uniform_int_distribution<int> ab(0, 3), s(-3, 3), exp(-2, 2), coeff(-3, 3),
        nterms(1, max_terms);
    PBWElement e;
    const int n = nterms(gen);
    for (int i = 0; i < n; ++i) {
        LaurentPoly p;
        p.add_term(exp(gen), coeff(gen));
        if (p.is_zero()) p = LaurentPoly::one();
        e.add_term({ab(gen), s(gen), ab(gen)}, RatFunc(p));
    }
    if (e.is_zero()) e = PBWElement::one();
    return e;
}

} // namespace

TEST_CASE("generators") {
    CHECK(PBWElement::echeck(1) == PBWElement::monomial({1, 0, 0}, RatFunc::one()));
    CHECK(PBWElement::k(-1) == PBWElement::monomial({0, -1, 0}, RatFunc::one()));
    CHECK(PBWElement::f(3) == PBWElement::monomial({0, 0, 3}, RatFunc::one()));
    CHECK(PBWElement::echeck(0) == PBWElement::one());
    CHECK_THROWS_AS(PBWElement::echeck(-1), std::domain_error);
    CHECK_THROWS_AS(PBWElement::f(-2), std::domain_error);
    // E = q Ec K, so Ec = q^-1 E K^-1 holds by construction
    CHECK(PBWElement::e_undivided(1) == PBWElement::monomial({1, 1, 0}, qp(1)));
}

TEST_CASE("reorder_FE base cases") {
    CHECK(reorder_FE(0) == PBWElement::f(1));

    // F Ec = q^-2 Ec F + h with h = (K^-2 - 1)/(q^2 - 1)
    PBWElement expected1;
    const RatFunc d(LaurentPoly::one(), LaurentPoly::q_power(2) - LaurentPoly::one());
    expected1.add_term({1, 0, 1}, qp(-2));
    expected1.add_term({0, -2, 0}, d);
    expected1.add_term({0, 0, 0}, -d);
    CHECK(reorder_FE(1) == expected1);
    CHECK(reorder_FE(1) - PBWElement::monomial({1, 0, 1}, qp(-2)) == PBWElement::h());

    // n = 2 against Ec^2 = [2] Ec^(2) multiplied out with the n = 1 case twice
    const PBWElement ec = PBWElement::echeck(1);
    const PBWElement f = PBWElement::f(1);
    const PBWElement ec2 = multiply(ec, ec).scaled(RatFunc(LaurentPoly::one(), qint(2)));
    CHECK(ec2 == PBWElement::echeck(2));
    CHECK(reorder_FE(2) == multiply(f, ec2));
}

TEST_CASE("defining relations in normal form") {
    const PBWElement E = PBWElement::e_undivided(1);
    const PBWElement F = PBWElement::f(1);
    const PBWElement K = PBWElement::k(1);
    const PBWElement Kinv = PBWElement::k(-1);

    CHECK(multiply(K, Kinv) == PBWElement::one());
    CHECK(multiply(K, E) == multiply(E, K).scaled(qp(2)));
    CHECK(multiply(K, F) == multiply(F, K).scaled(qp(-2)));

    PBWElement casimir;
    const RatFunc d(LaurentPoly::one(), LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
    casimir.add_term({0, 1, 0}, d);
    casimir.add_term({0, -1, 0}, -d);
    CHECK(multiply(E, F) - multiply(F, E) == casimir);

    const PBWElement Ec = PBWElement::echeck(1);
    CHECK(multiply(F, Ec) - multiply(Ec, F).scaled(qp(-2)) == PBWElement::h());
}

TEST_CASE("multiplication is associative and unital") {
    std::mt19937 gen(777);
    for (int i = 0; i < 20; ++i) {
        const PBWElement x = rnd_element(gen, 2);
        const PBWElement y = rnd_element(gen, 2);
        const PBWElement z = rnd_element(gen, 2);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        CHECK(multiply(x, PBWElement::one()) == x);
        CHECK(multiply(PBWElement::one(), x) == x);
    }
}

TEST_CASE("normal form is independent of the reduction route") {
    // F^(j) Ec^(n) assembled from undivided generators in two bracketings
    for (int j = 1; j <= 3; ++j)
        for (int n = 1; n <= 3; ++n) {
            const PBWElement lhs = multiply(PBWElement::f(j), PBWElement::echeck(n));
            PBWElement rhs = PBWElement::echeck(n);
            for (int i = 0; i < j; ++i) rhs = multiply(PBWElement::f(1), rhs);
            rhs = rhs.scaled(RatFunc(LaurentPoly::one(), qfact(j)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("hbinom") {
    CHECK(hbinom(5, 0) == PBWElement::one());
    CHECK(hbinom(-2, 0) == PBWElement::one());

    // [h;0] = (K^-2 - 1)/(q^4 - 1)
    PBWElement h0;
    const RatFunc d(LaurentPoly::one(), LaurentPoly::q_power(4) - LaurentPoly::one());
    h0.add_term({0, -2, 0}, d);
    h0.add_term({0, 0, 0}, -d);
    CHECK(hbinom(0, 1) == h0);
    // h = q [2] [h;0] = (q^2 + 1) [h;0]
    CHECK(PBWElement::h() ==
          h0.scaled(RatFunc(LaurentPoly::q_power(2) + LaurentPoly::one())));

    for (int a = -3; a <= 3; ++a)
        for (int n = 1; n <= 4; ++n) {
            const PBWElement shift = PBWElement::monomial({0, -2, 0}, qp(4 * a));
            CHECK(hbinom(a, n) ==
                  hbinom(a + 1, n) - multiply(shift, hbinom(a + 1, n - 1)));
        }
}

TEST_CASE("hbrace") {
    CHECK(hbrace(3, 0) == PBWElement::one());

    // <h;0> = (K^-2 - q^2)/(q^4 - 1)
    PBWElement b0;
    const RatFunc d(LaurentPoly::one(), LaurentPoly::q_power(4) - LaurentPoly::one());
    b0.add_term({0, -2, 0}, d);
    b0.add_term({0, 0, 0}, -(d * qp(2)));
    CHECK(hbrace(0, 1) == b0);

    for (int a = -3; a <= 3; ++a)
        for (int n = 1; n <= 4; ++n) {
            const PBWElement shift = PBWElement::monomial({0, -2, 0}, qp(4 * a));
            CHECK(hbrace(a, n) ==
                  hbrace(a + 1, n) - multiply(shift, hbrace(a + 1, n - 1)));
        }
}

TEST_CASE("commute_cartan") {
    const PBWElement Kinv2 = PBWElement::k(-2);
    const PBWElement F = PBWElement::f(1);
    const PBWElement Ec = PBWElement::echeck(1);

    // K^-2 F = q^4 F K^-2
    CHECK(multiply(Kinv2, F) == multiply(F, commute_cartan(Kinv2, Side::F, 1)));
    CHECK(commute_cartan(Kinv2, Side::F, 1) == Kinv2.scaled(qp(4)));

    for (int a = -2; a <= 2; ++a)
        for (int n = 0; n <= 3; ++n) {
            CHECK(commute_cartan(hbinom(a, n), Side::F, 1) == hbinom(a + 1, n));
            CHECK(commute_cartan(hbinom(a, n), Side::Echeck, 1) == hbinom(a - 1, n));
            CHECK(multiply(hbrace(a, n), F) == multiply(F, hbrace(a + 1, n)));
            CHECK(multiply(hbrace(a, n), Ec) == multiply(Ec, hbrace(a - 1, n)));
        }

    CHECK_THROWS_AS(commute_cartan(PBWElement::f(1), Side::F, 1), std::invalid_argument);
}

TEST_CASE("sigma anti-involution") {
    CHECK(apply_sigma(PBWElement::h()) == PBWElement::h().scaled(-qp(2)));

    for (int a = -2; a <= 2; ++a)
        for (int n = 0; n <= 3; ++n) {
            RatFunc s = qp(2 * n * (n + 1));
            if (n % 2 == 1) s = -s;
            CHECK(apply_sigma(hbinom(a, n)) == hbinom(1 - a - n, n).scaled(s));
            RatFunc s2 = qp(2 * n * (n - 1));
            if (n % 2 == 1) s2 = -s2;
            CHECK(apply_sigma(hbrace(a, n)) == hbrace(2 - a - n, n).scaled(s2));
        }

    std::mt19937 gen(991);
    for (int i = 0; i < 15; ++i) {
        const PBWElement x = rnd_element(gen);
        const PBWElement y = rnd_element(gen);
        CHECK(apply_sigma(apply_sigma(x)) == x);
        CHECK(apply_sigma(multiply(x, y)) == multiply(apply_sigma(y), apply_sigma(x)));
    }
}

TEST_CASE("b_helper") {
    CHECK(b_helper(0) == PBWElement::one());

    PBWElement b2;
    b2.add_term({2, 0, 0}, RatFunc::one());
    b2.add_term({1, 0, 1}, qp(-1));
    b2.add_term({0, 0, 2}, RatFunc::one());
    CHECK(b_helper(2) == b2);

    PBWElement b3;
    b3.add_term({3, 0, 0}, RatFunc::one());
    b3.add_term({2, 0, 1}, qp(-2));
    b3.add_term({1, 0, 2}, qp(-2));
    b3.add_term({0, 0, 3}, RatFunc::one());
    CHECK(b_helper(3) == b3);
}

TEST_CASE("serialization order and text form") {
    PBWElement e;
    e.add_term({1, 0, 0}, RatFunc::one());
    e.add_term({0, 0, 1}, RatFunc::one());
    e.add_term({0, -1, 0}, RatFunc(qint(2)));
    // sorted by (a, b, s): K^-1 term, then F term, then Ec term
    CHECK(e.to_string() == "(q + q^-1) K^-1 + F + Ec");
    CHECK(PBWElement::zero().to_string() == "0");
    CHECK(PBWElement::one().to_string() == "1");
}
