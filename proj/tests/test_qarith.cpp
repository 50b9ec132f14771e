#include <doctest.h>

#include <random>

#include "idp/qarith.hpp"

using namespace idp;

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q_power(e); }

// q -> q^2 substitution, for checking the base-q^2 binomials
LaurentPoly double_exponents(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(2 * e, c);
    return r;
}

} // namespace

TEST_CASE("qint small values and symmetry") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == LaurentPoly::one());
    CHECK(qint(2) == qp(1) + qp(-1));
    CHECK(qint(-3) == -(qp(2) + LaurentPoly::one() + qp(-2)));
    for (int n = -50; n <= 50; ++n) {
        CHECK(qint(n).bar() == qint(n));
        CHECK(qint(-n) == -qint(n));
    }
}

TEST_CASE("qfact") {
    CHECK(qfact(0) == LaurentPoly::one());
    CHECK(qfact(1) == LaurentPoly::one());
    CHECK(qfact(3) == (qp(1) + qp(-1)) * (qp(2) + LaurentPoly::one() + qp(-2)));
    CHECK_THROWS_AS(qfact(-1), std::domain_error);
}

TEST_CASE("qbinom against the Pascal recursion") {
    // independent oracle: [m n] = q^n [m-1 n] + q^{n-m} [m-1 n-1]
    const int kMax = 12;
    std::vector<std::vector<RatFunc>> pascal(kMax + 1, std::vector<RatFunc>(kMax + 1));
    for (int m = 0; m <= kMax; ++m) {
        pascal[m][0] = RatFunc::one();
        for (int n = 1; n <= m; ++n) {
            // pascal[m-1][m] is the default zero when n == m
            pascal[m][n] = RatFunc(qp(n)) * pascal[m - 1][n] +
                           RatFunc(qp(n - m)) * pascal[m - 1][n - 1];
        }
    }
    for (int m = 0; m <= kMax; ++m)
        for (int n = 0; n <= m; ++n) {
            const RatFunc b = qbinom(m, n);
            CHECK(b == pascal[m][n]);
            CHECK(b.is_integral());
            CHECK(b.bar() == b);
        }
}

TEST_CASE("qbinom frozen value and corner cases") {
    CHECK(qbinom(4, 2).num().to_string() == "q^4 + q^2 + 2 + q^-2 + q^-4");
    CHECK(qbinom(4, 2).is_integral());
    CHECK(qbinom(3, 0) == RatFunc::one());
    CHECK(qbinom(2, 3).is_zero()); // [0] factor in the numerator
    // negative upper index: [-2 choose 1] = [-2]
    CHECK(qbinom(-2, 1) == RatFunc(qint(-2)));
    CHECK_THROWS_AS(qbinom(4, -1), std::domain_error);
}

TEST_CASE("qbinom2 is qbinom in base q^2") {
    for (int m = -5; m <= 5; ++m) CHECK(qbinom2(m, 0) == RatFunc::one());
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= m; ++n) {
            const RatFunc b2 = qbinom2(m, n);
            CHECK(b2.is_integral());
            CHECK(b2.num() == double_exponents(qbinom(m, n).num()));
        }
}

TEST_CASE("cbinom") {
    CHECK(cbinom(3, 0) == LaurentPoly::one());
    CHECK(cbinom(-4, 0) == LaurentPoly::one());
    CHECK(cbinom(1, 1) == -qp(4));
    CHECK(cbinom(0, 1).is_zero());
    for (int m = -6; m <= 6; ++m)
        for (int c = 0; c <= 6; ++c) {
            const LaurentPoly& v = cbinom(m, c); // throws on non-integrality
            if (m <= 0 && m + c <= 0) {
                // N[q^-1] region used by the lattice estimates
                CHECK(v.all_coeffs_nonneg());
                CHECK(v.in_z_qinv());
            }
        }
}

TEST_CASE("bar involution") {
    CHECK((qp(2) + LaurentPoly(3)).bar() == qp(-2) + LaurentPoly(3));
    const RatFunc r(qp(1), qp(2) - LaurentPoly::one()); // q/(q^2-1)
    CHECK(r.bar() == -r);
    CHECK(r.bar().bar() == r);
}

TEST_CASE("RatFunc canonical reduction") {
    // (q^2-1)/(q-1) = q+1
    CHECK(RatFunc(qp(2) - LaurentPoly::one(), qp(1) - LaurentPoly::one()) ==
          RatFunc(qp(1) + LaurentPoly::one()));
    // q-shift normalization: (q^3+q)/(q^2) = q + q^-1
    CHECK(RatFunc(qp(3) + qp(1), qp(2)) == RatFunc(qint(2)));
    // sign normalization
    CHECK(RatFunc(qp(1), -qp(2) + LaurentPoly::one()) ==
          RatFunc(-qp(1), qp(2) - LaurentPoly::one()));
    // integer content
    CHECK(RatFunc(LaurentPoly(2) * qint(3), LaurentPoly(4)) ==
          RatFunc(qint(3), LaurentPoly(2)));
    CHECK(RatFunc(qint(3), qint(3)) == RatFunc::one());
}

TEST_CASE("RatFunc arithmetic and equality is value equality") {
    std::mt19937 gen(12345);
    auto rnd_poly = [&] {
        LaurentPoly p;
        std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4);
        for (int t = 0; t < 3; ++t) p.add_term(exp(gen), coeff(gen));
        return p;
    };
    for (int i = 0; i < 50; ++i) {
        LaurentPoly na = rnd_poly(), nb = rnd_poly();
        LaurentPoly da = rnd_poly(), db = rnd_poly();
        if (da.is_zero()) da = LaurentPoly::one();
        if (db.is_zero()) db = LaurentPoly::one();
        const RatFunc a(na, da), b(nb, db);
        CHECK(((a - b).is_zero() == (a == b)));
        // cross-multiplied equality agrees with representation equality
        CHECK(((a.num() * b.den() == b.num() * a.den()) == (a == b)));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    CHECK_THROWS_AS(RatFunc::one() / RatFunc::zero(), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(LaurentPoly::one(), LaurentPoly::zero()), DivisionByZero);
}

TEST_CASE("canonical text form") {
    LaurentPoly p = qp(2) + LaurentPoly(3) - qp(-1).scaled(2);
    CHECK(p.to_string() == "q^2 + 3 - 2*q^-1");
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(qint(2).to_string() == "q + q^-1");
    CHECK((-qint(2)).to_string() == "-q - q^-1");
}
