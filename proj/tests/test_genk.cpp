#include <doctest.h>

#include "idp/genk.hpp"
#include "idp/idivided.hpp"
#include "idp/qarith.hpp"
#include "idp/repmod.hpp"

using namespace idp;

TEST_CASE("diamond invariant") {
    // [n]: 0 for n even, +1 for n = 1 mod 4, -1 for n = -1 mod 4
    CHECK(GenericKappa(qint(0)).diamond() == 0);
    CHECK(GenericKappa(qint(2)).diamond() == 0);
    CHECK(GenericKappa(qint(-4)).diamond() == 0);
    CHECK(GenericKappa(qint(1)).diamond() == 1);
    CHECK(GenericKappa(qint(5)).diamond() == 1);
    CHECK(GenericKappa(qint(3)).diamond() == -1);
    CHECK(GenericKappa(qint(-1)).diamond() == -1);
    CHECK(GenericKappa(qint(-5)).diamond() == -1);

    // [3] = q^2 + 1 + q^-2 -> -1 + 1 - 1 = -1
    CHECK(GenericKappa(parse_laurent("q^2 + 1 + q^-2")).diamond() == -1);
    // no even-exponent terms
    CHECK(GenericKappa(parse_laurent("q^3 + q^-3")).diamond() == 0);
    CHECK(GenericKappa(parse_laurent("2*q^4 + 1 + 2*q^-4")).diamond() == 5);

    CHECK_THROWS_AS(GenericKappa(parse_laurent("q^2 + 1")), std::invalid_argument);
}

TEST_CASE("Lemma A") {
    for (const GenericKappa& kappa : default_kappa_list()) CHECK(lemmaA_check(kappa));
    // explicit: kappa = 2q^2 + 3 + 2q^-2, diamond = -1, (kappa+1)/[2] in A
    const GenericKappa kappa(parse_laurent("2*q^2 + 3 + 2*q^-2"));
    CHECK(kappa.diamond() == -1);
    CHECK(lemmaA_check(kappa));
    const RatFunc check(kappa.value() + LaurentPoly::one(), qint(2));
    CHECK(check.is_integral());
}

TEST_CASE("second divided power against the explicit formula") {
    for (const GenericKappa& kappa : default_kappa_list()) {
        for (const Parity parity : {Parity::Even, Parity::Odd}) {
            const SecondDividedPower dp = second_dp(kappa, parity);
            CHECK(dp.pbw == second_dp_explicit(kappa, parity));
            CHECK(dp.t_poly.coeffs_bar_invariant());
            CHECK(dp.t_poly.degree() == 2);
        }
    }
}

TEST_CASE("q-integer specialization at n = 2") {
    for (int n = -6; n <= 6; ++n) {
        const GenericKappa kappa(qint(n));
        if (n % 2 == 0) {
            const int ell = n / 2;
            CHECK(second_dp(kappa, Parity::Even).pbw ==
                  divided_recursive(2, kEvenEven, KappaSpec::even_qint(ell)));
            CHECK(second_dp(kappa, Parity::Odd).pbw ==
                  divided_recursive(2, kOddEven, KappaSpec::even_qint(ell)));
        } else {
            const int ell = (n + 1) / 2;
            CHECK(second_dp(kappa, Parity::Even).pbw ==
                  divided_recursive(2, kEvenOdd, KappaSpec::odd_qint(ell)));
            CHECK(second_dp(kappa, Parity::Odd).pbw ==
                  divided_recursive(2, kOddOdd, KappaSpec::odd_qint(ell)));
        }
    }
}

TEST_CASE("integrality and lattice membership for the test list") {
    for (const GenericKappa& kappa : default_kappa_list()) {
        for (const Parity parity : {Parity::Even, Parity::Odd}) {
            const SecondDividedPower dp = second_dp(kappa, parity);
            CHECK(integrality_check(dp.pbw, parity, 8));
            bool found = false;
            for (int lambda = 1; lambda <= 12 && !found; ++lambda) {
                const int mu = parity == Parity::Even ? 2 * lambda : 2 * lambda + 1;
                const SimpleModule m(mu);
                const ModuleVector v = act(dp.pbw, ModuleVector::highest(m), m);
                found = icb_lattice_check(v, 2).ok;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("default kappa list composition") {
    const auto list = default_kappa_list();
    CHECK(list.size() == 14); // 0, +-[1..5], three non-q-integers
    CHECK(list.front().value().is_zero());
}
