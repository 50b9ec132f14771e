#include <doctest.h>

#include "idp/qarith.hpp"
#include "idp/repmod.hpp"

using namespace idp;

namespace {

RatFunc qp(int e) { return RatFunc(LaurentPoly::q_power(e)); }

} // namespace

TEST_CASE("generator actions") {
    const SimpleModule m(4);
    const ModuleVector vplus = ModuleVector::highest(m);

    // K v+ = q^mu v+
    CHECK(act(PBWElement::k(1), vplus, m) == vplus.scaled(qp(4)));
    // E v+ = 0, Ec v+ = 0
    CHECK(act(PBWElement::e_undivided(1), vplus, m) == ModuleVector(m));
    CHECK(act(PBWElement::echeck(1), vplus, m) == ModuleVector(m));

    // F F^(b) v+ = [b+1] F^(b+1) v+, zero past b = mu
    for (int b = 0; b < 4; ++b) {
        const ModuleVector fv =
            act(PBWElement::f(1), ModuleVector::basis(m, b), m);
        CHECK(fv == ModuleVector::basis(m, b + 1).scaled(RatFunc(qint(b + 1))));
    }
    CHECK(act(PBWElement::f(1), ModuleVector::basis(m, 4), m) == ModuleVector(m));

    // E F^(b) v+ = [mu-b+1] F^(b-1) v+
    for (int b = 1; b <= 4; ++b) {
        const ModuleVector ev =
            act(PBWElement::e_undivided(1), ModuleVector::basis(m, b), m);
        CHECK(ev == ModuleVector::basis(m, b - 1).scaled(RatFunc(qint(4 - b + 1))));
    }

    CHECK_THROWS_AS(act(PBWElement::f(1), vplus, SimpleModule(7)), std::invalid_argument);
}

TEST_CASE("t action on the highest-weight vector") {
    for (int mu : {3, 6}) {
        const SimpleModule m(mu);
        const ModuleVector vplus = ModuleVector::highest(m);
        const KappaSpec kappa = KappaSpec::even_qint(2);
        const RatFunc kv(kappa.value());

        // t v+ = F v+ + q^-mu kappa v+
        ModuleVector expected(m);
        expected[1] = RatFunc::one();
        expected[0] = qp(-mu) * kv;
        CHECK(act(t_element(kappa), vplus, m) == expected);

        // t^2/[2] v+ = F^(2)v+ + q^{1-mu} kappa F v+
        //   + ((1-q^{-2mu})/(1-q^{-2}) + q^{-2mu} kappa^2)/(q+q^-1) v+
        const PBWElement t = t_element(kappa);
        const PBWElement t2 =
            multiply(t, t).scaled(RatFunc(LaurentPoly::one(), qint(2)));
        ModuleVector exp2(m);
        exp2[2] = RatFunc::one();
        exp2[1] = qp(1 - mu) * kv;
        const RatFunc geom(LaurentPoly::one() - LaurentPoly::q_power(-2 * mu),
                           LaurentPoly::one() - LaurentPoly::q_power(-2));
        exp2[0] = (geom + qp(-2 * mu) * kv * kv) * RatFunc(LaurentPoly::one(), qint(2));
        CHECK(act(t2, vplus, m) == exp2);
    }
}

TEST_CASE("closed action equals generic action") {
    for (const ParityRegime regime : kAllRegimes)
        for (int ell = -1; ell <= 1; ++ell) {
            const KappaSpec kappa = kappa_for(regime, ell);
            for (int n = 0; n <= 4; ++n) {
                const PBWElement x = divided_expansion(n, regime, kappa, SumOrder::EhF);
                for (int lambda = 0; lambda <= 5; ++lambda) {
                    const int mu =
                        regime.weight == Parity::Even ? 2 * lambda : 2 * lambda + 1;
                    const SimpleModule m(mu);
                    CHECK(divided_action_closed(n, regime, ell, lambda) ==
                          act(x, ModuleVector::highest(m), m));
                }
            }
        }
}

TEST_CASE("leading coefficients of the closed action") {
    // highest entry is p^(0) cbinom(m-lambda, 0) = 1 once the module is big enough
    for (const ParityRegime regime : kAllRegimes)
        for (int n = 0; n <= 5; ++n)
            for (int lambda = n; lambda <= n + 2; ++lambda) {
                const ModuleVector v = divided_action_closed(n, regime, 1, lambda);
                CHECK(v[n] == RatFunc::one());
            }
}

TEST_CASE("integrality_check") {
    // dv-powers preserve the A-form (small sample; the suite covers the grid)
    const KappaSpec kappa = KappaSpec::even_qint(1);
    const PBWElement x = divided_expansion(3, kEvenEven, kappa, SumOrder::EhF);
    CHECK(integrality_check(x, Parity::Even, 10));

    // 1/[2] is not integral on any module
    IntegralityWitness w;
    const PBWElement probe =
        PBWElement::one().scaled(RatFunc(LaurentPoly::one(), qint(2)));
    CHECK(!integrality_check(probe, Parity::Even, 10, &w));
    CHECK(w.mu == 0);
    CHECK(!w.value.is_integral());
}

TEST_CASE("icb_lattice_check") {
    const SimpleModule m(6);
    // unit vector at index n passes
    CHECK(icb_lattice_check(ModuleVector::basis(m, 3), 3).ok);

    // nonzero entry above the leading index fails
    ModuleVector above = ModuleVector::basis(m, 3);
    above[4] = RatFunc::one();
    CHECK(!icb_lattice_check(above, 3).ok);
    CHECK(icb_lattice_check(above, 3).witness_index == 4);

    // q^-1 Z[q^-1] entries below pass, a constant term fails
    ModuleVector good = ModuleVector::basis(m, 3);
    good[1] = qp(-2) - qp(-1);
    CHECK(icb_lattice_check(good, 3).ok);
    ModuleVector bad = ModuleVector::basis(m, 3);
    bad[1] = qp(-2) + RatFunc::one();
    CHECK(!icb_lattice_check(bad, 3).ok);
    CHECK(icb_lattice_check(bad, 3).witness_index == 1);

    // non-integral entry fails
    ModuleVector frac = ModuleVector::basis(m, 3);
    frac[0] = RatFunc(LaurentPoly::one(), qint(2));
    CHECK(!icb_lattice_check(frac, 3).ok);
}

TEST_CASE("negative witness of the remark") {
    // ell >= 1, ell-1 >= lambda-m >= 0: entry 2m-1 equals q^{2m-2lambda-1} kappa,
    // which has a nonnegative q-power, so (iCB2) fails
    const int ell = 1, m = 1, lambda = 1;
    const ModuleVector v = divided_action_closed(2 * m, kEvenEven, ell, lambda);
    CHECK(v[2 * m - 1] == qp(2 * m - 2 * lambda - 1) * RatFunc(qint(2 * ell)));
    const LatticeResult res = icb_lattice_check(v, 2 * m);
    CHECK(!res.ok);
    CHECK(res.witness_index == 2 * m - 1);
}

TEST_CASE("find_lattice_threshold") {
    // kappa = 0: dvev(n) v+ is canonical for every lambda with 2 lambda >= n
    for (int n = 0; n <= 4; ++n) {
        const auto lambda = find_lattice_threshold(n, kEvenEven, 0, n + 12);
        REQUIRE(lambda.has_value());
        CHECK(*lambda == (n + 1) / 2);
    }
    // the negative witness forces the threshold above ell + m - 1 for ell >= 1
    const auto lambda = find_lattice_threshold(2, kEvenEven, 1, 20);
    REQUIRE(lambda.has_value());
    CHECK(*lambda >= 2);
}
