#include "idp/genk.hpp"

#include <stdexcept>

#include "idp/idivided.hpp"
#include "idp/qarith.hpp"

namespace idp {

GenericKappa::GenericKappa(const LaurentPoly& value) : value_(value) {
    if (!value_.is_bar_invariant())
        throw std::invalid_argument("GenericKappa: not bar-invariant: " + value_.to_string());
}

long long GenericKappa::diamond() const {
    BigInt d = 0;
    for (const auto& [e, c] : value_.terms()) {
        if (e % 2 != 0) continue;
        const int i = e / 2;
        if (i % 2 == 0)
            d += c;
        else
            d -= c;
    }
    if (!d.fits_slong_p()) throw std::overflow_error("diamond: out of integer range");
    return d.get_si();
}

bool lemmaA_check(const GenericKappa& kappa) {
    const RatFunc r(kappa.value() - LaurentPoly(kappa.diamond()), qint(2));
    return r.is_integral();
}

SecondDividedPower second_dp(const GenericKappa& kappa, Parity weight_parity) {
    const long long d = kappa.diamond();
    const RatFunc d2(LaurentPoly(d) * LaurentPoly(d));
    const RatFunc inv2(LaurentPoly::one(), qint(2));
    // (t^2 - d^2)/[2] for even weights, (t^2 - 1 + d^2)/[2] for odd
    const RatFunc c0 = (weight_parity == Parity::Even) ? -d2 * inv2 : (d2 - RatFunc::one()) * inv2;
    XPoly t_poly({c0, RatFunc::zero(), inv2});
    PBWElement pbw = expand_in_t(t_poly, KappaSpec::generic(kappa.value()));
    return {std::move(t_poly), std::move(pbw)};
}

PBWElement second_dp_explicit(const GenericKappa& kappa, Parity weight_parity) {
    const RatFunc kv(kappa.value());
    const long long d = kappa.diamond();
    const RatFunc d2(LaurentPoly(d) * LaurentPoly(d));
    const RatFunc qinv(LaurentPoly::q_power(-1));

    PBWElement r;
    r.add_term({2, 0, 0}, RatFunc::one());
    r.add_term({1, 0, 1}, qinv);
    r.add_term({0, 0, 2}, RatFunc::one());
    r.add_term({0, -1, 1}, qinv * kv);
    r.add_term({1, -1, 0}, qinv * kv);

    // (q + (q^3 - q) kappa^2) / (q^4 - 1), times K^-2 - 1 resp. K^-2 - q^2
    const RatFunc hcoeff =
        (RatFunc(LaurentPoly::q_power(1)) +
         RatFunc(LaurentPoly::q_power(3) - LaurentPoly::q_power(1)) * kv * kv) *
        RatFunc(LaurentPoly::one(), LaurentPoly::q_power(4) - LaurentPoly::one());
    const RatFunc inv2(LaurentPoly::one(), qint(2));

    r.add_term({0, -2, 0}, hcoeff);
    if (weight_parity == Parity::Even) {
        r.add_term({0, 0, 0}, -hcoeff + (kv * kv - d2) * inv2);
    } else {
        r.add_term({0, 0, 0}, -hcoeff * RatFunc(LaurentPoly::q_power(2)) +
                                  (kv * kv - d2) * inv2 * RatFunc(LaurentPoly::q_power(2)) +
                                  d2 * RatFunc(LaurentPoly::q_power(1)));
    }
    return r;
}

std::vector<GenericKappa> default_kappa_list() {
    std::vector<GenericKappa> list;
    list.emplace_back(LaurentPoly::zero());
    for (int n = 1; n <= 5; ++n) {
        list.emplace_back(qint(n));
        list.emplace_back(qint(-n));
    }
    list.emplace_back(parse_laurent("q^2 + 1 + q^-2"));
    list.emplace_back(parse_laurent("2*q^4 + 1 + 2*q^-4"));
    list.emplace_back(parse_laurent("q^6 + q^2 + q^-2 + q^-6"));
    return list;
}

} // namespace idp
