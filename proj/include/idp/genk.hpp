/**
 * @file genk.hpp
 * @brief Second divided powers for an arbitrary bar-invariant kappa: the
 *        diamond invariant, its integrality lemma, and the closed second
 *        divided powers in both weight parities.
 */
#ifndef IDP_GENK_HPP
#define IDP_GENK_HPP

#include <vector>

#include "idp/kappa.hpp"
#include "idp/pbw.hpp"
#include "idp/xpoly.hpp"

namespace idp {

class GenericKappa {
public:
    /// Throws std::invalid_argument unless value is bar-invariant.
    explicit GenericKappa(const LaurentPoly& value);

    const LaurentPoly& value() const { return value_; }

    /// diamond = sum_i (-1)^i c_{2i} over the even-exponent coefficients.
    long long diamond() const;

    friend bool operator==(const GenericKappa&, const GenericKappa&) = default;

private:
    LaurentPoly value_;
};

/// (kappa - diamond)/[2] lies in Z[q,q^-1]?
bool lemmaA_check(const GenericKappa& kappa);

struct SecondDividedPower {
    XPoly t_poly;    // (t^2 - d^2)/[2] or (t^2 - 1 + d^2)/[2]
    PBWElement pbw;  // its expansion in U
};

/// Second divided power for the given weight parity.
SecondDividedPower second_dp(const GenericKappa& kappa, Parity weight_parity);

/// The explicit closed PBW formula for the second divided power, built
/// term-by-term (independent of expand_in_t); equals second_dp(...).pbw.
PBWElement second_dp_explicit(const GenericKappa& kappa, Parity weight_parity);

/// The built-in bar-invariant test values: 0, [n] for 0 < |n| <= 5, and
/// three non-q-integer samples.
std::vector<GenericKappa> default_kappa_list();

} // namespace idp

#endif // IDP_GENK_HPP
