/**
 * @file idivided.hpp
 * @brief The i-divided powers of the coideal generator t = F + Ec + kappa K^-1,
 *        built three ways per parity regime: by recursion, by the closed
 *        product formula in t, and by the triple-sum expansion in U (in both
 *        the Ec..F and F..Ec orderings).
 *
 * The four regimes are indexed by (weight parity, kappa parity):
 *   even/even "dvev", odd/even "dv", even/odd "dvp", odd/odd "dvd".
 * Regimes with matching parities share one recursion pattern, the other two
 * share the alternate pattern; the two patterns swap which recursion step
 * carries the lower-order correction term.
 */
#ifndef IDP_IDIVIDED_HPP
#define IDP_IDIVIDED_HPP

#include <string>
#include <vector>

#include "idp/kappa.hpp"
#include "idp/pbw.hpp"
#include "idp/xpoly.hpp"

namespace idp {

struct ParityRegime {
    Parity weight;
    Parity kappa;

    friend bool operator==(const ParityRegime&, const ParityRegime&) = default;

    /// Family symbol: dvev, dv, dvp, dvd.
    const char* family_name() const;
    /// CLI spelling: even-even, odd-even, even-odd, odd-odd.
    std::string cli_name() const;
};

inline constexpr ParityRegime kEvenEven{Parity::Even, Parity::Even};
inline constexpr ParityRegime kOddEven{Parity::Odd, Parity::Even};
inline constexpr ParityRegime kEvenOdd{Parity::Even, Parity::Odd};
inline constexpr ParityRegime kOddOdd{Parity::Odd, Parity::Odd};

inline constexpr ParityRegime kAllRegimes[] = {kEvenEven, kOddEven, kEvenOdd, kOddOdd};

/// Parses "even-even" etc.; throws std::invalid_argument.
ParityRegime parse_regime(const std::string& name);

/// The regime's q-integer kappa at parameter l: [2l] or [2l-1].
KappaSpec kappa_for(const ParityRegime& regime, int ell);

enum class SumOrder { EhF, FhE };

/// t = F + Ec + kappa K^-1.
PBWElement t_element(const KappaSpec& kappa);

/// n-th divided power via the regime's two-step recursion. Requires a
/// q-integer kappa of the regime's parity.
PBWElement divided_recursive(int n, const ParityRegime& regime, const KappaSpec& kappa);

/// Closed product formula as a polynomial in t (coefficients in Q(q),
/// bar-invariant).
XPoly divided_closed_t(int n, const ParityRegime& regime);

/// Substitutes t := t_element(kappa) into a polynomial in t.
PBWElement expand_in_t(const XPoly& poly_in_t, const KappaSpec& kappa);

/// Triple-sum expansion in PBW normal form, in the requested ordering.
/// Requires a q-integer kappa of the regime's parity.
PBWElement divided_expansion(int n, const ParityRegime& regime, const KappaSpec& kappa,
                             SumOrder order);

/// Coefficients of the n-th divided power as a polynomial in kappa:
/// entry d is the PBW element multiplying kappa^d. Computed by exact
/// Lagrange interpolation through n+1 q-integer nodes of the regime parity.
std::vector<PBWElement> kappa_decomposition(int n, const ParityRegime& regime);

} // namespace idp

#endif // IDP_IDIVIDED_HPP
