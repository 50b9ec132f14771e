/**
 * @file xpoly.hpp
 * @brief Dense polynomials in one commuting indeterminate over Q(q), and the
 *        auxiliary polynomial families used by the divided-power expansions.
 */
#ifndef IDP_XPOLY_HPP
#define IDP_XPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "idp/kappa.hpp"
#include "idp/ratfunc.hpp"

namespace idp {

class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static XPoly zero() { return XPoly(); }
    static XPoly one() { return constant(RatFunc::one()); }
    static XPoly constant(const RatFunc& c);
    /// The indeterminate x.
    static XPoly x();
    static XPoly monic_linear(const RatFunc& root); // x - root

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    RatFunc coeff(int d) const;
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    XPoly scaled(const RatFunc& c) const;

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    RatFunc eval(const RatFunc& x) const;

    /// Every coefficient bar-invariant?
    bool coeffs_bar_invariant() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<RatFunc> coeffs_; // index = degree
};

/// p_n: p_{n+1} = x p_n + q^{1-2n} [n][n-1] p_{n-1}, p_0 = 1, p_n = 0 (n<0).
const XPoly& p_poly(int n);

/// frak-p_n: p_{n+1} = x p_n + q^{2-2n} [n][n-2] p_{n-1}, same conventions.
const XPoly& frak_p_poly(int n);

/// g_{2m} = prod_{i=0..m-1} (x^2 - [2i]^2); g_{2m+1} = x prod_{i=1..m} (x^2 - [2i]^2).
const XPoly& g_poly(int n);

/// frak-g_{2m} = prod_{i=1..m} (x^2 - [2i-1]^2); odd case has a leading x.
const XPoly& frak_g_poly(int n);

/// p / [n]!.
XPoly divided(const XPoly& p, int n);

struct ExpansionTerm {
    int shift = 0;   // the summation index a; the target family index is n - 2a
    RatFunc coeff;
};

/// Coefficients of p^(n) in the g^(.) family:
///   n = 2m:   sum_a q^{(1-2m)a} [m-1 over a]_{q^2} g^(2m-2a)
///   n = 2m-1: sum_a q^{(3-2m)a} [m-1 over a]_{q^2} g^(2m-2a-1)
std::vector<ExpansionTerm> p_in_g_expansion(int n);

/// Coefficients of frak-p^(n) in the frak-g^(.) family:
///   n = 2m:   sum_a q^{(3-2m)a} [m-1 over a]_{q^2} fg^(2m-2a)
///   n = 2m+1: sum_a q^{(1-2m)a} [m-1 over a]_{q^2} fg^(2m-2a+1)
std::vector<ExpansionTerm> frakp_in_frakg_expansion(int n);

struct KappaValue {
    RatFunc value;
    bool integral = false; // reduced denominator is 1
};

/// Substitute x := kappa.value.
KappaValue eval_kappa(const XPoly& p, const KappaSpec& kappa);

} // namespace idp

#endif // IDP_XPOLY_HPP
