/**
 * @file pbw.hpp
 * @brief PBW normal forms for quantum sl2.
 *
 * Every element is a finite sum of monomials Ec^(a) K^s F^(b) with Q(q)
 * coefficients, where Ec = q^-1 E K^-1 and the exponents a, b are
 * divided-power indices. The PBW basis theorem makes this form unique, so
 * equality of elements is equality of term maps.
 */
#ifndef IDP_PBW_HPP
#define IDP_PBW_HPP

#include <map>
#include <string>

#include "idp/ratfunc.hpp"

namespace idp {

/// Monomial Ec^(a) K^s F^(b); a, b >= 0.
struct PBWKey {
    int a = 0;
    int s = 0;
    int b = 0;

    friend bool operator==(const PBWKey&, const PBWKey&) = default;
};

/// Deterministic term order (a, b, s), the serialization order.
struct PBWKeyLess {
    bool operator()(const PBWKey& x, const PBWKey& y) const {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.s < y.s;
    }
};

class PBWElement {
public:
    using Terms = std::map<PBWKey, RatFunc, PBWKeyLess>;

    PBWElement() = default;

    static PBWElement zero() { return PBWElement(); }
    static PBWElement one() { return monomial({0, 0, 0}, RatFunc::one()); }
    static PBWElement monomial(const PBWKey& k, const RatFunc& c);

    /// Ec^(n) (divided power), n >= 0.
    static PBWElement echeck(int n = 1);
    /// F^(n) (divided power), n >= 0.
    static PBWElement f(int n = 1);
    /// K^s, any integer s.
    static PBWElement k(int s = 1);
    /// Undivided E^(n) = q^{n^2} Ec^(n) K^n.
    static PBWElement e_undivided(int n = 1);
    /// h = (K^-2 - 1)/(q^2 - 1).
    static PBWElement h();

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    RatFunc coeff(const PBWKey& k) const;
    /// True iff every monomial is K-only (a == b == 0).
    bool is_cartan_only() const;

    void add_term(const PBWKey& k, const RatFunc& c);

    PBWElement operator-() const;
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }

    PBWElement scaled(const RatFunc& c) const;

    friend bool operator==(const PBWElement& a, const PBWElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    Terms terms_;
};

/// Product in normal form (bilinear; monomials reordered via the
/// commutation rules and F Ec^(n) rewriting).
PBWElement multiply(const PBWElement& x, const PBWElement& y);

/// Normal form of F * Ec^(n):
/// q^{-2n} Ec^(n) F + Ec^(n-1) (q^{3-3n} K^-2 - q^{1-n})/(q^2 - 1).
PBWElement reorder_FE(int n);

/// (h;a n) = prod_{i=1..n} (q^{4a+4i-4} K^-2 - 1)/(q^{4i} - 1), expanded
/// into K-powers.
PBWElement hbinom(int a, int n);

/// <h;a n> = prod_{i=1..n} (q^{4a+4i-4} K^-2 - q^2)/(q^{4i} - 1).
PBWElement hbrace(int a, int n);

enum class Side { F, Echeck };

/// For Cartan-only e: the element e' with e * X^(n) = X^(n) * e', where X is
/// F or Ec. Rejects non-Cartan input.
PBWElement commute_cartan(const PBWElement& e, Side side, int n);

/// The Q-algebra anti-involution fixing F, Ec, K^-1 and inverting q.
PBWElement apply_sigma(const PBWElement& x);

/// b^(n) = sum_{a=0..n} q^{-a(n-a)} Ec^(a) F^(n-a).
PBWElement b_helper(int n);

} // namespace idp

#endif // IDP_PBW_HPP
