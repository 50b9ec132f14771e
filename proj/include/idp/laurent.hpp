/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in q with arbitrary-precision integer
 *        coefficients, i.e. elements of Z[q, q^-1].
 *
 * Coefficients are stored sparsely as exponent -> mpz_class; zero
 * coefficients are never stored, so structural equality is value equality.
 */
#ifndef IDP_LAURENT_HPP
#define IDP_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace idp {

using BigInt = mpz_class;

class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>; // exponent -> nonzero coefficient

    LaurentPoly() = default;
    LaurentPoly(long v) { if (v != 0) terms_[0] = v; } // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigInt& v) { if (v != 0) terms_[0] = v; } // NOLINT

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    /// q^e
    static LaurentPoly q_power(int e) { return monomial(e, 1); }
    static LaurentPoly monomial(int e, const BigInt& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Number of stored (nonzero) terms.
    std::size_t size() const { return terms_.size(); }

    /// Smallest/largest exponent with nonzero coefficient. Zero polynomial: 0.
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Coefficient of q^e (zero if absent).
    BigInt coeff(int e) const;
    /// Coefficient of the highest power of q. Zero polynomial: 0.
    BigInt leading_coeff() const;

    const Terms& terms() const { return terms_; }

    void add_term(int e, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BigInt& c) const;
    /// Multiply by q^k.
    LaurentPoly shifted(int k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    /// Lexicographic order on the term maps; only used for deterministic sorting.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    /// The bar involution q -> q^-1 (negates every exponent).
    LaurentPoly bar() const;
    bool is_bar_invariant() const { return bar() == *this; }

    /// True iff every coefficient is >= 0.
    bool all_coeffs_nonneg() const;
    /// True iff the polynomial lies in Z[q^-1] (no positive exponents).
    bool in_z_qinv() const { return terms_.empty() || max_exp() <= 0; }
    /// True iff the polynomial lies in q^-1 Z[q^-1] (all exponents <= -1).
    bool in_qinv_z_qinv() const { return terms_.empty() || max_exp() <= -1; }

    /// gcd of all coefficients (nonnegative); zero polynomial: 0.
    BigInt content() const;

    /// Canonical text form, terms by descending exponent: "q^2 + 3 - 2*q^-1".
    std::string to_string() const;

private:
    Terms terms_;
};

/// Exact division a / b in Z[q, q^-1]; throws IntegralityViolation if b does
/// not divide a exactly.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[q] up to units +-q^k, returned with min_exp() == 0 and positive
/// leading coefficient. gcd(0,0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace idp

#endif // IDP_LAURENT_HPP
