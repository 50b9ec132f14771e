/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions num/den over Z[q, q^-1]: the field Q(q).
 *
 * Representations are canonical: num and den are coprime after clearing
 * q-powers, den has min_exp() == 0 wherever possible (never negative) and a
 * positive leading coefficient, and the integer content of (num, den) is 1.
 * Hence two RatFunc are equal as values iff their representations compare
 * equal member-wise.
 */
#ifndef IDP_RATFUNC_HPP
#define IDP_RATFUNC_HPP

#include <string>

#include "idp/errors.hpp"
#include "idp/laurent.hpp"

namespace idp {

class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(long v) : num_(v), den_(LaurentPoly::one()) {} // NOLINT(google-explicit-constructor)
    RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {} // NOLINT
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True iff the reduced denominator is 1, i.e. the value lies in Z[q,q^-1].
    bool is_integral() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const;
    RatFunc pow(long e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// The bar involution q -> q^-1, re-normalized.
    RatFunc bar() const;
    bool is_bar_invariant() const { return bar() == *this; }

    /// "num" when den == 1, otherwise "(num)/(den)".
    std::string to_string() const;

    /// Display sign: sign of the leading numerator coefficient (cosmetic only).
    bool display_negative() const;

private:
    void reduce();

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace idp

#endif // IDP_RATFUNC_HPP
