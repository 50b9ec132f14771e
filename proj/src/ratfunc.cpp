#include "idp/ratfunc.hpp"

#include <sstream>

namespace idp {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    if (!den_.is_one()) {
        const LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    // Units +-q^k: normalize den to a Z[q] polynomial with nonzero constant
    // term and positive leading coefficient; num absorbs the q-shift.
    const int beta = den_.min_exp();
    den_ = den_.shifted(-beta);
    num_ = num_.shifted(-beta);
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    if (a.is_zero()) return RatFunc::zero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r = RatFunc::one();
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::bar() const {
    if (is_zero()) return RatFunc::zero();
    return RatFunc(num_.bar(), den_.bar());
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

bool RatFunc::display_negative() const {
    return num_.leading_coeff() < 0;
}

} // namespace idp
