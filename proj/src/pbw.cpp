#include "idp/pbw.hpp"

#include <sstream>
#include <stdexcept>

#include "idp/qarith.hpp"

namespace idp {

PBWElement PBWElement::monomial(const PBWKey& k, const RatFunc& c) {
    PBWElement e;
    e.add_term(k, c);
    return e;
}

PBWElement PBWElement::echeck(int n) {
    if (n < 0) throw std::domain_error("echeck: negative divided-power exponent");
    return monomial({n, 0, 0}, RatFunc::one());
}

PBWElement PBWElement::f(int n) {
    if (n < 0) throw std::domain_error("f: negative divided-power exponent");
    return monomial({0, 0, n}, RatFunc::one());
}

PBWElement PBWElement::k(int s) { return monomial({0, s, 0}, RatFunc::one()); }

PBWElement PBWElement::e_undivided(int n) {
    if (n < 0) throw std::domain_error("e_undivided: negative exponent");
    return monomial({n, n, 0}, RatFunc(LaurentPoly::q_power(n * n)));
}

PBWElement PBWElement::h() {
    const RatFunc d(LaurentPoly::one(), LaurentPoly::q_power(2) - LaurentPoly::one()); // 1/(q^2-1)
    PBWElement e;
    e.add_term({0, -2, 0}, d);
    e.add_term({0, 0, 0}, -d);
    return e;
}

RatFunc PBWElement::coeff(const PBWKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc::zero() : it->second;
}

bool PBWElement::is_cartan_only() const {
    for (const auto& [k, c] : terms_)
        if (k.a != 0 || k.b != 0) return false;
    return true;
}

void PBWElement::add_term(const PBWKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWElement PBWElement::operator-() const {
    PBWElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

PBWElement PBWElement::scaled(const RatFunc& c) const {
    PBWElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

namespace {

RatFunc qpow(long e) { return RatFunc(LaurentPoly::q_power(static_cast<int>(e))); }

// F * x, x in normal form. Uses F Ec^(a) = q^{-2a} Ec^(a) F
//   + Ec^(a-1) (q^{3-3a} K^-2 - q^{1-a})/(q^2 - 1),
// then F K^s = q^{2s} K^s F and F F^(b) = [b+1] F^(b+1).
PBWElement mul_f_left(const PBWElement& x) {
    static const RatFunc inv_q2m1 = RatFunc(LaurentPoly::one(), LaurentPoly::q_power(2) - LaurentPoly::one());
    PBWElement r;
    for (const auto& [k, c] : x.terms()) {
        r.add_term({k.a, k.s, k.b + 1},
                   c * qpow(-2 * k.a + 2 * k.s) * RatFunc(qint(k.b + 1)));
        if (k.a >= 1) {
            r.add_term({k.a - 1, k.s - 2, k.b}, c * qpow(3 - 3 * k.a) * inv_q2m1);
            r.add_term({k.a - 1, k.s, k.b}, -(c * qpow(1 - k.a) * inv_q2m1));
        }
    }
    return r;
}

PBWElement mul_k_left(const PBWElement& x, int s) {
    if (s == 0) return x;
    PBWElement r;
    for (const auto& [k, c] : x.terms())
        r.add_term({k.a, k.s + s, k.b}, c * qpow(2L * k.a * s));
    return r;
}

PBWElement mul_echeck_left(const PBWElement& x, int a) {
    if (a == 0) return x;
    PBWElement r;
    for (const auto& [k, c] : x.terms())
        r.add_term({k.a + a, k.s, k.b}, c * qbinom(k.a + a, a));
    return r;
}

} // namespace

PBWElement multiply(const PBWElement& x, const PBWElement& y) {
    PBWElement r;
    for (const auto& [k, c] : x.terms()) {
        PBWElement t = y;
        for (int i = 0; i < k.b; ++i) t = mul_f_left(t);
        if (k.b > 1) t = t.scaled(RatFunc(LaurentPoly::one(), qfact(k.b)));
        t = mul_k_left(t, k.s);
        t = mul_echeck_left(t, k.a);
        r += t.scaled(c);
    }
    return r;
}

PBWElement reorder_FE(int n) {
    if (n < 0) throw std::domain_error("reorder_FE: negative exponent");
    PBWElement r;
    r.add_term({n, 0, 1}, qpow(-2 * n));
    if (n >= 1) {
        const RatFunc inv_q2m1(LaurentPoly::one(), LaurentPoly::q_power(2) - LaurentPoly::one());
        r.add_term({n - 1, -2, 0}, qpow(3 - 3 * n) * inv_q2m1);
        r.add_term({n - 1, 0, 0}, -(qpow(1 - n) * inv_q2m1));
    }
    return r;
}

namespace {

// prod_{i=1..n} (q^{e0 + 4i} K^-2 - top)/(q^{4i} - 1) expanded in K-powers.
PBWElement cartan_product(int e0, const LaurentPoly& top, int n) {
    PBWElement r = PBWElement::one();
    for (int i = 1; i <= n; ++i) {
        const RatFunc den(LaurentPoly::one(),
                          LaurentPoly::q_power(4 * i) - LaurentPoly::one());
        PBWElement next;
        for (const auto& [k, c] : r.terms()) {
            next.add_term({0, k.s - 2, 0},
                          c * RatFunc(LaurentPoly::q_power(e0 + 4 * i)) * den);
            next.add_term({0, k.s, 0}, -(c * RatFunc(top) * den));
        }
        r = next;
    }
    return r;
}

} // namespace

PBWElement hbinom(int a, int n) {
    if (n < 0) throw std::domain_error("hbinom: negative exponent");
    return cartan_product(4 * a - 4, LaurentPoly::one(), n);
}

PBWElement hbrace(int a, int n) {
    if (n < 0) throw std::domain_error("hbrace: negative exponent");
    return cartan_product(4 * a - 4, LaurentPoly::q_power(2), n);
}

PBWElement commute_cartan(const PBWElement& e, Side side, int n) {
    if (!e.is_cartan_only())
        throw std::invalid_argument("commute_cartan: element has Ec or F part");
    const int dir = (side == Side::F) ? -1 : +1;
    PBWElement r;
    for (const auto& [k, c] : e.terms())
        r.add_term(k, c * qpow(2L * dir * k.s * n));
    return r;
}

PBWElement apply_sigma(const PBWElement& x) {
    PBWElement r;
    for (const auto& [k, c] : x.terms()) {
        // sigma(c * Ec^(a) K^s F^(b)) = bar(c) * F^(b) K^s Ec^(a)
        PBWElement m = multiply(PBWElement::k(k.s), PBWElement::echeck(k.a));
        m = multiply(PBWElement::f(k.b), m);
        r += m.scaled(c.bar());
    }
    return r;
}

PBWElement b_helper(int n) {
    if (n < 0) throw std::domain_error("b_helper: negative index");
    PBWElement r;
    for (int a = 0; a <= n; ++a)
        r.add_term({a, 0, n - a}, qpow(-static_cast<long>(a) * (n - a)));
    return r;
}

std::string PBWElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        if (k.a == 1)
            mono += "Ec";
        else if (k.a > 1)
            mono += "Ec^(" + std::to_string(k.a) + ")";
        if (k.s != 0) {
            if (!mono.empty()) mono += " ";
            mono += (k.s == 1) ? "K" : "K^" + std::to_string(k.s);
        }
        if (k.b >= 1) {
            if (!mono.empty()) mono += " ";
            mono += (k.b == 1) ? "F" : "F^(" + std::to_string(k.b) + ")";
        }

        const bool neg = c.display_negative();
        const RatFunc shown = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string cs = shown.to_string();
        const bool one_coeff = shown.is_one();
        const bool needs_parens =
            !shown.is_integral() || shown.num().size() > 1;
        if (mono.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (one_coeff) {
            os << mono;
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs) << " " << mono;
        }
    }
    return os.str();
}

} // namespace idp
