#include "idp/xpoly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "idp/qarith.hpp"

namespace idp {

XPoly XPoly::constant(const RatFunc& c) {
    XPoly p;
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

XPoly XPoly::x() {
    XPoly p;
    p.coeffs_ = {RatFunc::zero(), RatFunc::one()};
    return p;
}

XPoly XPoly::monic_linear(const RatFunc& root) {
    XPoly p;
    p.coeffs_ = {-root, RatFunc::one()};
    return p;
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc XPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return RatFunc::zero();
    return coeffs_[static_cast<std::size_t>(d)];
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<RatFunc> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.coeffs_.size()) r[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) r[i] += b.coeffs_[i];
    }
    return XPoly(std::move(r));
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly::zero();
    std::vector<RatFunc> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return XPoly(std::move(r));
}

XPoly XPoly::scaled(const RatFunc& c) const {
    if (c.is_zero()) return XPoly::zero();
    XPoly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

RatFunc XPoly::eval(const RatFunc& x) const {
    RatFunc r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

bool XPoly::coeffs_bar_invariant() const {
    for (const auto& c : coeffs_)
        if (!c.is_bar_invariant()) return false;
    return true;
}

std::string XPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const RatFunc& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        const bool neg = c.display_negative();
        const RatFunc shown = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string cs = shown.to_string();
        const bool needs_parens = !shown.is_integral() || shown.num().size() > 1;
        std::string xs;
        if (d == 1)
            xs = var;
        else if (d > 1)
            xs = var + "^" + std::to_string(d);
        if (xs.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else if (shown.is_one()) {
            os << xs;
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs) << "*" << xs;
        }
    }
    return os.str();
}

const XPoly& p_poly(int n) {
    static const XPoly kZero;
    if (n < 0) return kZero;
    thread_local std::map<int, XPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (cache.empty()) cache.emplace(0, XPoly::one());
    int built = cache.rbegin()->first;
    while (built < n) {
        // p_{k+1} = x p_k + q^{1-2k} [k][k-1] p_{k-1}
        const int k = built;
        const XPoly& pk = cache.at(k);
        const XPoly pk1 = (k >= 1) ? cache.at(k - 1) : XPoly::zero();
        const RatFunc factor(qint(k) * qint(k - 1) * LaurentPoly::q_power(1 - 2 * k));
        cache.emplace(k + 1, XPoly::x() * pk + pk1.scaled(factor));
        ++built;
    }
    return cache.at(n);
}

const XPoly& frak_p_poly(int n) {
    static const XPoly kZero;
    if (n < 0) return kZero;
    thread_local std::map<int, XPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (cache.empty()) cache.emplace(0, XPoly::one());
    int built = cache.rbegin()->first;
    while (built < n) {
        // fp_{k+1} = x fp_k + q^{2-2k} [k][k-2] fp_{k-1}
        const int k = built;
        const XPoly& pk = cache.at(k);
        const XPoly pk1 = (k >= 1) ? cache.at(k - 1) : XPoly::zero();
        const RatFunc factor(qint(k) * qint(k - 2) * LaurentPoly::q_power(2 - 2 * k));
        cache.emplace(k + 1, XPoly::x() * pk + pk1.scaled(factor));
        ++built;
    }
    return cache.at(n);
}

namespace {

// x^2 - root^2
XPoly square_factor(const LaurentPoly& root) {
    return XPoly::x() * XPoly::x() - XPoly::constant(RatFunc(root * root));
}

} // namespace

const XPoly& g_poly(int n) {
    if (n < 0) throw std::domain_error("g_poly: negative index");
    thread_local std::map<int, XPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    XPoly r = XPoly::one();
    if (n % 2 == 0) {
        const int m = n / 2;
        for (int i = 0; i <= m - 1; ++i) r *= square_factor(qint(2 * i));
    } else {
        const int m = (n - 1) / 2;
        r = XPoly::x();
        for (int i = 1; i <= m; ++i) r *= square_factor(qint(2 * i));
    }
    return cache.emplace(n, std::move(r)).first->second;
}

const XPoly& frak_g_poly(int n) {
    if (n < 0) throw std::domain_error("frak_g_poly: negative index");
    thread_local std::map<int, XPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    XPoly r = XPoly::one();
    const int m = n / 2;
    if (n % 2 == 1) r = XPoly::x();
    for (int i = 1; i <= m; ++i) r *= square_factor(qint(2 * i - 1));
    return cache.emplace(n, std::move(r)).first->second;
}

XPoly divided(const XPoly& p, int n) {
    if (n < 0) throw std::domain_error("divided: negative index");
    return p.scaled(RatFunc(LaurentPoly::one(), qfact(n)));
}

std::vector<ExpansionTerm> p_in_g_expansion(int n) {
    if (n < 0) throw std::domain_error("p_in_g_expansion: negative index");
    std::vector<ExpansionTerm> terms;
    if (n == 0) {
        terms.push_back({0, RatFunc::one()});
        return terms;
    }
    if (n % 2 == 0) {
        const int m = n / 2;
        for (int a = 0; a <= m - 1; ++a)
            terms.push_back({a, RatFunc(LaurentPoly::q_power((1 - 2 * m) * a)) * qbinom2(m - 1, a)});
    } else {
        const int m = (n + 1) / 2;
        for (int a = 0; a <= m - 1; ++a)
            terms.push_back({a, RatFunc(LaurentPoly::q_power((3 - 2 * m) * a)) * qbinom2(m - 1, a)});
    }
    return terms;
}

std::vector<ExpansionTerm> frakp_in_frakg_expansion(int n) {
    if (n < 0) throw std::domain_error("frakp_in_frakg_expansion: negative index");
    std::vector<ExpansionTerm> terms;
    if (n <= 1) {
        // fp^(0) = 1 = fg^(0), fp^(1) = x = fg^(1)
        terms.push_back({0, RatFunc::one()});
        return terms;
    }
    if (n % 2 == 0) {
        const int m = n / 2;
        for (int a = 0; a <= m - 1; ++a)
            terms.push_back({a, RatFunc(LaurentPoly::q_power((3 - 2 * m) * a)) * qbinom2(m - 1, a)});
    } else {
        const int m = (n - 1) / 2;
        for (int a = 0; a <= m - 1; ++a)
            terms.push_back({a, RatFunc(LaurentPoly::q_power((1 - 2 * m) * a)) * qbinom2(m - 1, a)});
    }
    return terms;
}

KappaValue eval_kappa(const XPoly& p, const KappaSpec& kappa) {
    const RatFunc v = p.eval(RatFunc(kappa.value()));
    return {v, v.is_integral()};
}

} // namespace idp
