#include "idp/laurent.hpp"

#include <sstream>
#include <utility>

#include "idp/errors.hpp"

namespace idp {

LaurentPoly LaurentPoly::monomial(int e, const BigInt& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::leading_coeff() const {
    return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(-e, v);
    return r;
}

bool LaurentPoly::all_coeffs_nonneg() const {
    for (const auto& [e, v] : terms_)
        if (v < 0) return false;
    return true;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, v] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        const BigInt& c = it->second;
        const bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            if (e == 1)
                os << "q";
            else
                os << "q^" << e;
        }
    }
    return os.str();
}

namespace {

// Dense vector of coefficients for a polynomial in Z[q] with nonzero
// constant term handled implicitly by the caller (index = exponent).
using Dense = std::vector<BigInt>;

Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d(static_cast<std::size_t>(p.max_exp() - shift) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
    return d;
}

int deg(const Dense& d) {
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        if (d[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void trim(Dense& d) { d.resize(static_cast<std::size_t>(deg(d) + 1)); }

BigInt dense_content(const Dense& d) {
    BigInt g = 0;
    for (const auto& c : d) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Dense& d) {
    BigInt g = dense_content(d);
    if (g == 0 || g == 1) return;
    for (auto& c : d) c /= g;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), primitive-PRS style:
// the caller re-primitivizes. Modifies a in place.
void pseudo_rem(Dense& a, const Dense& b) {
    const int db = deg(b);
    const BigInt& lb = b[static_cast<std::size_t>(db)];
    int da = deg(a);
    while (da >= db) {
        const BigInt la = a[static_cast<std::size_t>(da)];
        // a = lb*a - la * q^(da-db) * b
        for (auto& c : a) c *= lb;
        const int off = da - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(i + off)] -= la * b[static_cast<std::size_t>(i)];
        trim(a);
        da = deg(a);
    }
}

LaurentPoly from_dense(const Dense& d) {
    LaurentPoly p;
    for (int i = 0; i <= deg(d); ++i)
        if (d[static_cast<std::size_t>(i)] != 0)
            p.add_term(i, d[static_cast<std::size_t>(i)]);
    return p;
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly::zero();
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& nz = a.is_zero() ? b : a;
        LaurentPoly g = nz.shifted(-nz.min_exp());
        if (g.leading_coeff() < 0) g = -g;
        return g;
    }
    Dense da = to_dense(a, a.min_exp());
    Dense db = to_dense(b, b.min_exp());
    const BigInt cont = [&] {
        BigInt g;
        BigInt ca = dense_content(da), cb = dense_content(db);
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return g;
    }();
    make_primitive(da);
    make_primitive(db);
    if (deg(da) < deg(db)) std::swap(da, db);
    while (deg(db) >= 0) {
        pseudo_rem(da, db);
        make_primitive(da);
        std::swap(da, db);
    }
    make_primitive(da);
    if (da[static_cast<std::size_t>(deg(da))] < 0)
        for (auto& c : da) c = -c;
    for (auto& c : da) c *= cont;
    return from_dense(da);
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("divexact: zero divisor");
    if (a.is_zero()) return LaurentPoly::zero();
    Dense da = to_dense(a, a.min_exp());
    Dense db = to_dense(b, b.min_exp());
    const int shift = a.min_exp() - b.min_exp();
    const int dbd = deg(db);
    const BigInt& lb = db[static_cast<std::size_t>(dbd)];
    Dense quot(static_cast<std::size_t>(deg(da) - dbd + 1));
    int dad = deg(da);
    while (dad >= dbd) {
        BigInt qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(),
                    da[static_cast<std::size_t>(dad)].get_mpz_t(), lb.get_mpz_t());
        if (rem != 0)
            throw IntegralityViolation("divexact: leading coefficient not divisible");
        const int off = dad - dbd;
        quot[static_cast<std::size_t>(off)] = qc;
        for (int i = 0; i <= dbd; ++i)
            da[static_cast<std::size_t>(i + off)] -= qc * db[static_cast<std::size_t>(i)];
        trim(da);
        dad = deg(da);
    }
    if (deg(da) >= 0) throw IntegralityViolation("divexact: nonzero remainder");
    return from_dense(quot).shifted(shift);
}

} // namespace idp
