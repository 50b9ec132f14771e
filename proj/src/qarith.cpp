#include "idp/qarith.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "idp/errors.hpp"

namespace idp {

namespace {

// Session memo caches. All qarith values are immutable once built, so
// thread-local caches keep lookups lock-free.
template <typename K, typename V>
V& memo(std::map<K, V>& cache, const K& key, bool& fresh) {
    auto [it, inserted] = cache.try_emplace(key);
    fresh = inserted;
    return it->second;
}

} // namespace

const LaurentPoly& qint(int n) {
    thread_local std::map<int, LaurentPoly> cache;
    bool fresh = false;
    LaurentPoly& v = memo(cache, n, fresh);
    if (fresh) {
        if (n < 0) {
            v = -qint(-n);
        } else {
            for (int k = 0; k < n; ++k) v.add_term(n - 1 - 2 * k, 1);
        }
    }
    return v;
}

const LaurentPoly& qint2(int n) {
    thread_local std::map<int, LaurentPoly> cache;
    bool fresh = false;
    LaurentPoly& v = memo(cache, n, fresh);
    if (fresh) {
        LaurentPoly doubled;
        for (const auto& [e, c] : qint(n).terms()) doubled.add_term(2 * e, c);
        v = std::move(doubled);
    }
    return v;
}

const LaurentPoly& qfact(int n) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    thread_local std::map<int, LaurentPoly> cache;
    bool fresh = false;
    LaurentPoly& v = memo(cache, n, fresh);
    if (fresh) {
        v = LaurentPoly::one();
        for (int k = 1; k <= n; ++k) v *= qint(k);
    }
    return v;
}

RatFunc qbinom(int m, int n) {
    if (n < 0) throw std::domain_error("qbinom: negative lower index");
    thread_local std::map<std::pair<int, int>, RatFunc> cache;
    bool fresh = false;
    RatFunc& v = memo(cache, std::make_pair(m, n), fresh);
    if (fresh) {
        LaurentPoly num = LaurentPoly::one();
        for (int i = 1; i <= n; ++i) num *= qint(m - i + 1);
        v = RatFunc(num, qfact(n));
    }
    return v;
}

RatFunc qbinom2(int m, int n) {
    if (n < 0) throw std::domain_error("qbinom2: negative lower index");
    thread_local std::map<std::pair<int, int>, RatFunc> cache;
    bool fresh = false;
    RatFunc& v = memo(cache, std::make_pair(m, n), fresh);
    if (fresh) {
        LaurentPoly num = LaurentPoly::one();
        LaurentPoly den = LaurentPoly::one();
        for (int i = 1; i <= n; ++i) {
            num *= qint2(m - i + 1);
            den *= qint2(i);
        }
        v = RatFunc(num, den);
    }
    return v;
}

const LaurentPoly& cbinom(int m, int c) {
    if (c < 0) throw std::domain_error("cbinom: negative lower index");
    thread_local std::map<std::pair<int, int>, LaurentPoly> cache;
    bool fresh = false;
    LaurentPoly& v = memo(cache, std::make_pair(m, c), fresh);
    if (fresh) {
        LaurentPoly num = LaurentPoly::one();
        LaurentPoly den = LaurentPoly::one();
        for (int i = 1; i <= c; ++i) {
            num *= LaurentPoly::q_power(4 * (m + i - 1)) - LaurentPoly::one();
            den *= LaurentPoly::q_power(-4 * i) - LaurentPoly::one();
        }
        const RatFunc r(num, den);
        if (!r.is_integral()) {
            std::ostringstream os;
            os << "cbinom(" << m << ", " << c << ") did not reduce to a Laurent polynomial";
            throw IntegralityViolation(os.str());
        }
        v = r.num();
    }
    return v;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

} // namespace idp
