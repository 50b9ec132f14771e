#include "idp/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "idp/genk.hpp"
#include "idp/idivided.hpp"
#include "idp/qarith.hpp"
#include "idp/repmod.hpp"
#include "idp/textform.hpp"

namespace idp {

bool VerificationReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

int VerificationReport::failures() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    os << "grid: " << grid << "\n";
    for (const auto& c : cases) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << " :: " << c.detail;
        os << "\n";
    }
    os << "result: " << (cases.size() - static_cast<std::size_t>(failures())) << "/"
       << cases.size() << " passed\n";
    return os.str();
}

std::string VerificationReport::to_json_text() const {
    Json j;
    j["suite"] = suite;
    j["grid"] = grid;
    j["cases"] = Json::array();
    for (const auto& c : cases)
        j["cases"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["passed"] = cases.size() - static_cast<std::size_t>(failures());
    j["failed"] = failures();
    return j.dump(2);
}

namespace {

using CaseFn = std::function<CaseResult()>;

struct SuiteBuilder {
    std::string name;
    std::string grid;
    std::vector<CaseFn> cases;

    void add(CaseFn fn) { cases.push_back(std::move(fn)); }
};

VerificationReport execute(const SuiteBuilder& sb, int jobs) {
    VerificationReport rep;
    rep.suite = sb.name;
    rep.grid = sb.grid;
    rep.cases.resize(sb.cases.size());
    const auto t0 = std::chrono::steady_clock::now();
    if (jobs <= 1 || sb.cases.size() <= 1) {
        for (std::size_t i = 0; i < sb.cases.size(); ++i) rep.cases[i] = sb.cases[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= sb.cases.size()) return;
                rep.cases[i] = sb.cases[i]();
            }
        };
        const int nthreads =
            std::min<int>(jobs, static_cast<int>(sb.cases.size()));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CaseResult make_case(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

RatFunc qp(int e) { return RatFunc(LaurentPoly::q_power(e)); }

PBWElement scalar_elem(const RatFunc& c) { return PBWElement::one().scaled(c); }

// (K - K^-1)/(q - q^-1)
PBWElement casimir_rhs() {
    const RatFunc d(LaurentPoly::one(),
                    LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
    PBWElement e;
    e.add_term({0, 1, 0}, d);
    e.add_term({0, -1, 0}, -d);
    return e;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    RatFunc coeff() {
        LaurentPoly p;
        const int nterms = uniform(1, 2);
        for (int i = 0; i < nterms; ++i) {
            int c = uniform(-3, 3);
            if (c == 0) c = 1;
            p.add_term(uniform(-2, 2), c);
        }
        if (p.is_zero()) p = LaurentPoly::one();
        return RatFunc(p);
    }
    PBWElement element(int max_terms = 3) {
        PBWElement e;
        const int nterms = uniform(1, max_terms);
        for (int i = 0; i < nterms; ++i)
            e.add_term({uniform(0, 3), uniform(-3, 3), uniform(0, 3)}, coeff());
        if (e.is_zero()) e = PBWElement::one();
        return e;
    }
};

std::string ell_grid_desc(int ell_abs) {
    return "ell in [-" + std::to_string(ell_abs) + ", " + std::to_string(ell_abs) + "]";
}

// ---------------------------------------------------------------- relations

SuiteBuilder build_relations(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "relations";
    sb.grid = "mu <= " + std::to_string(opt.mu_max) + ", seed " + std::to_string(opt.seed);

    sb.add([] {
        const PBWElement E = PBWElement::e_undivided(1);
        const PBWElement F = PBWElement::f(1);
        const PBWElement K = PBWElement::k(1);
        const PBWElement Kinv = PBWElement::k(-1);
        bool ok = multiply(K, Kinv) == PBWElement::one() &&
                  multiply(Kinv, K) == PBWElement::one();
        ok = ok && multiply(E, F) - multiply(F, E) == casimir_rhs();
        ok = ok && multiply(K, E) == multiply(E, K).scaled(qp(2));
        ok = ok && multiply(K, F) == multiply(F, K).scaled(qp(-2));
        return make_case("pbw/defining-relations", ok);
    });

    sb.add([] {
        const PBWElement F = PBWElement::f(1);
        const PBWElement Ec = PBWElement::echeck(1);
        const bool ok =
            multiply(F, Ec) - multiply(Ec, F).scaled(qp(-2)) == PBWElement::h();
        return make_case("pbw/FEcheck-minus-h", ok);
    });

    sb.add([] {
        // Ec^(n) from undivided powers, then F Ec^(n) against reorder_FE.
        const PBWElement F = PBWElement::f(1);
        PBWElement power = PBWElement::one();
        bool ok = true;
        for (int n = 0; n <= 6 && ok; ++n) {
            if (n > 0) power = multiply(power, PBWElement::echeck(1));
            const PBWElement divided = power.scaled(RatFunc(LaurentPoly::one(), qfact(n)));
            ok = divided == PBWElement::echeck(n) &&
                 multiply(F, divided) == reorder_FE(n);
        }
        return make_case("pbw/F-Echeck-reorder", ok, "n <= 6, divided powers from products");
    });

    sb.add([] {
        bool ok = true;
        for (int a = -3; a <= 3 && ok; ++a)
            for (int n = 1; n <= 4 && ok; ++n) {
                const PBWElement shift =
                    PBWElement::monomial({0, -2, 0}, qp(4 * a));
                ok = hbinom(a, n) ==
                         hbinom(a + 1, n) - multiply(shift, hbinom(a + 1, n - 1)) &&
                     hbrace(a, n) ==
                         hbrace(a + 1, n) - multiply(shift, hbrace(a + 1, n - 1));
            }
        return make_case("pbw/pascal-identities", ok, "a in [-3,3], n in [1,4]");
    });

    sb.add([] {
        const PBWElement F = PBWElement::f(1);
        const PBWElement Ec = PBWElement::echeck(1);
        bool ok = true;
        for (int a = -2; a <= 2 && ok; ++a)
            for (int n = 0; n <= 3 && ok; ++n) {
                ok = multiply(hbinom(a, n), F) == multiply(F, hbinom(a + 1, n)) &&
                     multiply(hbinom(a, n), Ec) == multiply(Ec, hbinom(a - 1, n)) &&
                     multiply(hbrace(a, n), F) == multiply(F, hbrace(a + 1, n)) &&
                     multiply(hbrace(a, n), Ec) == multiply(Ec, hbrace(a - 1, n));
                for (int k = 1; k <= 3 && ok; ++k) {
                    const PBWElement x = hbinom(a, n);
                    ok = multiply(x, PBWElement::f(k)) ==
                         multiply(PBWElement::f(k), commute_cartan(x, Side::F, k));
                    ok = ok && multiply(x, PBWElement::echeck(k)) ==
                                   multiply(PBWElement::echeck(k),
                                            commute_cartan(x, Side::Echeck, k));
                }
            }
        return make_case("pbw/cartan-commutation", ok);
    });

    sb.add([opt] {
        bool ok = apply_sigma(PBWElement::h()) == PBWElement::h().scaled(-qp(2));
        for (int a = -2; a <= 2 && ok; ++a)
            for (int n = 0; n <= 3 && ok; ++n) {
                RatFunc s1 = qp(2 * n * (n + 1));
                RatFunc s2 = qp(2 * n * (n - 1));
                if (n % 2 == 1) {
                    s1 = -s1;
                    s2 = -s2;
                }
                ok = apply_sigma(hbinom(a, n)) == hbinom(1 - a - n, n).scaled(s1) &&
                     apply_sigma(hbrace(a, n)) == hbrace(2 - a - n, n).scaled(s2);
            }
        Rng rng(opt.seed);
        for (int i = 0; i < 20 && ok; ++i) {
            const PBWElement x = rng.element();
            const PBWElement y = rng.element();
            ok = apply_sigma(apply_sigma(x)) == x &&
                 apply_sigma(multiply(x, y)) == multiply(apply_sigma(y), apply_sigma(x));
        }
        return make_case("pbw/sigma-anti-involution", ok);
    });

    sb.add([opt] {
        Rng rng(opt.seed + 1);
        bool ok = true;
        for (int i = 0; i < 12 && ok; ++i) {
            const PBWElement x = rng.element(2);
            const PBWElement y = rng.element(2);
            const PBWElement z = rng.element(2);
            ok = multiply(multiply(x, y), z) == multiply(x, multiply(y, z));
        }
        return make_case("pbw/associativity", ok, "12 random triples");
    });

    sb.add([opt] {
        Rng rng(opt.seed + 2);
        bool ok = true;
        for (int i = 0; i < 20 && ok; ++i) {
            const PBWElement x = rng.element();
            ok = multiply(x, PBWElement::one()) == x && multiply(PBWElement::one(), x) == x;
        }
        return make_case("pbw/multiplicative-identity", ok, "20 random elements");
    });

    sb.add([opt] {
        const PBWElement E = PBWElement::e_undivided(1);
        const PBWElement F = PBWElement::f(1);
        const PBWElement K = PBWElement::k(1);
        const PBWElement Kinv = PBWElement::k(-1);
        const PBWElement cas = casimir_rhs();
        bool ok = true;
        std::string fail;
        for (int mu = 0; mu <= opt.mu_max && ok; ++mu) {
            const SimpleModule m(mu);
            for (int b = 0; b <= mu && ok; ++b) {
                const ModuleVector v = ModuleVector::basis(m, b);
                const ModuleVector Ev = act(E, v, m);
                const ModuleVector Fv = act(F, v, m);
                const ModuleVector Kv = act(K, v, m);
                if (act(E, Fv, m) - act(F, Ev, m) != act(cas, v, m)) {
                    ok = false;
                    fail = "EF-FE";
                } else if (act(K, Ev, m) != act(E, Kv, m).scaled(qp(2))) {
                    ok = false;
                    fail = "KE";
                } else if (act(K, Fv, m) != act(F, Kv, m).scaled(qp(-2))) {
                    ok = false;
                    fail = "KF";
                } else if (act(K, act(Kinv, v, m), m) != v) {
                    ok = false;
                    fail = "KKinv";
                }
            }
        }
        return make_case("module/defining-relations", ok,
                         ok ? "mu <= " + std::to_string(opt.mu_max) : fail);
    });

    sb.add([opt] {
        const PBWElement F = PBWElement::f(1);
        bool ok = true;
        for (int mu = 0; mu <= opt.mu_max && ok; ++mu) {
            const SimpleModule m(mu);
            for (int n = 0; n <= 4 && ok; ++n) {
                const PBWElement lhs = reorder_FE(n);
                for (int b = 0; b <= mu && ok; ++b) {
                    const ModuleVector v = ModuleVector::basis(m, b);
                    ok = act(lhs, v, m) == act(F, act(PBWElement::echeck(n), v, m), m);
                }
            }
        }
        return make_case("module/FYn-matrix", ok, "n <= 4, mu <= " + std::to_string(opt.mu_max));
    });

    sb.add([opt] {
        Rng rng(opt.seed + 3);
        bool ok = true;
        for (int mu : {4, 7}) {
            const SimpleModule m(mu);
            for (int i = 0; i < 8 && ok; ++i) {
                const PBWElement x = rng.element(2);
                const PBWElement y = rng.element(2);
                const PBWElement xy = multiply(x, y);
                for (int b = 0; b <= mu && ok; ++b) {
                    const ModuleVector v = ModuleVector::basis(m, b);
                    ok = act(xy, v, m) == act(x, act(y, v, m), m);
                }
            }
        }
        return make_case("module/action-homomorphism", ok, "mu in {4,7}, 8 random pairs");
    });

    return sb;
}

// ------------------------------------------------------------------- ipolys

XPoly synthetic_div_by_x_minus_1(const XPoly& p, bool& exact) {
    // p / (x - 1); exact iff p(1) == 0
    const int d = p.degree();
    if (d < 1) {
        exact = p.is_zero();
        return XPoly::zero();
    }
    std::vector<RatFunc> q(static_cast<std::size_t>(d));
    RatFunc carry;
    for (int i = d; i >= 1; --i) {
        carry = p.coeff(i) + carry;
        q[static_cast<std::size_t>(i - 1)] = carry;
    }
    exact = (p.coeff(0) + carry).is_zero();
    return XPoly(std::move(q));
}

bool in_nat_qinv(const RatFunc& c) {
    return c.is_integral() && c.num().all_coeffs_nonneg() && c.num().in_z_qinv();
}

SuiteBuilder build_ipolys(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "ipolys";
    sb.grid = "n <= " + std::to_string(opt.n_max_poly) + ", " + ell_grid_desc(opt.ell_abs_poly);
    const int nmax = opt.n_max_poly;

    sb.add([] {
        const XPoly x = XPoly::x();
        const RatFunc c43 = qp(-4) + qp(-2);
        bool ok = p_poly(-1).is_zero() && p_poly(0) == XPoly::one() && p_poly(1) == x &&
                  p_poly(2) == x * x;
        ok = ok && p_poly(3) == x * x * x + x.scaled(c43);
        ok = ok && p_poly(4) == x * x * x * x +
                                  (x * x).scaled(c43 * (qp(-4) + qp(-2) + RatFunc(2)));
        const RatFunc c5a = qp(-8) + qp(-6) + RatFunc(3) * qp(-4) + RatFunc(2) * qp(-2) + RatFunc(3);
        const RatFunc c5b = qp(-8) + qp(-6) + RatFunc(2) * qp(-4) + qp(-2) + RatFunc(1);
        ok = ok && p_poly(5) == x * x * x * x * x + (x * x * x).scaled(c43 * c5a) +
                                  x.scaled(c43 * c43 * c5b);
        return make_case("ipolys/p-printed-examples", ok, "p_0..p_5");
    });

    sb.add([] {
        const XPoly x = XPoly::x();
        const XPoly one = XPoly::one();
        bool ok = frak_p_poly(-1).is_zero() && frak_p_poly(0) == one && frak_p_poly(1) == x;
        ok = ok && frak_p_poly(2) == x * x - one;
        ok = ok && frak_p_poly(3) == x * x * x - x;
        const RatFunc q4b3 = qp(-4) * RatFunc(qint(3));
        ok = ok && frak_p_poly(4) ==
                       x * x * x * x + (x * x).scaled(q4b3 - RatFunc::one()) - one.scaled(q4b3);
        const RatFunc c5 = qp(-5) * RatFunc(qfact(3)) + qp(-6) * RatFunc(qint(5));
        ok = ok && frak_p_poly(5) == x * (x * x - one) * (x * x + one.scaled(c5) * XPoly::one());
        return make_case("ipolys/frakp-printed-examples", ok, "frakp_0..frakp_5");
    });

    sb.add([] {
        bool ok = g_poly(2) == XPoly::x() * XPoly::x();
        const XPoly x = XPoly::x();
        ok = ok && g_poly(3) == x * (x * x - XPoly::constant(RatFunc(qint(2) * qint(2))));
        ok = ok && frak_g_poly(2) == x * x - XPoly::one();
        ok = ok && g_poly(0) == XPoly::one() && frak_g_poly(1) == x;
        return make_case("ipolys/g-definitions", ok);
    });

    sb.add([nmax] {
        bool ok = true;
        int bad = -1;
        for (int n = 0; n <= nmax && ok; ++n) {
            XPoly sum;
            for (const auto& t : p_in_g_expansion(n))
                sum += divided(g_poly(n - 2 * t.shift), n - 2 * t.shift).scaled(t.coeff);
            ok = sum == divided(p_poly(n), n);
            if (!ok) bad = n;
        }
        return make_case("ipolys/fg-ev-reconstruction", ok,
                         ok ? "n <= " + std::to_string(nmax) : "fails at n=" + std::to_string(bad));
    });

    sb.add([nmax] {
        bool ok = true;
        int bad = -1;
        for (int n = 0; n <= nmax && ok; ++n) {
            XPoly sum;
            for (const auto& t : frakp_in_frakg_expansion(n))
                sum += divided(frak_g_poly(n - 2 * t.shift), n - 2 * t.shift).scaled(t.coeff);
            ok = sum == divided(frak_p_poly(n), n);
            if (!ok) bad = n;
        }
        return make_case("ipolys/fg-odd-reconstruction", ok,
                         ok ? "n <= " + std::to_string(nmax) : "fails at n=" + std::to_string(bad));
    });

    sb.add([opt, nmax] {
        bool ok = true;
        std::string fail;
        for (int ell = -opt.ell_abs_poly; ell <= opt.ell_abs_poly && ok; ++ell) {
            const KappaSpec kappa = KappaSpec::even_qint(ell);
            for (int n = 0; n <= nmax && ok; ++n) {
                ok = eval_kappa(divided(p_poly(n), n), kappa).integral &&
                     eval_kappa(divided(g_poly(n), n), kappa).integral;
                if (!ok)
                    fail = "n=" + std::to_string(n) + " ell=" + std::to_string(ell);
            }
        }
        return make_case("ipolys/integrality-even-kappa", ok, fail);
    });

    sb.add([opt, nmax] {
        bool ok = true;
        std::string fail;
        for (int ell = -opt.ell_abs_poly; ell <= opt.ell_abs_poly && ok; ++ell) {
            const KappaSpec kappa = KappaSpec::odd_qint(ell);
            for (int n = 0; n <= nmax && ok; ++n) {
                ok = eval_kappa(divided(frak_p_poly(n), n), kappa).integral &&
                     eval_kappa(divided(frak_g_poly(n), n), kappa).integral;
                if (!ok)
                    fail = "n=" + std::to_string(n) + " ell=" + std::to_string(ell);
            }
        }
        return make_case("ipolys/integrality-odd-kappa", ok, fail);
    });

    sb.add([nmax] {
        bool ok = true;
        for (int n = 0; n <= nmax && ok; ++n)
            for (int d = 0; d <= n && ok; ++d) ok = in_nat_qinv(p_poly(n).coeff(d));
        return make_case("ipolys/p-positivity", ok, "p_n in N[q^-1][x]");
    });

    sb.add([nmax] {
        bool ok = true;
        for (int n = 2; n <= nmax && ok; ++n) {
            bool exact = false;
            const XPoly quo = synthetic_div_by_x_minus_1(frak_p_poly(n), exact);
            ok = exact;
            for (int d = 0; d <= quo.degree() && ok; ++d) ok = in_nat_qinv(quo.coeff(d));
        }
        return make_case("ipolys/frakp-positivity", ok, "frakp_n/(x-1) in N[q^-1][x], n >= 2");
    });

    sb.add([nmax] {
        bool p_ok = true, fp_ok = true;
        for (int n = 0; n <= nmax; ++n) {
            for (int d = 0; d <= n; ++d) {
                if ((d % 2) != (n % 2)) {
                    if (!p_poly(n).coeff(d).is_zero()) p_ok = false;
                    if (!frak_p_poly(n).coeff(d).is_zero()) fp_ok = false;
                }
            }
        }
        return make_case("ipolys/parity", p_ok && fp_ok,
                         std::string("p_n parity proven; frakp_n parity observed=") +
                             (fp_ok ? "true" : "false"));
    });

    sb.add([nmax] {
        const XPoly x = XPoly::x();
        bool ok = true;
        for (int n = 1; n <= nmax && ok; ++n) {
            // [n+1] p^(n+1) = x p^(n) + q^{1-2n} [n-1] p^(n-1)
            ok = divided(p_poly(n + 1), n + 1).scaled(RatFunc(qint(n + 1))) ==
                 x * divided(p_poly(n), n) +
                     divided(p_poly(n - 1), n - 1).scaled(qp(1 - 2 * n) * RatFunc(qint(n - 1)));
            // x frakp^(n) = [n+1] frakp^(n+1) - q^{2-2n} [n-2] frakp^(n-1)
            ok = ok && x * divided(frak_p_poly(n), n) ==
                           divided(frak_p_poly(n + 1), n + 1).scaled(RatFunc(qint(n + 1))) -
                               divided(frak_p_poly(n - 1), n - 1)
                                   .scaled(qp(2 - 2 * n) * RatFunc(qint(n - 2)));
        }
        for (int a = 1; a <= 6 && ok; ++a) {
            ok = x * divided(g_poly(2 * a - 1), 2 * a - 1) ==
                 divided(g_poly(2 * a), 2 * a).scaled(RatFunc(qint(2 * a)));
            ok = ok && x * divided(g_poly(2 * a), 2 * a) ==
                           divided(g_poly(2 * a + 1), 2 * a + 1).scaled(RatFunc(qint(2 * a + 1))) +
                               divided(g_poly(2 * a - 1), 2 * a - 1).scaled(RatFunc(qint(2 * a)));
            ok = ok && x * divided(frak_g_poly(2 * a - 1), 2 * a - 1) ==
                           divided(frak_g_poly(2 * a), 2 * a).scaled(RatFunc(qint(2 * a))) +
                               divided(frak_g_poly(2 * a - 2), 2 * a - 2)
                                   .scaled(RatFunc(qint(2 * a - 1)));
            ok = ok && x * divided(frak_g_poly(2 * a), 2 * a) ==
                           divided(frak_g_poly(2 * a + 1), 2 * a + 1)
                               .scaled(RatFunc(qint(2 * a + 1)));
        }
        return make_case("ipolys/divided-recursions", ok);
    });

    sb.add([] {
        bool ok = divided(p_poly(0), 0).eval(RatFunc::zero()) == RatFunc::one();
        for (int n = 1; n <= 8 && ok; ++n)
            ok = divided(p_poly(n), n).eval(RatFunc::zero()).is_zero();
        ok = ok && frak_p_poly(0).eval(RatFunc::one()) == RatFunc::one() &&
             frak_p_poly(1).eval(RatFunc::one()) == RatFunc::one();
        for (int n = 2; n <= 12 && ok; ++n)
            ok = frak_p_poly(n).eval(RatFunc::one()).is_zero();
        return make_case("ipolys/special-values", ok, "p^(n)(0), frakp_n(1)");
    });

    return sb;
}

// ------------------------------------------------------------------- degree

SuiteBuilder build_degree(const GridOptions&) {
    SuiteBuilder sb;
    sb.name = "degree";
    sb.grid = "ell in [1,4], n <= 8";
    sb.add([] {
        bool ok = true;
        std::string fail;
        for (int ell = 1; ell <= 4 && ok; ++ell) {
            const KappaSpec kappa = KappaSpec::even_qint(ell);
            for (int n = 0; n <= 8 && ok; ++n) {
                const KappaValue v = eval_kappa(divided(p_poly(n), n), kappa);
                const long expected = (2L * ell - 1) * n - binom2(n);
                ok = v.integral && !v.value.is_zero() && v.value.num().max_exp() == expected;
                if (!ok)
                    fail = "ell=" + std::to_string(ell) + " n=" + std::to_string(n);
            }
        }
        return make_case("degree/p-top-q-exponent", ok, fail);
    });
    return sb;
}

// ------------------------------------------------------- expansion equality

SuiteBuilder build_expansion_equality(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "expansion-equality";
    sb.grid = "n <= " + std::to_string(opt.n_max_expansion) + ", " + ell_grid_desc(opt.ell_abs);
    for (const ParityRegime regime : kAllRegimes) {
        for (int ell = -opt.ell_abs; ell <= opt.ell_abs; ++ell) {
            sb.add([regime, ell, opt] {
                const KappaSpec kappa = kappa_for(regime, ell);
                for (int n = 0; n <= opt.n_max_expansion; ++n) {
                    const XPoly tpoly = divided_closed_t(n, regime);
                    if (!tpoly.coeffs_bar_invariant())
                        return make_case("expansion-equality/" + std::string(regime.family_name()) +
                                             "/ell=" + std::to_string(ell),
                                         false,
                                         "t-coefficients not bar-invariant at n=" +
                                             std::to_string(n));
                    const PBWElement rec = divided_recursive(n, regime, kappa);
                    const PBWElement closed = expand_in_t(tpoly, kappa);
                    const PBWElement ehf = divided_expansion(n, regime, kappa, SumOrder::EhF);
                    const PBWElement fhe = divided_expansion(n, regime, kappa, SumOrder::FhE);
                    if (!(rec == closed && rec == ehf && rec == fhe))
                        return make_case("expansion-equality/" + std::string(regime.family_name()) +
                                             "/ell=" + std::to_string(ell),
                                         false, "mismatch at n=" + std::to_string(n));
                }
                return make_case("expansion-equality/" + std::string(regime.family_name()) +
                                     "/ell=" + std::to_string(ell),
                                 true, "recursive == closed-t == EhF == FhE, n <= " +
                                           std::to_string(opt.n_max_expansion));
            });
        }
    }
    return sb;
}

// -------------------------------------------------------------- integrality

SuiteBuilder build_integrality(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "integrality";
    sb.grid = "n <= " + std::to_string(opt.n_max_module) + ", " + ell_grid_desc(opt.ell_abs) +
              ", mu <= " + std::to_string(opt.mu_max);
    for (const ParityRegime regime : kAllRegimes) {
        for (int ell = -opt.ell_abs; ell <= opt.ell_abs; ++ell) {
            sb.add([regime, ell, opt] {
                const KappaSpec kappa = kappa_for(regime, ell);
                const std::string name = "integrality/" + std::string(regime.family_name()) +
                                         "/ell=" + std::to_string(ell);
                for (int n = 0; n <= opt.n_max_module; ++n) {
                    const PBWElement x = divided_expansion(n, regime, kappa, SumOrder::EhF);
                    IntegralityWitness w;
                    if (!integrality_check(x, regime.weight, opt.mu_max, &w)) {
                        std::ostringstream os;
                        os << "n=" << n << " breaks A-form at mu=" << w.mu << " F^(" << w.basis_index
                           << ")v+: entry " << w.entry << " = " << w.value.to_string();
                        return make_case(name, false, os.str());
                    }
                }
                return make_case(name, true,
                                 "dv-powers preserve L(mu)_A, n <= " +
                                     std::to_string(opt.n_max_module));
            });
        }
    }
    sb.add([opt] {
        const PBWElement probe = scalar_elem(RatFunc(LaurentPoly::one(), qint(2)));
        IntegralityWitness w;
        const bool rejected = !integrality_check(probe, Parity::Even, opt.mu_max, &w);
        return make_case("integrality/failing-probe", rejected,
                         "(1/[2]) * 1 must violate the A-form");
    });
    return sb;
}

// ------------------------------------------------------------ module oracle

SuiteBuilder build_module_oracle(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "module-oracle";
    sb.grid = "n <= " + std::to_string(opt.n_max_module) + ", " + ell_grid_desc(opt.ell_abs) +
              ", lambda <= 8";
    for (const ParityRegime regime : kAllRegimes) {
        for (int ell = -opt.ell_abs; ell <= opt.ell_abs; ++ell) {
            sb.add([regime, ell, opt] {
                const KappaSpec kappa = kappa_for(regime, ell);
                const std::string name = "module-oracle/" + std::string(regime.family_name()) +
                                         "/ell=" + std::to_string(ell);
                for (int n = 0; n <= opt.n_max_module; ++n) {
                    const PBWElement x = divided_expansion(n, regime, kappa, SumOrder::EhF);
                    for (int lambda = 0; lambda <= 8; ++lambda) {
                        const int mu =
                            regime.weight == Parity::Even ? 2 * lambda : 2 * lambda + 1;
                        const SimpleModule m(mu);
                        const ModuleVector generic = act(x, ModuleVector::highest(m), m);
                        const ModuleVector closed =
                            divided_action_closed(n, regime, ell, lambda);
                        if (generic != closed)
                            return make_case(name, false,
                                             "n=" + std::to_string(n) +
                                                 " lambda=" + std::to_string(lambda));
                    }
                }
                return make_case(name, true, "closed double sum == generic PBW action");
            });
        }
    }
    return sb;
}

// ------------------------------------------------------------------ lattice

SuiteBuilder build_lattice(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "lattice";
    sb.grid = "n <= " + std::to_string(opt.n_max_module) + ", " + ell_grid_desc(opt.ell_abs) +
              ", cap n+2|ell|+" + std::to_string(opt.lattice_slack);
    for (const ParityRegime regime : kAllRegimes) {
        for (int ell = -opt.ell_abs; ell <= opt.ell_abs; ++ell) {
            sb.add([regime, ell, opt] {
                const std::string name = "lattice/" + std::string(regime.family_name()) +
                                         "/ell=" + std::to_string(ell);
                std::ostringstream detail;
                for (int n = 0; n <= opt.n_max_module; ++n) {
                    const int cap = n + 2 * std::abs(ell) + opt.lattice_slack;
                    const auto lambda = find_lattice_threshold(n, regime, ell, cap);
                    if (!lambda)
                        return make_case(name, false,
                                         "no lattice threshold for n=" + std::to_string(n) +
                                             " within lambda <= " + std::to_string(cap));
                    if (n) detail << " ";
                    detail << "n=" << n << ":lambda*=" << *lambda;
                }
                return make_case(name, true, detail.str());
            });
        }
    }
    sb.add([opt] {
        // leading entry is exactly 1 once lambda >= n
        for (const ParityRegime regime : kAllRegimes)
            for (int ell = -opt.ell_abs; ell <= opt.ell_abs; ++ell)
                for (int n = 0; n <= opt.n_max_module; ++n)
                    for (int lambda = n; lambda <= n + 2; ++lambda) {
                        const ModuleVector v = divided_action_closed(n, regime, ell, lambda);
                        if (!(v[n] == RatFunc::one()))
                            return make_case("lattice/leading-term", false,
                                             regime.cli_name() + " ell=" + std::to_string(ell) +
                                                 " n=" + std::to_string(n) +
                                                 " lambda=" + std::to_string(lambda));
                    }
        return make_case("lattice/leading-term", true, "entry n == 1 whenever lambda >= n");
    });
    sb.add([] {
        // negative witness: ell >= 1 and ell-1 >= lambda-m >= 0 breaks (iCB2):
        // the F^(2m-1) coefficient is exactly q^{2m-2lambda-1} kappa
        for (const auto& [ell, m, lambda] :
             std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 1, 2}, {2, 2, 3}, {3, 3, 3}}) {
            const ModuleVector v = divided_action_closed(2 * m, kEvenEven, ell, lambda);
            const RatFunc expected =
                qp(2 * m - 2 * lambda - 1) * RatFunc(qint(2 * ell));
            if (!(v[2 * m - 1] == expected))
                return make_case("lattice/negative-witness", false,
                                 "subleading coefficient mismatch at ell=" + std::to_string(ell));
            if (icb_lattice_check(v, 2 * m).ok)
                return make_case("lattice/negative-witness", false,
                                 "expected (iCB2) failure at ell=" + std::to_string(ell) +
                                     " m=" + std::to_string(m) +
                                     " lambda=" + std::to_string(lambda));
        }
        return make_case("lattice/negative-witness", true,
                         "dvev(2m) v+ fails (iCB2) when ell-1 >= lambda-m >= 0");
    });
    return sb;
}

// -------------------------------------------------------------------- sigma

SuiteBuilder build_sigma(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "sigma";
    sb.grid = "n <= " + std::to_string(opt.n_max_expansion) + ", " + ell_grid_desc(opt.ell_abs);
    for (const ParityRegime regime : kAllRegimes) {
        for (int ell = -opt.ell_abs; ell <= opt.ell_abs; ++ell) {
            sb.add([regime, ell, opt] {
                const KappaSpec kappa = kappa_for(regime, ell);
                const std::string name =
                    "sigma/" + std::string(regime.family_name()) + "/ell=" + std::to_string(ell);
                for (int n = 0; n <= opt.n_max_expansion; ++n) {
                    const PBWElement ehf = divided_expansion(n, regime, kappa, SumOrder::EhF);
                    const PBWElement fhe = divided_expansion(n, regime, kappa, SumOrder::FhE);
                    if (apply_sigma(ehf) != fhe)
                        return make_case(name, false, "sigma(EhF) != FhE at n=" + std::to_string(n));
                    if (apply_sigma(ehf) != ehf)
                        return make_case(name, false,
                                         "divided power not sigma-fixed at n=" + std::to_string(n));
                }
                return make_case(name, true, "sigma maps EhF to FhE and fixes each power");
            });
        }
    }
    return sb;
}

// --------------------------------------------------------------------- genk

SuiteBuilder build_genk(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "genk";
    std::vector<GenericKappa> kappas;
    if (opt.genk_kappas.empty()) {
        kappas = default_kappa_list();
    } else {
        for (const auto& v : opt.genk_kappas) kappas.emplace_back(v);
    }
    sb.grid = std::to_string(kappas.size()) + " test kappas, lambda <= " +
              std::to_string(opt.genk_lambda_max);

    sb.add([] {
        for (int n = -6; n <= 6; ++n) {
            const GenericKappa kappa(qint(n));
            long long expected = 0;
            if (((n % 4) + 4) % 4 == 1) expected = 1;
            if (((n % 4) + 4) % 4 == 3) expected = -1;
            if (kappa.diamond() != expected)
                return make_case("genk/diamond-qint", false, "n=" + std::to_string(n));
        }
        const GenericKappa odd_only(parse_laurent("q^3 + q^-3"));
        if (odd_only.diamond() != 0)
            return make_case("genk/diamond-qint", false, "q^3+q^-3 should give 0");
        return make_case("genk/diamond-qint", true, "matches 0 / +1 / -1 by n mod 4");
    });

    for (std::size_t i = 0; i < kappas.size(); ++i) {
        const GenericKappa kappa = kappas[i];
        const std::string kname = kappa.value().to_string();
        sb.add([kappa, kname, opt] {
            const std::string name = "genk/kappa=" + kname;
            if (!lemmaA_check(kappa))
                return make_case(name, false, "(kappa - diamond)/[2] not integral");
            for (const Parity parity : {Parity::Even, Parity::Odd}) {
                const SecondDividedPower dp = second_dp(kappa, parity);
                if (dp.pbw != second_dp_explicit(kappa, parity))
                    return make_case(name, false, "closed PBW formula mismatch");
                if (!dp.t_poly.coeffs_bar_invariant())
                    return make_case(name, false, "t-polynomial not bar-invariant");
                if (!integrality_check(dp.pbw, parity, opt.genk_mu_max))
                    return make_case(name, false, "second divided power not integral");
                bool found = false;
                for (int lambda = 1; lambda <= opt.genk_lambda_max && !found; ++lambda) {
                    const int mu = parity == Parity::Even ? 2 * lambda : 2 * lambda + 1;
                    const SimpleModule m(mu);
                    const ModuleVector v = act(dp.pbw, ModuleVector::highest(m), m);
                    found = icb_lattice_check(v, 2).ok;
                }
                if (!found)
                    return make_case(name, false,
                                     "no lattice threshold within lambda <= " +
                                         std::to_string(opt.genk_lambda_max));
            }
            return make_case(name, true, "Lemma A, Prop t22, integrality, lattice");
        });
    }

    sb.add([] {
        // q-integer specialization: second_dp at kappa = [n] coincides with
        // the section families at n = 2
        for (int n = -6; n <= 6; ++n) {
            const GenericKappa kappa(qint(n));
            ParityRegime even_regime{}, odd_regime{};
            int ell = 0;
            if (n % 2 == 0) {
                ell = n / 2;
                even_regime = kEvenEven;
                odd_regime = kOddEven;
            } else {
                ell = (n + 1) / 2;
                even_regime = kEvenOdd;
                odd_regime = kOddOdd;
            }
            const PBWElement ev = second_dp(kappa, Parity::Even).pbw;
            const PBWElement od = second_dp(kappa, Parity::Odd).pbw;
            if (ev != divided_recursive(2, even_regime, kappa_for(even_regime, ell)))
                return make_case("genk/qint-specialization", false,
                                 "even-weight mismatch at n=" + std::to_string(n));
            if (od != divided_recursive(2, odd_regime, kappa_for(odd_regime, ell)))
                return make_case("genk/qint-specialization", false,
                                 "odd-weight mismatch at n=" + std::to_string(n));
        }
        return make_case("genk/qint-specialization", true,
                         "matches the four families at n = 2 for |n| <= 6");
    });

    return sb;
}

// ---------------------------------------------------------- golden examples

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return "";
    }
    std::ostringstream os;
    os << in.rdbuf();
    ok = true;
    return os.str();
}

std::string first_diff(const std::string& got, const std::string& want) {
    std::istringstream gs(got), ws(want);
    std::string gl, wl;
    int line = 0;
    while (true) {
        const bool g = static_cast<bool>(std::getline(gs, gl));
        const bool w = static_cast<bool>(std::getline(ws, wl));
        ++line;
        if (!g && !w) return "";
        if (gl != wl || g != w)
            return "line " + std::to_string(line) + ": got '" + (g ? gl : "<eof>") +
                   "', want '" + (w ? wl : "<eof>") + "'";
    }
}

// Rebuilds the displayed n <= 3 formulas of each family from their
// h-binomial/h-brace building blocks and compares with the recursion.
bool printed_examples_match(const ParityRegime& regime, int ell) {
    const KappaSpec kappa = kappa_for(regime, ell);
    const RatFunc kv(kappa.value());
    const RatFunc inv2(LaurentPoly::one(), qint(2));
    const RatFunc inv6(LaurentPoly::one(), qfact(3));
    const bool even_kappa = (regime.kappa == Parity::Even);
    const bool brace = (regime.weight == Parity::Odd);
    const auto cartan1 = [brace](int a) { return brace ? hbrace(a, 1) : hbinom(a, 1); };

    if (divided_recursive(1, regime, kappa) != t_element(kappa)) return false;

    PBWElement lin;
    lin.add_term({0, -1, 1}, qp(-1) * kv);
    lin.add_term({1, -1, 0}, qp(-1) * kv);

    // n = 2: b^(2) + (q-power) cartan + lin + tail K^-2
    int h2_arg = 0, h2_pow = 0;
    if (regime == kEvenEven) h2_pow = 1;
    if (regime == kOddEven) h2_pow = 1;
    if (regime == kEvenOdd) h2_pow = 3;
    if (regime == kOddOdd) { h2_arg = 1; h2_pow = -1; }
    PBWElement n2 = b_helper(2) + cartan1(h2_arg).scaled(qp(h2_pow)) + lin;
    const RatFunc tail2 = even_kappa ? kv * kv * inv2 : (kv * kv - RatFunc::one()) * inv2;
    n2.add_term({0, -2, 0}, tail2);
    if (divided_recursive(2, regime, kappa) != n2) return false;

    // n = 3
    int h3_arg = 0, h3_pow = 0;
    if (regime == kEvenEven) { h3_arg = -1; h3_pow = 3; }
    if (regime == kOddEven) h3_pow = -1;
    if (regime == kEvenOdd) h3_pow = 1;
    if (regime == kOddOdd) h3_pow = 1;
    PBWElement n3 = b_helper(3);
    n3 += multiply(cartan1(h3_arg), PBWElement::f(1)).scaled(qp(h3_pow));
    n3 += multiply(PBWElement::echeck(1), cartan1(h3_arg)).scaled(qp(h3_pow));
    n3.add_term({2, -1, 0}, qp(-2) * kv);
    n3.add_term({1, -1, 1}, qp(-3) * kv);
    n3.add_term({0, -1, 2}, qp(-2) * kv);
    n3 += multiply(cartan1(h3_arg), PBWElement::k(-1)).scaled(qp(h3_pow) * kv);
    const RatFunc mid = qp(-2) * tail2;
    n3.add_term({1, -2, 0}, mid);
    n3.add_term({0, -2, 1}, mid);
    const RatFunc tail3 = even_kappa ? (kv * kv * kv + (qp(-4) + qp(-2)) * kv) * inv6
                                     : (kv * kv * kv - kv) * inv6;
    n3.add_term({0, -3, 0}, tail3);
    return divided_recursive(3, regime, kappa) == n3;
}

SuiteBuilder build_golden(const GridOptions& opt) {
    SuiteBuilder sb;
    sb.name = "golden-examples";
    sb.grid = "dir " + opt.golden_dir;
    const std::string dir = opt.golden_dir;

    const auto add_table = [&sb, dir](const std::string& file,
                                      std::function<std::string()> gen) {
        sb.add([file, gen, dir] {
            bool ok = false;
            const std::string want = read_file(dir + "/" + file, ok);
            if (!ok)
                return make_case("golden/" + file, false, "missing golden file");
            const std::string got = gen();
            if (got == want) return make_case("golden/" + file, true, "byte-identical");
            return make_case("golden/" + file, false, first_diff(got, want));
        });
    };

    add_table("p_polynomials.txt", [] { return poly_table("p", 5); });
    add_table("frakp_polynomials.txt", [] { return poly_table("frakp", 5); });
    add_table("dvev.txt", [] { return idp_table(kEvenEven, 3); });
    add_table("dv.txt", [] { return idp_table(kOddEven, 3); });
    add_table("dvp.txt", [] { return idp_table(kEvenOdd, 3); });
    add_table("dvd.txt", [] { return idp_table(kOddOdd, 3); });

    sb.add([] {
        for (const ParityRegime regime : kAllRegimes)
            for (int ell = -2; ell <= 2; ++ell)
                if (!printed_examples_match(regime, ell))
                    return make_case("golden/printed-divided-powers", false,
                                     regime.cli_name() + " ell=" + std::to_string(ell));
        return make_case("golden/printed-divided-powers", true,
                         "n <= 3 matches the displayed formulas, ell in [-2,2]");
    });
    return sb;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "relations",  "golden-examples", "ipolys",  "expansion-equality", "integrality",
        "module-oracle", "lattice",      "sigma",   "genk",               "degree"};
    return names;
}

std::vector<VerificationReport> run_suites(const std::string& name, const GridOptions& opt) {
    std::vector<VerificationReport> out;
    const auto run_one = [&](const std::string& suite) {
        SuiteBuilder sb;
        if (suite == "relations")
            sb = build_relations(opt);
        else if (suite == "golden-examples")
            sb = build_golden(opt);
        else if (suite == "ipolys")
            sb = build_ipolys(opt);
        else if (suite == "expansion-equality")
            sb = build_expansion_equality(opt);
        else if (suite == "integrality")
            sb = build_integrality(opt);
        else if (suite == "module-oracle")
            sb = build_module_oracle(opt);
        else if (suite == "lattice")
            sb = build_lattice(opt);
        else if (suite == "sigma")
            sb = build_sigma(opt);
        else if (suite == "genk")
            sb = build_genk(opt);
        else if (suite == "degree")
            sb = build_degree(opt);
        else
            throw std::invalid_argument("unknown suite: " + suite);
        out.push_back(execute(sb, opt.jobs));
    };
    if (name == "all") {
        for (const auto& s : suite_names()) run_one(s);
    } else {
        run_one(name);
    }
    return out;
}

} // namespace idp
