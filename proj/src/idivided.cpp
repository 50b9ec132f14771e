#include "idp/idivided.hpp"

#include <sstream>
#include <stdexcept>

#include "idp/qarith.hpp"

namespace idp {

const char* ParityRegime::family_name() const {
    if (weight == Parity::Even) return kappa == Parity::Even ? "dvev" : "dvp";
    return kappa == Parity::Even ? "dv" : "dvd";
}

std::string ParityRegime::cli_name() const {
    return std::string(parity_name(weight)) + "-" + parity_name(kappa);
}

ParityRegime parse_regime(const std::string& name) {
    for (const ParityRegime& r : kAllRegimes)
        if (r.cli_name() == name) return r;
    throw std::invalid_argument("unknown regime: " + name +
                                " (expected even-even|odd-even|even-odd|odd-odd)");
}

KappaSpec kappa_for(const ParityRegime& regime, int ell) {
    return regime.kappa == Parity::Even ? KappaSpec::even_qint(ell) : KappaSpec::odd_qint(ell);
}

PBWElement t_element(const KappaSpec& kappa) {
    PBWElement t;
    t.add_term({0, 0, 1}, RatFunc::one());
    t.add_term({1, 0, 0}, RatFunc::one());
    t.add_term({0, -1, 0}, RatFunc(kappa.value()));
    return t;
}

namespace {

void require_parity_match(const ParityRegime& regime, const KappaSpec& kappa,
                          const char* where) {
    if (!kappa.is_q_integer() || kappa.qint_parity() != regime.kappa) {
        std::ostringstream os;
        os << where << ": kappa " << kappa.to_string() << " does not match regime "
           << regime.cli_name();
        throw std::invalid_argument(os.str());
    }
}

// The recursion pattern with the correction on the odd step:
//   t d(2a-1) = [2a] d(2a),  t d(2a) = [2a+1] d(2a+1) + [2a] d(2a-1).
// Regimes with weight parity == kappa parity use it; the other two use the
// mirrored pattern with the correction on the even step.
bool correction_on_odd_step(const ParityRegime& regime) {
    return regime.weight == regime.kappa;
}

RatFunc inv_qint(int n) { return RatFunc(LaurentPoly::one(), qint(n)); }

} // namespace

PBWElement divided_recursive(int n, const ParityRegime& regime, const KappaSpec& kappa) {
    if (n < 0) throw std::domain_error("divided_recursive: negative n");
    require_parity_match(regime, kappa, "divided_recursive");
    const bool odd_correction = correction_on_odd_step(regime);
    const PBWElement t = t_element(kappa);
    PBWElement prev2 = PBWElement::one(); // d(0)
    if (n == 0) return prev2;
    PBWElement prev = t; // d(1)
    for (int k = 2; k <= n; ++k) {
        PBWElement next = multiply(t, prev);
        const bool even_step = (k % 2 == 0);
        if (even_step != odd_correction) {
            // step carrying the lower-order term: t d(k-1) = [k] d(k) + [k-1] d(k-2)
            next -= prev2.scaled(RatFunc(qint(k - 1)));
        }
        next = next.scaled(inv_qint(k));
        prev2 = prev;
        prev = next;
    }
    return prev;
}

XPoly divided_closed_t(int n, const ParityRegime& regime) {
    if (n < 0) throw std::domain_error("divided_closed_t: negative n");
    if (n == 0) return XPoly::one();
    XPoly prod = XPoly::one();
    const int a = n / 2;
    if (correction_on_odd_step(regime)) {
        // n = 2a:   t (t-[-2a+2]) (t-[-2a+4]) ... (t-[2a-2]) / [2a]!
        // n = 2a+1:   (t-[-2a])   (t-[-2a+2]) ... (t-[2a])   / [2a+1]!
        if (n % 2 == 0) {
            prod = XPoly::x();
            for (int j = -a + 1; j <= a - 1; ++j)
                prod *= XPoly::monic_linear(RatFunc(qint(2 * j)));
        } else {
            for (int j = -a; j <= a; ++j)
                prod *= XPoly::monic_linear(RatFunc(qint(2 * j)));
        }
    } else {
        // n = 2a:     (t-[-2a+1]) (t-[-2a+3]) ... (t-[2a-1]) / [2a]!
        // n = 2a+1: t (t-[-2a+1]) (t-[-2a+3]) ... (t-[2a-1]) / [2a+1]!
        if (n % 2 == 1) prod = XPoly::x();
        for (int j = -a + 1; j <= a; ++j)
            prod *= XPoly::monic_linear(RatFunc(qint(2 * j - 1)));
    }
    return divided(prod, n);
}

PBWElement expand_in_t(const XPoly& poly_in_t, const KappaSpec& kappa) {
    const PBWElement t = t_element(kappa);
    PBWElement r;
    for (int d = poly_in_t.degree(); d >= 0; --d) {
        r = multiply(r, t);
        r.add_term({0, 0, 0}, poly_in_t.coeff(d));
    }
    return r;
}

namespace {

struct ExpansionShape {
    int m = 0;          // half-index entering the Cartan argument
    int ehf_c_shift;    // q^{binom(2c,2) + shift*c - b*k - a(b-a)}
    int fhe_c_coeff;    // (-1)^c q^{coeff*c + b*k + a(b-a)}
    int ehf_harg;       // Cartan argument for the EhF order
    int fhe_harg_base;  // Cartan argument for the FhE order is base - c
    bool brace;         // braces <h;.> for odd weight, binomials (h;.) for even
    bool frak;          // frak-p family for odd kappa, p family for even
};

ExpansionShape shape_for(int n, const ParityRegime& regime) {
    ExpansionShape sh{};
    sh.brace = (regime.weight == Parity::Odd);
    sh.frak = (regime.kappa == Parity::Odd);
    const bool even_n = (n % 2 == 0);
    // by-regime conventions: for odd n, the matching-parity regimes write
    // n = 2m-1, the mixed-parity regimes write n = 2m+1
    const bool odd_corr = (regime.weight == regime.kappa);
    sh.m = even_n ? n / 2 : (odd_corr ? (n + 1) / 2 : (n - 1) / 2);

    if (regime == kEvenEven) {
        sh.ehf_c_shift = even_n ? 0 : 2;
        sh.fhe_c_coeff = even_n ? 3 : 1;
        sh.ehf_harg = 1 - sh.m;
        sh.fhe_harg_base = sh.m;
    } else if (regime == kOddEven) {
        sh.ehf_c_shift = even_n ? 0 : -2;
        sh.fhe_c_coeff = even_n ? -1 : 1;
        sh.ehf_harg = 1 - sh.m;
        sh.fhe_harg_base = 1 + sh.m;
    } else if (regime == kEvenOdd) {
        sh.ehf_c_shift = even_n ? 2 : 0;
        sh.fhe_c_coeff = even_n ? 1 : 3;
        sh.ehf_harg = 1 - sh.m;
        sh.fhe_harg_base = sh.m;
    } else { // kOddOdd
        sh.ehf_c_shift = even_n ? -2 : 0;
        sh.fhe_c_coeff = even_n ? 1 : -1;
        sh.ehf_harg = 2 - sh.m;
        sh.fhe_harg_base = sh.m;
    }
    return sh;
}

PBWElement cartan_factor(bool brace, int arg, int c) {
    return brace ? hbrace(arg, c) : hbinom(arg, c);
}

const XPoly& poly_family(bool frak, int k) { return frak ? frak_p_poly(k) : p_poly(k); }

} // namespace

PBWElement divided_expansion(int n, const ParityRegime& regime, const KappaSpec& kappa,
                             SumOrder order) {
    if (n < 0) throw std::domain_error("divided_expansion: negative n");
    require_parity_match(regime, kappa, "divided_expansion");
    const ExpansionShape sh = shape_for(n, regime);
    const RatFunc kval(kappa.value());

    PBWElement result;
    for (int b = 0; b <= n; ++b) {
        for (int c = 0; n - b - 2 * c >= 0; ++c) {
            const int k = n - b - 2 * c; // polynomial index; terms vanish below 0
            const RatFunc pval = divided(poly_family(sh.frak, k), k).eval(kval);
            if (pval.is_zero()) continue;
            const int k_exp = b - n + 2 * c;
            for (int a = 0; a <= b; ++a) {
                if (order == SumOrder::EhF) {
                    const long e = binom2(2 * c) + static_cast<long>(sh.ehf_c_shift) * c -
                                   static_cast<long>(b) * k - static_cast<long>(a) * (b - a);
                    const RatFunc coeff = pval * RatFunc(LaurentPoly::q_power(static_cast<int>(e)));
                    // Ec^(a) (h-factor) K^{k_exp} F^(b-a): already normally ordered
                    const PBWElement cart = cartan_factor(sh.brace, sh.ehf_harg, c);
                    for (const auto& [hk, hc] : cart.terms())
                        result.add_term({a, hk.s + k_exp, b - a}, coeff * hc);
                } else {
                    const long e = static_cast<long>(sh.fhe_c_coeff) * c +
                                   static_cast<long>(b) * k + static_cast<long>(a) * (b - a);
                    // the F..Ec ordering carries the sigma-image of the
                    // polynomial value, i.e. its bar
                    RatFunc coeff =
                        pval.bar() * RatFunc(LaurentPoly::q_power(static_cast<int>(e)));
                    if (c % 2 == 1) coeff = -coeff;
                    // F^(b-a) K^{k_exp} (h-factor) Ec^(a): needs reordering
                    PBWElement cart = cartan_factor(sh.brace, sh.fhe_harg_base - c, c);
                    PBWElement mono;
                    for (const auto& [hk, hc] : cart.terms())
                        mono.add_term({0, hk.s + k_exp, 0}, hc);
                    mono = multiply(mono, PBWElement::echeck(a));
                    mono = multiply(PBWElement::f(b - a), mono);
                    result += mono.scaled(coeff);
                }
            }
        }
    }
    return result;
}

std::vector<PBWElement> kappa_decomposition(int n, const ParityRegime& regime) {
    if (n < 0) throw std::domain_error("kappa_decomposition: negative n");
    // nodes of the regime's parity: [2j] or [2j-1], j = 0..n
    std::vector<KappaSpec> nodes;
    std::vector<PBWElement> values;
    for (int j = 0; j <= n; ++j) {
        KappaSpec node = kappa_for(regime, j);
        values.push_back(divided_recursive(n, regime, node));
        nodes.push_back(std::move(node));
    }
    std::vector<PBWElement> out(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        // Lagrange basis polynomial through node j
        XPoly basis = XPoly::one();
        RatFunc denom = RatFunc::one();
        for (int i = 0; i <= n; ++i) {
            if (i == j) continue;
            basis *= XPoly::monic_linear(RatFunc(nodes[static_cast<std::size_t>(i)].value()));
            denom *= RatFunc(nodes[static_cast<std::size_t>(j)].value() -
                             nodes[static_cast<std::size_t>(i)].value());
        }
        basis = basis.scaled(denom.inv());
        for (int d = 0; d <= n; ++d) {
            const RatFunc w = basis.coeff(d);
            if (!w.is_zero())
                out[static_cast<std::size_t>(d)] += values[static_cast<std::size_t>(j)].scaled(w);
        }
    }
    return out;
}

} // namespace idp
