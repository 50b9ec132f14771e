#include "idp/repmod.hpp"

#include <sstream>
#include <stdexcept>

#include "idp/qarith.hpp"

namespace idp {

SimpleModule::SimpleModule(int highest_weight) : mu(highest_weight) {
    if (mu < 0) throw std::domain_error("SimpleModule: negative highest weight");
}

ModuleVector::ModuleVector(const SimpleModule& m, std::vector<RatFunc> entries)
    : mu_(m.mu), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != mu_ + 1)
        throw std::invalid_argument("ModuleVector: dimension mismatch");
}

ModuleVector::ModuleVector(const SimpleModule& m)
    : mu_(m.mu), entries_(static_cast<std::size_t>(m.mu) + 1) {}

ModuleVector ModuleVector::basis(const SimpleModule& m, int b) {
    if (b < 0 || b > m.mu) throw std::out_of_range("ModuleVector::basis: index out of range");
    ModuleVector v(m);
    v[b] = RatFunc::one();
    return v;
}

ModuleVector ModuleVector::scaled(const RatFunc& c) const {
    ModuleVector r = *this;
    for (auto& e : r.entries_) e *= c;
    return r;
}

ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    if (a.mu_ != b.mu_) throw std::invalid_argument("ModuleVector: dimension mismatch");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
}

ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    if (a.mu_ != b.mu_) throw std::invalid_argument("ModuleVector: dimension mismatch");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
}

std::string ModuleVector::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int b = 0; b <= mu_; ++b) {
        if (b) os << ", ";
        os << entries_[static_cast<std::size_t>(b)].to_string();
    }
    os << "]";
    return os.str();
}

ModuleVector act(const PBWElement& x, const ModuleVector& v, const SimpleModule& m) {
    if (v.mu() != m.mu) throw std::invalid_argument("act: dimension mismatch");
    const int mu = m.mu;
    ModuleVector out(m);
    for (const auto& [key, c] : x.terms()) {
        for (int r = 0; r <= mu; ++r) {
            const RatFunc& vr = v[r];
            if (vr.is_zero()) continue;
            // F^(b): r -> r + b with factor [r+b choose b]
            const int r1 = r + key.b;
            if (r1 > mu) continue;
            // Ec^(a) = q^{-a^2} E^(a) K^{-a}: r1 -> r1 - a
            const int r2 = r1 - key.a;
            if (r2 < 0) continue;
            RatFunc f = c * vr;
            if (key.b > 0) f *= qbinom(r1, key.b);
            const int wt1 = mu - 2 * r1; // weight of F^(r1) v+
            long qexp = static_cast<long>(key.s) * wt1; // K^s
            if (key.a > 0) {
                qexp += -static_cast<long>(key.a) * key.a - static_cast<long>(key.a) * wt1;
                f *= qbinom(mu - r1 + key.a, key.a); // E^(a) F^(r1) v+
            }
            if (qexp != 0) f *= RatFunc(LaurentPoly::q_power(static_cast<int>(qexp)));
            out[r2] += f;
        }
    }
    return out;
}

namespace {

struct ActionShape {
    int m = 0;
    int c_sign = 0;   // q^{(b-mu)k - 2c^2 + c_sign*c}
    int carg_base = 0; // cbinom argument is carg_base - lambda - c
};

// Closed double sums, obtained from the F..Ec-ordered expansions applied to
// v+ (only a = 0 survives) and the exact evaluation of the Cartan factor on
// the weight-mu line.
ActionShape action_shape(int n, const ParityRegime& regime) {
    ActionShape sh{};
    const bool even_n = (n % 2 == 0);
    const bool odd_corr = (regime.weight == regime.kappa);
    sh.m = even_n ? n / 2 : (odd_corr ? (n + 1) / 2 : (n - 1) / 2);
    if (regime == kEvenEven) {
        sh.c_sign = even_n ? +1 : -1;
        sh.carg_base = sh.m;
    } else if (regime == kOddEven) {
        sh.c_sign = even_n ? -1 : +1;
        sh.carg_base = sh.m;
    } else if (regime == kEvenOdd) {
        sh.c_sign = even_n ? -1 : +1;
        sh.carg_base = sh.m;
    } else { // kOddOdd
        sh.c_sign = even_n ? +1 : -1;
        sh.carg_base = sh.m - 1;
    }
    return sh;
}

} // namespace

ModuleVector divided_action_closed(int n, const ParityRegime& regime, int ell, int lambda) {
    if (n < 0) throw std::domain_error("divided_action_closed: negative n");
    const int mu = (regime.weight == Parity::Even) ? 2 * lambda : 2 * lambda + 1;
    if (mu < 0) throw std::domain_error("divided_action_closed: negative weight");
    const SimpleModule m(mu);
    const KappaSpec kappa = kappa_for(regime, ell);
    const RatFunc kval(kappa.value());
    const ActionShape sh = action_shape(n, regime);
    const bool frak = (regime.kappa == Parity::Odd);

    ModuleVector out(m);
    for (int b = 0; b <= n && b <= mu; ++b) {
        for (int c = 0; n - b - 2 * c >= 0; ++c) {
            const int k = n - b - 2 * c;
            // these sums come from the F..Ec ordering, which carries the bar
            // of the polynomial value
            const RatFunc pval =
                divided(frak ? frak_p_poly(k) : p_poly(k), k).eval(kval).bar();
            if (pval.is_zero()) continue;
            const long e = static_cast<long>(b - mu) * k - 2L * c * c +
                           static_cast<long>(sh.c_sign) * c;
            RatFunc coeff = pval * RatFunc(LaurentPoly::q_power(static_cast<int>(e)));
            coeff *= RatFunc(cbinom(sh.carg_base - lambda - c, c));
            out[b] += coeff;
        }
    }
    return out;
}

bool integrality_check(const PBWElement& x, Parity weight_parity, int mu_max,
                       IntegralityWitness* witness) {
    const int start = (weight_parity == Parity::Even) ? 0 : 1;
    for (int mu = start; mu <= mu_max; mu += 2) {
        const SimpleModule m(mu);
        for (int b = 0; b <= mu; ++b) {
            const ModuleVector image = act(x, ModuleVector::basis(m, b), m);
            for (int r = 0; r <= mu; ++r) {
                if (!image[r].is_integral()) {
                    if (witness) *witness = {mu, b, r, image[r]};
                    return false;
                }
            }
        }
    }
    return true;
}

LatticeResult icb_lattice_check(const ModuleVector& v, int n) {
    if (n < 0 || n > v.mu())
        return {false, n, "leading index outside the module"};
    if (!(v[n] == RatFunc::one()))
        return {false, n, "leading entry is " + v[n].to_string() + ", expected 1"};
    for (int r = n + 1; r <= v.mu(); ++r)
        if (!v[r].is_zero())
            return {false, r, "nonzero entry above the leading index"};
    for (int r = 0; r < n; ++r) {
        const RatFunc& e = v[r];
        if (e.is_zero()) continue;
        if (!e.is_integral())
            return {false, r, "entry not integral: " + e.to_string()};
        if (!e.num().in_qinv_z_qinv())
            return {false, r, "entry not in q^-1 Z[q^-1]: " + e.to_string()};
    }
    return {true, -1, ""};
}

std::optional<int> find_lattice_threshold(int n, const ParityRegime& regime, int ell,
                                          int lambda_max) {
    const int even_weight = (regime.weight == Parity::Even);
    int lambda_min = 0;
    while ((even_weight ? 2 * lambda_min : 2 * lambda_min + 1) < n) ++lambda_min;
    for (int lambda = lambda_min; lambda <= lambda_max; ++lambda) {
        const ModuleVector v = divided_action_closed(n, regime, ell, lambda);
        if (icb_lattice_check(v, n).ok) return lambda;
    }
    return std::nullopt;
}

} // namespace idp
