#include "idp/textform.hpp"

#include <sstream>
#include <stdexcept>

namespace idp {

namespace {

std::string latex_qpow(int e, const BigInt& mag) {
    std::ostringstream os;
    if (e == 0) return mag.get_str();
    if (mag != 1) os << mag.get_str() << " ";
    os << "q";
    if (e != 1) os << "^{" << e << "}";
    return os.str();
}

} // namespace

std::string to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = it->second < 0;
        const BigInt mag = neg ? BigInt(-it->second) : it->second;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << latex_qpow(it->first, mag);
    }
    return os.str();
}

std::string to_latex(const RatFunc& r) {
    if (r.is_integral()) return to_latex(r.num());
    return "\\frac{" + to_latex(r.num()) + "}{" + to_latex(r.den()) + "}";
}

std::string to_latex(const PBWElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        std::string mono;
        const auto append = [&mono](const std::string& part) {
            if (!mono.empty()) mono += " ";
            mono += part;
        };
        if (k.a == 1)
            append("\\check{E}");
        else if (k.a > 1)
            append("\\check{E}^{(" + std::to_string(k.a) + ")}");
        if (k.s != 0) append(k.s == 1 ? "K" : "K^{" + std::to_string(k.s) + "}");
        if (k.b == 1)
            append("F");
        else if (k.b > 1)
            append("F^{(" + std::to_string(k.b) + ")}");

        const bool neg = c.display_negative();
        const RatFunc shown = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool wrap = shown.is_integral() && shown.num().size() > 1 && !mono.empty();
        if (mono.empty()) {
            os << to_latex(shown);
        } else if (shown.is_one()) {
            os << mono;
        } else {
            os << (wrap ? "\\left(" + to_latex(shown) + "\\right)" : to_latex(shown)) << mono;
        }
    }
    return os.str();
}

std::string to_latex(const XPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const RatFunc c = p.coeff(d);
        if (c.is_zero()) continue;
        const bool neg = c.display_negative();
        const RatFunc shown = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string xs;
        if (d == 1) xs = var;
        if (d > 1) xs = var + "^{" + std::to_string(d) + "}";
        const bool wrap = shown.is_integral() && shown.num().size() > 1 && !xs.empty();
        if (xs.empty()) {
            os << to_latex(shown);
        } else if (shown.is_one()) {
            os << xs;
        } else {
            os << (wrap ? "\\left(" + to_latex(shown) + "\\right)" : to_latex(shown)) << " " << xs;
        }
    }
    return os.str();
}

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
    return terms;
}

Json to_json(const RatFunc& r) {
    return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Json to_json(const PBWElement& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms())
        terms.push_back({{"a", k.a}, {"s", k.s}, {"b", k.b}, {"coeff", to_json(c)}});
    return terms;
}

Json to_json(const XPoly& p) {
    Json coeffs = Json::array();
    for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(to_json(p.coeff(d)));
    return Json{{"coeffs", coeffs}};
}

Json to_json(const ModuleVector& v) {
    Json entries = Json::array();
    for (int b = 0; b <= v.mu(); ++b)
        entries.push_back({{"b", b}, {"coeff", to_json(v[b])}});
    return Json{{"mu", v.mu()}, {"entries", entries}};
}

std::string poly_table(const std::string& family, int n_max) {
    std::ostringstream os;
    for (int n = 0; n <= n_max; ++n) {
        if (family == "p") {
            os << "p_" << n << " = " << p_poly(n).to_string() << "\n";
        } else if (family == "frakp") {
            os << "frakp_" << n << " = " << frak_p_poly(n).to_string() << "\n";
        } else if (family == "g") {
            os << "g_" << n << " = " << g_poly(n).to_string() << "\n";
        } else if (family == "frakg") {
            os << "frakg_" << n << " = " << frak_g_poly(n).to_string() << "\n";
        } else {
            throw std::invalid_argument("poly_table: unknown family " + family);
        }
    }
    return os.str();
}

std::string idp_table(const ParityRegime& regime, int n_max) {
    std::ostringstream os;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<PBWElement> parts = kappa_decomposition(n, regime);
        os << regime.family_name() << "(" << n << ") =\n";
        for (int d = 0; d < static_cast<int>(parts.size()); ++d) {
            const PBWElement& part = parts[static_cast<std::size_t>(d)];
            if (part.is_zero()) continue;
            os << "  (kappa^" << d << ") " << part.to_string() << "\n";
        }
    }
    return os.str();
}

} // namespace idp
