/**
 * @file textform.hpp
 * @brief Canonical text, LaTeX, and JSON renderings, plus the printed-table
 *        generators used for golden-file comparison.
 */
#ifndef IDP_TEXTFORM_HPP
#define IDP_TEXTFORM_HPP

#include <string>

#include <json.hpp>

#include "idp/idivided.hpp"
#include "idp/pbw.hpp"
#include "idp/repmod.hpp"
#include "idp/xpoly.hpp"

namespace idp {

using Json = nlohmann::json;

std::string to_latex(const LaurentPoly& p);
std::string to_latex(const RatFunc& r);
std::string to_latex(const PBWElement& e);
std::string to_latex(const XPoly& p, const std::string& var);

Json to_json(const LaurentPoly& p);
Json to_json(const RatFunc& r);
Json to_json(const PBWElement& e);
Json to_json(const XPoly& p);
Json to_json(const ModuleVector& v);

/// "p" | "frakp" | "g" | "frakg" table up to n_max, one definition per line.
std::string poly_table(const std::string& family, int n_max);

/// Divided powers of one regime for symbolic kappa, n = 1..n_max, grouped by
/// powers of kappa.
std::string idp_table(const ParityRegime& regime, int n_max);

} // namespace idp

#endif // IDP_TEXTFORM_HPP
