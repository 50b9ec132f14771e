/**
 * @file verify.hpp
 * @brief The verification suites behind `idp verify` and the acceptance
 *        binary: every closed formula, expansion theorem, integrality claim,
 *        and lattice condition is checked here over finite grids.
 */
#ifndef IDP_VERIFY_HPP
#define IDP_VERIFY_HPP

#include <string>
#include <vector>

#include "idp/laurent.hpp"

namespace idp {

struct GridOptions {
    int n_max_expansion = 6; // expansion-equality / sigma
    int n_max_module = 5;    // integrality / module-oracle / lattice
    int ell_abs = 2;         // ell ranges over [-ell_abs, ell_abs]
    int mu_max = 20;
    int n_max_poly = 12; // polynomial suite
    int ell_abs_poly = 4;
    int lattice_slack = 12; // lambda cap = n + 2|ell| + slack
    int genk_lambda_max = 12;
    int genk_mu_max = 12;
    unsigned seed = 20240001u;
    int jobs = 1;
    std::vector<LaurentPoly> genk_kappas; // empty -> built-in list
    std::string golden_dir;               // location of tests/golden
};

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::string grid;
    std::vector<CaseResult> cases;
    double wall_seconds = 0.0;

    bool all_pass() const;
    int failures() const;
    /// Deterministic body (no timings).
    std::string to_text() const;
    std::string to_json_text() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" concatenates every suite in order).
std::vector<VerificationReport> run_suites(const std::string& name, const GridOptions& opt);

} // namespace idp

#endif // IDP_VERIFY_HPP
