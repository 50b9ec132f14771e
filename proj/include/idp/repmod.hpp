/**
 * @file repmod.hpp
 * @brief Finite-dimensional simple modules L(mu) with canonical basis
 *        {F^(b) v+ : 0 <= b <= mu}, the PBW action, the closed double-sum
 *        action formulas of the divided powers on highest-weight vectors,
 *        integral-form membership tests, and the i-canonical-basis lattice
 *        condition.
 */
#ifndef IDP_REPMOD_HPP
#define IDP_REPMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "idp/idivided.hpp"
#include "idp/pbw.hpp"

namespace idp {

struct SimpleModule {
    int mu = 0; // highest weight; dimension mu + 1

    explicit SimpleModule(int highest_weight);
};

class ModuleVector {
public:
    ModuleVector(const SimpleModule& m, std::vector<RatFunc> entries);
    /// Zero vector in L(mu).
    explicit ModuleVector(const SimpleModule& m);
    /// Basis vector F^(b) v+.
    static ModuleVector basis(const SimpleModule& m, int b);
    /// Highest-weight vector v+.
    static ModuleVector highest(const SimpleModule& m) { return basis(m, 0); }

    int mu() const { return mu_; }
    int dim() const { return mu_ + 1; }
    const RatFunc& operator[](int b) const { return entries_[static_cast<std::size_t>(b)]; }
    RatFunc& operator[](int b) { return entries_[static_cast<std::size_t>(b)]; }
    const std::vector<RatFunc>& entries() const { return entries_; }

    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.mu_ == b.mu_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }

    ModuleVector scaled(const RatFunc& c) const;
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b);
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b);

    std::string to_string() const;

private:
    int mu_;
    std::vector<RatFunc> entries_;
};

/// Left action of a PBW element. Generator conventions on F^(b) v+:
///   K   -> q^{mu-2b},  F F^(b) = [b+1] F^(b+1)  (zero past b = mu),
///   E F^(b) = [mu-b+1] F^(b-1)  (zero at b = 0),
/// and Ec^(a) = q^{-a^2} E^(a) K^{-a}.
ModuleVector act(const PBWElement& x, const ModuleVector& v, const SimpleModule& m);

/// Closed double-sum action of the n-th divided power on the highest-weight
/// vector of L(2*lambda) (even-weight regimes) or L(2*lambda+1) (odd).
ModuleVector divided_action_closed(int n, const ParityRegime& regime, int ell, int lambda);

struct IntegralityWitness {
    int mu = 0;
    int basis_index = 0;
    int entry = 0;
    RatFunc value;
};

/// True iff x preserves the Lusztig A-form of every L(mu) with
/// mu <= mu_max of the given weight parity.
bool integrality_check(const PBWElement& x, Parity weight_parity, int mu_max,
                       IntegralityWitness* witness = nullptr);

struct LatticeResult {
    bool ok = false;
    int witness_index = -1;
    std::string reason;
};

/// (iCB2) at index n: entry n equals 1, entries above n vanish, entries
/// below n lie in q^-1 Z[q^-1].
LatticeResult icb_lattice_check(const ModuleVector& v, int n);

/// Smallest lambda <= lambda_max whose highest-weight action vector passes
/// icb_lattice_check; nullopt when none does.
std::optional<int> find_lattice_threshold(int n, const ParityRegime& regime, int ell,
                                          int lambda_max);

} // namespace idp

#endif // IDP_REPMOD_HPP
