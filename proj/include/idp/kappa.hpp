/**
 * @file kappa.hpp
 * @brief The coideal parameter kappa: a bar-invariant element of Z[q,q^-1],
 *        usually a q-integer [2l] or [2l-1].
 */
#ifndef IDP_KAPPA_HPP
#define IDP_KAPPA_HPP

#include <string>

#include "idp/laurent.hpp"

namespace idp {

enum class Parity { Even, Odd };

inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

class KappaSpec {
public:
    enum class Kind { EvenQInt, OddQInt, Generic };

    /// kappa = [2l].
    static KappaSpec even_qint(int ell);
    /// kappa = [2l-1].
    static KappaSpec odd_qint(int ell);
    /// Arbitrary bar-invariant value; throws std::invalid_argument otherwise.
    static KappaSpec generic(const LaurentPoly& value);

    Kind kind() const { return kind_; }
    /// Only meaningful for the q-integer kinds.
    int ell() const { return ell_; }
    const LaurentPoly& value() const { return value_; }

    bool is_q_integer() const { return kind_ != Kind::Generic; }
    /// Parity as a q-integer; invalid for Generic.
    Parity qint_parity() const;

    std::string to_string() const;

private:
    KappaSpec(Kind kind, int ell, LaurentPoly value)
        : kind_(kind), ell_(ell), value_(std::move(value)) {}

    Kind kind_;
    int ell_;
    LaurentPoly value_;
};

/// Parses Laurent expressions such as "2*q^4 + 1 + 2*q^-4", "q^2+1+q^-2",
/// "[3]", "-[4]", "0". Throws std::invalid_argument on malformed input.
LaurentPoly parse_laurent(const std::string& text);

} // namespace idp

#endif // IDP_KAPPA_HPP
