#ifndef IDP_ERRORS_HPP
#define IDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idp {

/// Thrown when a rational-function division has a zero divisor.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a quantity that must reduce to a Laurent polynomial does not.
/// Reaching this indicates an arithmetic bug, not bad input.
struct IntegralityViolation : std::runtime_error {
    explicit IntegralityViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace idp

#endif // IDP_ERRORS_HPP
