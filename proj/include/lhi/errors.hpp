#ifndef LHI_ERRORS_HPP
#define LHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lhi {

// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the function's real domain (x <= 1, t <= 0, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Gamma evaluated at a non-positive integer.
struct PoleError : DomainError {
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Parameter combination hits an unresolvable pole (e.g. 2F1 with c a
// non-positive integer that the series does not terminate before).
struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A series or transformation failed to converge to the requested accuracy.
struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Bessel order outside the supported box |mu| <= 8.
struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& msg) : Error(msg) {}
};

// Requested Q-normalization has a 0/0 or infinite conversion factor.
struct ConventionDegenerate : Error {
    explicit ConventionDegenerate(const std::string& msg) : Error(msg) {}
};

// The integral's t -> 0 convergence condition is violated.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Laplace point outside the transform's existence domain.
struct ExistenceError : Error {
    explicit ExistenceError(const std::string& msg) : Error(msg) {}
};

// Quadrature could not meet the error target within the evaluation budget.
struct AccuracyError : Error {
    explicit AccuracyError(const std::string& msg) : Error(msg) {}
};

// Errata audit requested at parameters where the published factors degenerate.
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& msg) : Error(msg) {}
};

} // namespace lhi

#endif
