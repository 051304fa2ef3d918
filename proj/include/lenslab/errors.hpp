#ifndef LENSLAB_ERRORS_HPP
#define LENSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lenslab {

// Bad argument values: parameters outside their admissible range.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Points outside the mathematical domain of an operation (|z| >= 1,
// poles, essential singularities, undefined boundary values).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A numeric procedure failed to reach its stated accuracy: validation
// mismatch, non-convergent quadrature, SVD failure, bracket failure.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural assumption of a construction was violated at runtime
// (monotonicity of an inverted branch, dominance of a scanned sup, ...).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Not enough usable data points for a fit.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lenslab

#endif
