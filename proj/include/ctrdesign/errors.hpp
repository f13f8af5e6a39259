#pragma once

#include <stdexcept>
#include <string>

namespace ctrdesign {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data: bad schema, negative masses, dimension mismatch.
struct ValidationError : Error {
    using Error::Error;
};

/// Arguments outside an operation's admissible domain.
struct ParameterError : Error {
    using Error::Error;
};

/// A construction or program has no feasible solution.
struct InfeasibleError : Error {
    using Error::Error;
};

/// Generalized dispersion with a == l: the environment degenerates to
/// perfectly negatively correlated CTRs and full disclosure is optimal.
struct DegenerateCase : Error {
    using Error::Error;
};

/// A condition the theory rules out was observed; carries diagnostics.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ctrdesign
