#pragma once

#include <stdexcept>
#include <string>

namespace jla {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or index mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

/// A construction failed a closure or consistency verification.
/// The message carries the offending basis indices.
struct ConstructionError : Error {
  using Error::Error;
};

/// A representation has no rational grading of the required form.
struct GradingError : Error {
  using Error::Error;
};

/// Malformed input file or option (CLI exit code 2).
struct InputError : Error {
  using Error::Error;
};

}  // namespace jla
