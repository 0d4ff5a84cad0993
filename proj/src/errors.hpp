#pragma once

#include <stdexcept>

namespace umk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON, CSV). Messages carry positions.
struct ParseError : Error {
  using Error::Error;
};

/// A structural invariant was violated (asymmetric matrix, nonzero diagonal,
/// empty partition class, g-domain mismatch, ...).
struct StructureError : Error {
  using Error::Error;
};

/// An operation precondition does not hold (non-ultrametric input, budget
/// exceeded, radius not positive, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Exact arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace umk
