#pragma once

#include <stdexcept>
#include <string>

namespace octorb {

// All domain-specific failures derive from Error so callers can catch the
// whole family while tests can still pin the exact kind.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// An element expected to lie in the M2(F) part has a nonzero v-coordinate.
struct NotInM2 : Error {
  using Error::Error;
};

// x + conj(x) or x*conj(x) failed to be a multiple of the unit; only a broken
// structure table can cause this.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct Singular : Error {
  using Error::Error;
};

struct MissingParam : Error {
  using Error::Error;
};

struct ZeroParamForbidden : Error {
  using Error::Error;
};

// A partially specified involution admits no (unique) completion.
struct CompletionFailed : Error {
  using Error::Error;
};

struct ConstraintViolation : Error {
  using Error::Error;
};

struct RbSelfCheckFailed : Error {
  using Error::Error;
};

struct OutOfRemarkScope : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct OrbitBudgetExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace octorb
