#pragma once

#include <stdexcept>
#include <string>

namespace symbalg {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};
struct ContextMismatch : Error {
  using Error::Error;
};
struct NoRoot : Error {
  using Error::Error;
};
struct MissingRoot : Error {
  using Error::Error;
};
struct ZeroDenominator : Error {
  using Error::Error;
};
struct ZeroElement : Error {
  using Error::Error;
};
struct ZeroBeta : Error {
  using Error::Error;
};
struct CharTooSmall : Error {
  using Error::Error;
};
struct FuelExhausted : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct DependentInput : Error {
  using Error::Error;
};
struct NoSplittingField : Error {
  using Error::Error;
};
struct VariantMismatch : Error {
  using Error::Error;
};

// Raised when a computation contradicts a proved statement; always a bug.
struct InternalContradiction : Error {
  using Error::Error;
};

}  // namespace symbalg
