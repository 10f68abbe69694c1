#pragma once

#include <stdexcept>
#include <string>

namespace orbsurf {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct NotNegativeDefinite : Error {
  using Error::Error;
};
struct NotSmoothModel : Error {
  using Error::Error;
};
struct BadCenter : Error {
  using Error::Error;
};
struct UnknownCurve : Error {
  using Error::Error;
};
struct DepthTooLarge : Error {
  using Error::Error;
};
struct BadRamification : Error {
  using Error::Error;
};
struct InconsistentInput : Error {
  using Error::Error;
};
struct ContractionFailed : Error {
  using Error::Error;
};
struct UnknownCommand : Error {
  using Error::Error;
};

}  // namespace orbsurf
