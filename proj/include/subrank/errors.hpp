#pragma once

#include <stdexcept>
#include <string>

namespace subrank {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleAtZero : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct LimitNotUnit : Error {
  using Error::Error;
};
struct ClaimMismatch : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct BadPrime : Error {
  using Error::Error;
};
struct RangeError : Error {
  using Error::Error;
};
struct NotLocalForm : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct NotWeightAdmissible : Error {
  using Error::Error;
};
struct NoSeparator : Error {
  using Error::Error;
};
struct AmbiguousSeparator : Error {
  using Error::Error;
};
struct WitnessVanishes : Error {
  using Error::Error;
};
struct InputError : Error {
  using Error::Error;
};

}  // namespace subrank
