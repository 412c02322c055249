#pragma once

#include <stdexcept>
#include <string>

namespace starcox {

// Each error type maps to one CLI exit code; see tools/starcox_cli.cpp.

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompositeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvenPrimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace starcox
