#pragma once

#include <stdexcept>
#include <string>

namespace affcore {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ScopeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInOrbit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotACore : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An exact identity that must hold did not; either the input is outside the
// theory or the implementation is wrong.
struct Inconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace affcore
