#ifndef STARLAB_ERRORS_HPP
#define STARLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starlab {

// Series or iteration failed to reach the requested tolerance.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the function.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A truncated-basis computation would exceed its tracked loss bound.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two symbols/operators with different mode counts were combined.
struct ModeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace starlab

#endif
