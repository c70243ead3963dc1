#pragma once

#include <stdexcept>

namespace minortrace {

// Invalid caller-supplied data: malformed tuples, ambient mismatch,
// inconsistent flags.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A violated internal invariant. Indicates a bug, not bad input.
struct defect_error : std::logic_error {
  using std::logic_error::logic_error;
};

// An enumeration exceeded its configured cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace minortrace
