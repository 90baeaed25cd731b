#pragma once

#include <stdexcept>
#include <string>

namespace dpgc {

// Bad user input: malformed graphs, arity mismatches, unknown names.
// The C API maps this to DPGC_ERR_INVALID (CLI exit code 2).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant (indicates a bug, not bad input).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace dpgc
