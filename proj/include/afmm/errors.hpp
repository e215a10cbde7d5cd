#pragma once

#include <stdexcept>
#include <string>

namespace afmm {

/// Dimension or layout mismatch (ragged rows, non-square input, size disagreement).
class shape_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A report grid is missing cells; the message lists them.
class grid_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace afmm
