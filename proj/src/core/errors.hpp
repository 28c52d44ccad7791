#pragma once

#include <stdexcept>
#include <string>

namespace pcc {

// Input text could not be parsed. `line` is 1-based.
struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Bad argument or violated precondition.
struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size guard or the search-node budget was hit. Pass force=true or raise
// PCC_MAX_WORK to lift it.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; the message names the violated step.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pcc
