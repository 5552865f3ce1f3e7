#pragma once

#include <stdexcept>
#include <string>

namespace qplanes {

// Input violates an operation's precondition (collinear triple, degenerate
// plane, wrong species, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A self-check inside an operation failed; indicates a bug or numerical breakdown.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qplanes
