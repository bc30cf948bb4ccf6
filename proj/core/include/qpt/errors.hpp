#pragma once

#include <stdexcept>

namespace qpt {

// Caller-supplied parameter outside an operation's contract (arity, eps, flip
// count, table length).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input: truth-table files, bit strings, generator specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A measurement landed on a branch whose probability is too small to
// renormalize the collapsed state.
class NumericalDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpt
