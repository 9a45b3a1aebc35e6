#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pombox {

/// Lexical or syntax error in term/formula text. `position` is a byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A construct used outside the fragment that admits it: 0 or + in a
/// series-parallel context, negation under a subsumption relation.
class FragmentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace pombox
