#pragma once

#include <stdexcept>
#include <string>

namespace escalier {

/// Raised by the algebra layer when a precondition fails (dimension
/// mismatch, zero polynomial where a leading term is needed, ...).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the text parsers on malformed input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace escalier
