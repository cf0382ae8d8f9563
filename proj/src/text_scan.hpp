#pragma once

// Small cursor used by the term, word and polynomial parsers.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "escalier/error.hpp"

namespace escalier::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t number() {
    if (!at_digit()) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  /// Parses `X<k>` and returns the 0-based variable index.
  std::size_t variable(std::size_t nvars) {
    if (!accept('X')) fail("expected a variable X1..X" + std::to_string(nvars));
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a variable index after 'X'");
    std::uint64_t k = number();
    if (k < 1 || k > nvars) fail("variable X" + std::to_string(k) + " out of range 1.." + std::to_string(nvars));
    return static_cast<std::size_t>(k - 1);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace escalier::detail
