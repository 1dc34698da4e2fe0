#pragma once

// Recursive-descent parser for  + - * / ^ ( )  expressions over integers and
// identifiers. The value semantics come from an Ops policy:
//   Value integer(const mpz_class&), symbol(name, pos), add, sub, mul, neg,
//   div(a, b, pos), pow(a, long e, pos)

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "skewpbw/error.hpp"

namespace skewpbw::detail {

[[noreturn]] inline void parseError(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::Parse, "at position " + std::to_string(pos) + ": " + what);
}

template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;

  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  Value parse() {
    skip();
    if (pos_ == s_.size()) parseError(pos_, "empty expression");
    Value v = expr();
    skip();
    if (pos_ != s_.size()) parseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) v = ops_.add(v, term());
      else if (accept('-')) v = ops_.sub(v, term());
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) v = ops_.mul(v, unary());
      else if (accept('/')) v = ops_.div(v, unary(), at);
      else return v;
    }
  }

  Value unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    return ops_.pow(base, exponent(), at);
  }

  long exponent() {
    bool paren = accept('(');
    bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) parseError(start, "expected an integer exponent");
    if (pos_ - start > 9) parseError(start, "exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) parseError(pos_, "expected ')'");
    return negative ? -e : e;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) parseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) parseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return ops_.symbol(std::string(s_.substr(start, pos_ - start)), start);
    }
    parseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

// Returns the generator index for "x<k>" with 1 <= k <= n, or -1.
inline long generatorIndex(const std::string& name, std::size_t n) {
  if (name.size() < 2 || name[0] != 'x') return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  if (name[1] == '0' || name.size() > 10) return -1;
  const long k = std::stol(name.substr(1));
  return (k >= 1 && static_cast<std::size_t>(k) <= n) ? k - 1 : -1;
}

}  // namespace skewpbw::detail
