#pragma once

// Small recursive-descent parser shared by the class and series readers.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | juxtaposed unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' signed-integer)?
//   primary := integer | identifier | '(' expr ')'

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "motivic/error.hpp"
#include "motivic/gclass.hpp"

namespace motivic::detail {

template <class V>
struct ExprSemantics {
  std::function<V(const Integer&)> number;
  std::function<std::optional<V>(std::string_view)> symbol;
  std::function<V(const V&, const V&)> divide;
  std::function<V(const V&, long)> power;
};

template <class V>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprSemantics<V>& sem) : s_(text), sem_(sem) {}

  V parse() {
    V v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput,
                what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        v = sem_.divide(v, unary());
      } else if (starts_primary()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    V base = primary();
    if (eat('^')) {
      skip_ws();
      bool neg = false;
      if (eat('-')) neg = true;
      else eat('+');
      if (eat('(')) {
        bool inner_neg = eat('-');
        long e = integer_literal();
        if (!eat(')')) fail("expected ')'");
        if (inner_neg) e = -e;
        return sem_.power(base, neg ? -e : e);
      }
      long e = integer_literal();
      return sem_.power(base, neg ? -e : e);
    }
    return base;
  }

  long integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  V primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return sem_.number(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      if (auto v = sem_.symbol(name)) return *v;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const ExprSemantics<V>& sem_;
  std::size_t pos_ = 0;
};

}  // namespace motivic::detail
