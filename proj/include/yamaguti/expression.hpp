#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "yamaguti/scalar.hpp"

namespace yamaguti {

/// Named rational values substituted into symbolic coefficients.
using Parameters = std::map<std::string, Scalar, std::less<>>;

/// Parses "a=1,b=-2/3" into a parameter map.
inline Parameters parse_parameters(std::string_view text) {
  Parameters out;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error("parameter assignment '" + std::string(item) + "' must look like name=value");
    }
    std::string name(item.substr(0, eq));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    out[name] = parse_scalar(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

namespace detail {

/// Recursive-descent evaluator for rational expressions with + − * / ^,
/// parentheses and parameter names.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Parameters& params)
      : text_(text), params_(params) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("in coefficient '" + std::string(text_) + "': " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (is_zero(d)) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (!accept('^')) return base;
    Scalar e = unary();
    if (e.get_den() != 1) fail("exponent must be an integer");
    if (!e.get_num().fits_slong_p()) fail("exponent out of range");
    long k = e.get_num().get_si();
    if (k < 0 && is_zero(base)) fail("zero to a negative power");
    Scalar out = 1;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
    if (k < 0) out = 1 / out;
    return out;
  }

  Scalar primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return parse_scalar(text_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = params_.find(name);
      if (it == params_.end()) fail("unbound parameter '" + std::string(name) + "' (use --sample)");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Parameters& params_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar evaluate_expression(std::string_view text, const Parameters& params = {}) {
  return detail::ExpressionParser(text, params).run();
}

}  // namespace yamaguti
