#pragma once

#include <gmpxx.h>

#include "yamaguti/error.hpp"

#include <string>
#include <string_view>

namespace yamaguti {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator, so `==` is canonical-form equality.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Whitespace around the value is ignored.
inline Scalar parse_scalar(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\n\r");
  std::size_t end = text.find_last_not_of(" \t\n\r");
  if (begin == std::string_view::npos) {
    throw Error("empty rational literal");
  }
  std::string s(text.substr(begin, end - begin + 1));
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  bool ok = slash == std::string::npos
                ? digits(start, s.size())
                : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) {
    throw Error("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Scalar value;
  value.set_str(s, 10);
  if (value.get_den() == 0) {
    throw Error("zero denominator in '" + s + "'");
  }
  value.canonicalize();
  return value;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& value) { return value.get_str(10); }

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace yamaguti
