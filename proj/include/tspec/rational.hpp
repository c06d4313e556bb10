#ifndef TSPEC_RATIONAL_HPP
#define TSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "tspec/error.hpp"

namespace tspec {

// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; only raw string construction needs canonicalize().
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only).
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? digits(body)
                      : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw Error(Errc::Parse, "malformed rational '" + std::string(text) + "'");

  std::string normalized(text);
  if (normalized.front() == '+') normalized.erase(0, 1);
  Rational q;
  q.set_str(normalized, 10);
  if (q.get_den() == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

/// Lexicographic order on equal-length rational vectors; used for canonical output ordering.
struct LexLess {
  bool operator()(const RatVector& a, const RatVector& b) const {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

inline std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace tspec

#endif  // TSPEC_RATIONAL_HPP
