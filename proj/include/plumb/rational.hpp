#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace plumb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown on malformed textual input (graphs, rationals, CLI vectors).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a request is structurally impossible (empty region,
/// cohomological cycle of a rational graph, h1 = 0 bundle, ...).
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an enumeration would exceed the configured point budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& v) { return v.str(); }

/// Canonical "p/q" rendering: q > 0, gcd(p,q) = 1, integers as plain "p".
inline std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Parses "p" or "p/q" with q > 0 after normalization.
inline Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw parse_error("malformed rational: " + s);
  }
}

inline Int floor_rat(const Rat& v) {
  Int q = numerator(v) / denominator(v);
  if (v < 0 && q * denominator(v) != numerator(v)) --q;
  return q;
}

inline Int ceil_rat(const Rat& v) { return -floor_rat(-v); }

inline Rat frac_rat(const Rat& v) { return v - Rat(floor_rat(v)); }

/// Smallest non-negative integer s with s*s >= v.  Requires v >= 0.
inline Int ceil_sqrt(const Rat& v) {
  if (v <= 0) return 0;
  Int c = ceil_rat(v);
  Int s = sqrt(c);
  while (Rat(s * s) < v) ++s;
  return s;
}

}  // namespace plumb
