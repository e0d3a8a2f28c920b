#pragma once

#include <string>

#include <gmpxx.h>

namespace coxbound {

/// Exact arbitrary-precision rational. All combinatorial geometry uses this.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace coxbound
