#pragma once

#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sturmian {

using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& v) { return v.sign(); }

// Floor division, denominator must be positive.
inline Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// Floor of sqrt(n) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

// Splits n = root^2 * squarefree and returns {root, squarefree}. Trial
// division runs up to 10^6; a larger leftover square factor is only caught
// when the whole leftover is a perfect square, which covers every radicand a
// desk-scale run can produce.
inline std::pair<Int, Int> split_square_factor(Int n) {
  if (n < 0) throw std::invalid_argument("split_square_factor: negative argument");
  Int root = 1;
  if (n == 0) return {root, n};
  for (Int p = 2; p <= 1000000 && p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      root *= p;
    }
  }
  const Int r = isqrt(n);
  if (r * r == n) {
    root *= r;
    n = 1;
  }
  return {root, n};
}

}  // namespace sturmian
