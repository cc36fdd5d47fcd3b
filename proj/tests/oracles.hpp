#pragma once

// Brute-force reference implementations used as test oracles.

#include "wronsk/heilbronn.hpp"
#include "wronsk/rational.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using wronsk::MatrixQ;
using wronsk::Rational;

inline Rational cofactor_det(const MatrixQ& m) {
  const auto n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    MatrixQ minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

inline Rational count_residues(long d, long u, int l) {
  long c = 0;
  for (long k = 1; k <= d; ++k) {
    if (wronsk::mod(k - u, l) == 0) ++c;
  }
  return c;
}

inline Rational weighted_residues(long d, long u, int l) {
  Rational s = 0;
  for (long k = 1; k <= d; ++k) {
    if (wronsk::mod(k - u, l) == 0) s += Rational(2 * k, d) - 1;
  }
  return s;
}

// Rectangular search a, b, c, d in [0, 2n].
inline std::vector<wronsk::HeilbronnTuple> heilbronn(long n) {
  std::vector<wronsk::HeilbronnTuple> out;
  for (long a = 0; a <= 2 * n; ++a)
    for (long b = 0; b < a; ++b)
      for (long d = 0; d <= 2 * n; ++d)
        for (long c = 0; c < d; ++c)
          if (a * d - b * c == n) out.push_back({a, b, c, d});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<wronsk::EuclidTuple> euclid(long n) {
  std::vector<wronsk::EuclidTuple> out;
  for (long m1 = 1; m1 <= n; ++m1)
    for (long k1 = 1; k1 <= n; ++k1)
      for (long m2 = 1; m2 <= n; ++m2)
        for (long k2 = 1; k2 <= n; ++k2)
          if (m1 * k1 + m2 * k2 == n) out.push_back({m1, k1, m2, k2});
  return out;
}

// Coefficients of sum_{d | n} f(d) by trial division.
template <class F>
Rational divisor_sum(long n, F f) {
  Rational s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) s += f(d);
  }
  return s;
}

}  // namespace oracle
