#pragma once

#include "wronsk/linalg.hpp"
#include "wronsk/qseries.hpp"

#include <vector>

namespace wronsk {

/// Fractional part {x}, in [0, 1).
struct FracValue {
  Rational value;
};

FracValue frac(const Rational& x);

/// Weight-one series s_a: constant 1/2 - {a/l}, q^n coefficient
/// sum_{d|n} ([d = a mod l] - [d = -a mod l]); s_0 = 0.
QSeries s_series(long a, int level, int precision);

/// Non-constant part of t_a: q^n coefficient sum_{d|n} (n/d)([d = a] + [d = -a]).
QSeries t_nonconst(long a, int level, int precision);

/// Non-constant part of r_a: q^n coefficient sum_{d|n} d([d = a] + [d = -a]).
QSeries r_nonconst(long a, int level, int precision);

/// #{0 < k <= d : k = u mod l}, via d/l - {(d-u)/l} + {-u/l}.
Rational residue_count(long d, long u, int level);

/// sum_{0<k<=d} (2k/d - 1)[k = u mod l], closed form in fractional parts.
Rational residue_weighted(long d, long u, int level);

class EisensteinFamily {
 public:
  EisensteinFamily(int level, int precision);

  int level() const { return level_; }
  int precision() const { return precision_; }
  const QSeries& s(long a) const { return s_[mod(a, level_)]; }
  const QSeries& t_nc(long a) const { return t_[mod(a, level_)]; }
  const QSeries& r_nc(long a) const { return r_[mod(a, level_)]; }

  /// wronskian_q(s_a, s_b), cached.
  const QSeries& wronskian(long a, long b) const;

 private:
  int level_;
  int precision_;
  std::vector<QSeries> s_, t_, r_;
  mutable std::vector<std::vector<QSeries>> w_cache_;
  mutable std::vector<std::vector<char>> w_ready_;
};

/// Span in Q^N of 1, s_a, theta(s_a), t_nc(a), r_nc(a) and s_a s_b: the
/// lower-weight forms allowed to differ in a congruence.
SubspaceQ junk_space(const EisensteinFamily& family);
SubspaceQ junk_space(int level, int precision);

}  // namespace wronsk
