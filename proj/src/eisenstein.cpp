#include "wronsk/eisenstein.hpp"

#include <stdexcept>

namespace wronsk {

namespace {

void require_level(int level) {
  if (level < 2) throw LevelTooSmall("level must be at least 2, got " + std::to_string(level));
}

// Adds weight(n, d) * ([d = a] + sign [d = -a]) to coefficient n for all d | n < N.
template <class Weight>
QSeries divisor_series(long a, int level, int precision, int sign, Weight weight) {
  require_level(level);
  QSeries f(precision);
  const long plus = mod(a, level);
  const long minus = mod(-a, level);
  for (long d = 1; d < precision; ++d) {
    const long r = d % level;
    const int c = (r == plus ? 1 : 0) + sign * (r == minus ? 1 : 0);
    if (c == 0) continue;
    for (long n = d; n < precision; n += d) f[static_cast<int>(n)] += Rational(c * weight(n, d));
  }
  return f;
}

}  // namespace

int default_precision(int level) {
  require_level(level);
  // Jordan totient J_2(l) = l^2 prod_{p|l} (1 - 1/p^2) is an integer.
  long j2 = static_cast<long>(level) * level;
  long rest = level;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    j2 = j2 / (p * p) * (p * p - 1);
  }
  if (rest > 1) j2 = j2 / (rest * rest) * (rest * rest - 1);
  return static_cast<int>((j2 + 2) / 3) + 10;
}

FracValue frac(const Rational& x) { return {x - Rational(floor(x))}; }

QSeries s_series(long a, int level, int precision) {
  QSeries f = divisor_series(a, level, precision, -1, [](long, long) { return 1L; });
  if (mod(a, level) != 0 && precision > 0) {
    f[0] = Rational(1, 2) - frac(Rational(a, level)).value;
  }
  return f;
}

QSeries t_nonconst(long a, int level, int precision) {
  return divisor_series(a, level, precision, 1, [](long n, long d) { return n / d; });
}

QSeries r_nonconst(long a, int level, int precision) {
  return divisor_series(a, level, precision, 1, [](long, long d) { return d; });
}

Rational residue_count(long d, long u, int level) {
  require_level(level);
  if (d < 1) throw std::invalid_argument("residue_count: d must be positive");
  return Rational(d, level) - frac(Rational(d - u, level)).value + frac(Rational(-u, level)).value;
}

Rational residue_weighted(long d, long u, int level) {
  require_level(level);
  if (d < 1) throw std::invalid_argument("residue_weighted: d must be positive");
  const Rational a = frac(Rational(d - u, level)).value;
  const Rational b = frac(Rational(-u, level)).value;
  return Rational(level, d) * (a * a - a - b * b + b) + (Rational(1) - a - b);
}

EisensteinFamily::EisensteinFamily(int level, int precision)
    : level_(level), precision_(precision) {
  require_level(level);
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  for (long a = 0; a < level; ++a) {
    s_.push_back(s_series(a, level, precision));
    t_.push_back(t_nonconst(a, level, precision));
    r_.push_back(r_nonconst(a, level, precision));
  }
  w_cache_.assign(level, std::vector<QSeries>(level));
  w_ready_.assign(level, std::vector<char>(level, 0));
}

const QSeries& EisensteinFamily::wronskian(long a, long b) const {
  const long i = mod(a, level_);
  const long j = mod(b, level_);
  if (!w_ready_[i][j]) {
    w_cache_[i][j] = wronskian_q(s_[i], s_[j]);
    w_ready_[i][j] = 1;
  }
  return w_cache_[i][j];
}

SubspaceQ junk_space(const EisensteinFamily& fam) {
  const int N = fam.precision();
  const int l = fam.level();
  RowReducer<Rational> red(N);
  const auto add = [&](const QSeries& f) { red.insert(SparseRowQ::from_dense(f.coeffs())); };
  add(QSeries::constant(Rational(1), N));
  for (long a = 0; a < l; ++a) {
    add(fam.s(a));
    add(theta(fam.s(a)));
    add(fam.t_nc(a));
    add(fam.r_nc(a));
    for (long b = a; b < l; ++b) add(mul(fam.s(a), fam.s(b)));
  }
  return SubspaceQ(red.finish());
}

SubspaceQ junk_space(int level, int precision) {
  return junk_space(EisensteinFamily(level, precision));
}

}  // namespace wronsk
