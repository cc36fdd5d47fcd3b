#pragma once

#include "wronsk/errors.hpp"
#include "wronsk/rational.hpp"

#include <string>

namespace wronsk {

/// Truncated q-expansion sum_{n<N} c_n q^n with coefficients in Scalar.
template <class Scalar>
class BasicQSeries {
 public:
  using Vec = Vector<Scalar>;

  BasicQSeries() = default;
  explicit BasicQSeries(int precision) : coeffs_(Vec::Zero(precision)) {}
  explicit BasicQSeries(Vec coeffs) : coeffs_(std::move(coeffs)) {}

  static BasicQSeries constant(const Scalar& c, int precision) {
    BasicQSeries f(precision);
    if (precision > 0) f.coeffs_[0] = c;
    return f;
  }

  int precision() const { return static_cast<int>(coeffs_.size()); }
  const Scalar& operator[](int n) const { return coeffs_[n]; }
  Scalar& operator[](int n) { return coeffs_[n]; }
  const Vec& coeffs() const { return coeffs_; }

  BasicQSeries truncated(int precision) const {
    return BasicQSeries(Vec(coeffs_.head(std::min(precision, this->precision()))));
  }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
      if (!(coeffs_[i] == Scalar(0))) return false;
    }
    return true;
  }

  BasicQSeries& operator+=(const BasicQSeries& g) {
    require_same(g, "+");
    coeffs_ += g.coeffs_;
    return *this;
  }
  BasicQSeries& operator-=(const BasicQSeries& g) {
    require_same(g, "-");
    coeffs_ -= g.coeffs_;
    return *this;
  }
  BasicQSeries& operator*=(const Scalar& s) {
    coeffs_ *= s;
    return *this;
  }

  friend BasicQSeries operator+(BasicQSeries f, const BasicQSeries& g) { return f += g; }
  friend BasicQSeries operator-(BasicQSeries f, const BasicQSeries& g) { return f -= g; }
  friend BasicQSeries operator-(BasicQSeries f) {
    f.coeffs_ = -f.coeffs_;
    return f;
  }
  friend BasicQSeries operator*(const Scalar& s, BasicQSeries f) { return f *= s; }

  bool operator==(const BasicQSeries& g) const {
    return precision() == g.precision() && coeffs_ == g.coeffs_;
  }

  void require_same(const BasicQSeries& g, const char* op) const {
    if (precision() != g.precision()) {
      throw PrecisionMismatch(std::string("q-series ") + op + ": precision " +
                              std::to_string(precision()) + " vs " +
                              std::to_string(g.precision()));
    }
  }

 private:
  Vec coeffs_;
};

/// q d/dq, termwise n c_n.
template <class Scalar>
BasicQSeries<Scalar> theta(const BasicQSeries<Scalar>& f) {
  BasicQSeries<Scalar> out(f.precision());
  for (int n = 1; n < f.precision(); ++n) out[n] = Scalar(n) * f[n];
  return out;
}

/// Cauchy product truncated at the common precision.
template <class Scalar>
BasicQSeries<Scalar> mul(const BasicQSeries<Scalar>& f, const BasicQSeries<Scalar>& g) {
  f.require_same(g, "*");
  const int N = f.precision();
  BasicQSeries<Scalar> out(N);
  for (int i = 0; i < N; ++i) {
    if (f[i] == Scalar(0)) continue;
    for (int j = 0; i + j < N; ++j) {
      if (g[j] == Scalar(0)) continue;
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

template <class Scalar>
BasicQSeries<Scalar> operator*(const BasicQSeries<Scalar>& f, const BasicQSeries<Scalar>& g) {
  return mul(f, g);
}

/// theta(f) g - f theta(g): the tau-Wronskian divided by 2 pi i.
template <class Scalar>
BasicQSeries<Scalar> wronskian_q(const BasicQSeries<Scalar>& f, const BasicQSeries<Scalar>& g) {
  f.require_same(g, "wronskian");
  const int N = f.precision();
  BasicQSeries<Scalar> out(N);
  // Coefficient of q^n is sum_{i+j=n} (i - j) f_i g_j.
  for (int i = 0; i < N; ++i) {
    if (f[i] == Scalar(0)) continue;
    for (int j = 0; i + j < N; ++j) {
      if (i == j || g[j] == Scalar(0)) continue;
      out[i + j] += Scalar(i - j) * f[i] * g[j];
    }
  }
  return out;
}

/// f(q^k), truncated at f's precision.
template <class Scalar>
BasicQSeries<Scalar> substitute_power(const BasicQSeries<Scalar>& f, int k) {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
  BasicQSeries<Scalar> out(f.precision());
  for (int n = 0; n * k < f.precision(); ++n) out[n * k] = f[n];
  return out;
}

using QSeries = BasicQSeries<Rational>;

/// Default coefficient count for level l: ceil(l^2 prod_{p|l}(1 - 1/p^2) / 3) + 10.
int default_precision(int level);

}  // namespace wronsk
