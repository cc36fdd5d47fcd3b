#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace wronsk {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;

/// Serializes as "num/den", always with an explicit denominator ("3/1", "0/1").
std::string to_string(const Rational& x);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& x);

/// Least nonnegative residue of a modulo m (m > 0).
inline long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long gcd(long a, long b);

}  // namespace wronsk
