#include "wronsk/linalg.hpp"

namespace wronsk {

void EliminationTraits<Rational>::normalize(SparseRow<Rational>& row) {
  if (row.empty()) return;
  Integer den_lcm = 1;
  for (const auto& e : row) {
    const Integer& d = denominator(e.second);
    if (d != 1) den_lcm = boost::multiprecision::lcm(den_lcm, d);
  }
  Integer num_gcd = 0;
  for (const auto& e : row) {
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(e.second) * (den_lcm / denominator(e.second)));
    if (num_gcd == 1) break;
  }
  Rational scale(den_lcm, num_gcd);
  if (row.leading_value() < 0) scale = -scale;
  if (scale != 1) row.scale(scale);
}

}  // namespace wronsk
