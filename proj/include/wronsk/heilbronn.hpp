#pragma once

#include "wronsk/modsym.hpp"

#include <optional>
#include <vector>

namespace wronsk {

/// (a, b, c, d) with ad - bc = n, a > b >= 0, d > c >= 0.
struct HeilbronnTuple {
  long a, b, c, d;
  auto operator<=>(const HeilbronnTuple&) const = default;
};

/// (m1, k1, m2, k2), all positive, with m1 k1 + m2 k2 = n.
struct EuclidTuple {
  long m1, k1, m2, k2;
  auto operator<=>(const EuclidTuple&) const = default;
};

/// Lexicographic in (a, b, c, d).
std::vector<HeilbronnTuple> enumerate_H(long n);

/// Lexicographic in (m1, k1, m2, k2).
std::vector<EuclidTuple> enumerate_I(long n);

/// One Euclid step; nullopt when m1 == m2 (end of a run).
std::optional<EuclidTuple> up(const EuclidTuple& t);

struct EuclidRun {
  std::vector<EuclidTuple> tuples;  // successive up-images, first to last
};

/// Partition of I(n) into maximal up-orbits, ordered by their first tuple.
/// Throws std::logic_error if the orbits fail to partition I(n).
std::vector<EuclidRun> run_decomposition(long n);

/// Minus part of T_n xy(0,1): sum over H(n) of
/// [ac x^2 + (ad+bc) xy + bd y^2](c, d), inadmissible (c, d) dropped.
SymbolVector hecke_on_e0(long n, int level);

/// Quotient coordinates of hecke_on_e0(n, l) for n = 1..n_max (index n-1).
std::vector<VectorQ> hecke_e0_coordinates(const PresentedSpace& space, long n_max);

/// P(x,y)(u, v) -> P(x,y)(ju, jv). Throws NotAUnit unless gcd(j, l) = 1.
SymbolVector diamond(long j, const SymbolVector& w);

/// Diamond action on quotient coordinates.
MatrixQ diamond_matrix(const PresentedSpace& space, long j);

}  // namespace wronsk
