#pragma once

// Weight-four Manin symbols P(x,y)(u,v) for Gamma_1(l), P in {x^2, xy, y^2},
// presented by generators and the three-term / two-term relations.

#include "wronsk/linalg.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace wronsk {

enum class Monomial : int { X2 = 0, XY = 1, Y2 = 2 };

const char* monomial_name(Monomial m);  // "x2", "xy", "y2"
Monomial parse_monomial(std::string_view name);

struct SymbolKey {
  Monomial mono;
  int u;
  int v;
  auto operator<=>(const SymbolKey&) const = default;
};

/// a x^2 + b xy + c y^2 with integer coefficients.
struct Quadratic {
  long x2 = 0;
  long xy = 0;
  long y2 = 0;
};

bool admissible(long u, long v, int level);

/// Finitely supported rational combination of generators of one level.
class SymbolVector {
 public:
  explicit SymbolVector(int level);

  int level() const { return level_; }
  const std::map<SymbolKey, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Throws std::invalid_argument when gcd(u, v, l) > 1.
  SymbolVector& add(Monomial m, long u, long v, const Rational& c);

  /// Silently drops inadmissible (u, v); returns whether the term was kept.
  bool add_admissible(Monomial m, long u, long v, const Rational& c);

  /// scale * P(x,y)(u,v), expanded into monomials; inadmissible (u,v) dropped.
  SymbolVector& add_poly(const Quadratic& p, long u, long v, const Rational& scale = Rational(1));

  SymbolVector& operator+=(const SymbolVector& w);
  SymbolVector& operator-=(const SymbolVector& w);
  SymbolVector& operator*=(const Rational& s);
  friend SymbolVector operator+(SymbolVector a, const SymbolVector& b) { return a += b; }
  friend SymbolVector operator-(SymbolVector a, const SymbolVector& b) { return a -= b; }
  friend SymbolVector operator*(const Rational& s, SymbolVector a) { return a *= s; }
  bool operator==(const SymbolVector&) const = default;

 private:
  void require_level(const SymbolVector& w) const;

  int level_;
  std::map<SymbolKey, Rational> terms_;
};

SymbolVector symbol(Monomial m, long u, long v, int level);

/// The quotient M_4(l) of the free module on admissible generators by the
/// relations, with coordinates on the complement of the relation pivots.
class PresentedSpace {
 public:
  explicit PresentedSpace(int level);

  int level() const { return level_; }
  int generator_count() const { return 3 * static_cast<int>(pairs_.size()); }
  int dim() const { return static_cast<int>(basis_generators_.size()); }

  /// Admissible (u, v) in lexicographic order.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int pair_index(long u, long v) const;  // -1 if inadmissible

  int generator_index(Monomial m, long u, long v) const;  // -1 if inadmissible
  SymbolKey generator(int index) const;

  const SparseMatrixQ& relations() const { return relations_; }
  const std::vector<int>& basis_generators() const { return basis_generators_; }
  SymbolVector basis_symbol(int k) const;

  /// Quotient coordinates of one generator (sparse over 0..dim-1).
  const SparseRowQ& generator_coordinates(int g) const { return gen_coords_[g]; }

  VectorQ coordinates(const SymbolVector& w) const;

  /// Coefficient vector of w in the free module (length generator_count).
  VectorQ free_vector(const SymbolVector& w) const;

  /// The representative of a coordinate vector on the complement basis.
  SymbolVector lift(const VectorQ& coords) const;

 private:
  int level_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_table_;
  SparseMatrixQ relations_;
  std::vector<int> basis_generators_;
  std::vector<SparseRowQ> gen_coords_;
};

PresentedSpace build_space(int level);

/// Cusp (a, b) with a mod l and b a unit mod gcd(a, l), canonical under
/// (a, b) ~ (-a, -b).
struct CuspClass {
  int level;
  int a;
  int b;
  auto operator<=>(const CuspClass&) const = default;
};

CuspClass canonical_cusp(long a, long b, int level);
std::vector<CuspClass> cusps(int level);

Rational cusp_eval(const CuspClass& c, Monomial m, long u, long v);
Rational cusp_eval(const CuspClass& c, const SymbolVector& w);

/// Cusp evaluation as a row vector on quotient coordinates.
VectorQ cusp_functional(const PresentedSpace& space, const CuspClass& c);

SubspaceQ cuspidal_subspace(const PresentedSpace& space);

enum class Sign { Plus = 1, Minus = -1 };

SymbolVector involution_i(const SymbolVector& w);
SymbolVector symmetrize(const SymbolVector& w, Sign sign);

/// Matrix of the involution on quotient coordinates.
MatrixQ involution_matrix(const PresentedSpace& space);

struct PlusMinus {
  SubspaceQ plus;
  SubspaceQ minus;
};

PlusMinus plus_minus_subspaces(const PresentedSpace& space, const SubspaceQ& cuspidal);
PlusMinus plus_minus_subspaces(const PresentedSpace& space);

using XYCoefficients = std::map<std::pair<int, int>, Rational>;

/// Writes cuspidal classes as combinations of the xy(u, v) generators.
class XYReducer {
 public:
  explicit XYReducer(const PresentedSpace& space);

  /// Throws NotCuspidal when the class is outside the span of the xy(u, v).
  XYCoefficients reduce(const VectorQ& coords) const;
  XYCoefficients reduce(const SymbolVector& w) const;

  const SubspaceQ& span() const { return solver_.span(); }

  /// Basis of linear relations among the classes [xy(u, v)], as symbol vectors.
  std::vector<SymbolVector> relations() const;

 private:
  const PresentedSpace* space_;
  SpanSolver<Rational> solver_;
};

/// sum_{k<l} (xy(v+ku, -(k+1)u-v) - xy(-(k+1)u-v, u) - xy(u, v+ku)).
SymbolVector extra_relation(long u, long v, int level);

/// Everything derived from a level that the pipeline reuses.
class ModularSymbols {
 public:
  explicit ModularSymbols(int level);

  int level() const { return space_.level(); }
  const PresentedSpace& space() const { return space_; }
  const std::vector<CuspClass>& cusp_list() const { return cusps_; }
  const SubspaceQ& cuspidal() const { return cuspidal_; }
  const SubspaceQ& plus() const { return pm_.plus; }
  const SubspaceQ& minus() const { return pm_.minus; }
  const MatrixQ& involution() const { return involution_; }
  const XYReducer& xy() const { return xy_; }

  ModularSymbols(const ModularSymbols&) = delete;
  ModularSymbols& operator=(const ModularSymbols&) = delete;

 private:
  PresentedSpace space_;
  std::vector<CuspClass> cusps_;
  SubspaceQ cuspidal_;
  MatrixQ involution_;
  PlusMinus pm_;
  XYReducer xy_;
};

}  // namespace wronsk
