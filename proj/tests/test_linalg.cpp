#include "oracles.hpp"
#include "wronsk/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace wronsk;

namespace {

MatrixQ dense(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

VectorQ vec(std::initializer_list<long> xs) {
  VectorQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

SparseMatrixQ random_sparse(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 50), val(-9, 9), den(1, 4), fill(0, 9);
  const int rows = size(rng), cols = size(rng);
  const int density = std::uniform_int_distribution<int>(1, 5)(rng);
  SparseMatrixQ m(0, cols);
  for (int r = 0; r < rows; ++r) {
    VectorQ v = VectorQ::Zero(cols);
    for (int c = 0; c < cols; ++c) {
      if (fill(rng) < density) v[c] = Rational(val(rng), den(rng));
    }
    m.append_row(SparseRowQ::from_dense(v));
  }
  return m;
}

// Prime field, to exercise the elimination templates on a non-rational scalar.
struct Zp {
  static constexpr long p = 101;
  long v = 0;
  Zp() = default;
  Zp(long x) : v(mod(x, p)) {}
  friend Zp operator+(Zp a, Zp b) { return Zp(a.v + b.v); }
  friend Zp operator-(Zp a, Zp b) { return Zp(a.v - b.v); }
  friend Zp operator-(Zp a) { return Zp(-a.v); }
  friend Zp operator*(Zp a, Zp b) { return Zp(a.v * b.v); }
  friend Zp operator/(Zp a, Zp b) {
    long inv = 1, base = b.v, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return a * Zp(inv);
  }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  bool operator==(const Zp&) const = default;
};

}  // namespace

namespace Eigen {
template <>
struct NumTraits<Zp> : GenericNumTraits<Zp> {
  using Real = Zp;
  using NonInteger = Zp;
  using Nested = Zp;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 0,
         ReadCost = 1, AddCost = 1, MulCost = 1 };
};
}  // namespace Eigen

TEST_SUITE("linalg") {

TEST_CASE("rationals are exact and serialize as num/den") {
  const Rational x = Rational(1, 3) + Rational(1, 6);
  CHECK(x == Rational(1, 2));
  CHECK(to_string(Rational(-3, 10)) == "-3/10");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("-6/20") == Rational(-3, 10));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(floor(Rational(7, 2)) == 3);
}

TEST_CASE("rref of small matrices") {
  const auto id = rref(SparseMatrixQ::from_dense(dense({{1, 0}, {0, 1}})));
  CHECK(id.rank == 2);
  CHECK(id.pivots == std::vector<int>{0, 1});

  const auto prop = rref(SparseMatrixQ::from_dense(dense({{1, 2}, {2, 4}})));
  CHECK(prop.rank == 1);
  CHECK(prop.reduced.to_dense() == dense({{1, 2}}));
}

TEST_CASE("Hilbert matrix has full rank, confirmed by cofactor determinant") {
  MatrixQ h(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) h(i, j) = Rational(1, i + j + 1);
  const Rational det = oracle::cofactor_det(h);
  CHECK(det == Rational(1, Integer("266716800000")));
  const auto r = rref(SparseMatrixQ::from_dense(h));
  CHECK(r.rank == 5);
  CHECK(r.reduced.to_dense() == MatrixQ::Identity(5, 5));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(SparseMatrixQ::from_dense(MatrixQ::Identity(3, 3))).dim() == 0);
  CHECK(kernel(SparseMatrixQ(2, 3)).dim() == 3);
  const SubspaceQ k = kernel(SparseMatrixQ::from_dense(dense({{1, 1, 0}, {0, 1, 1}})));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis_vector(0) == vec({1, -1, 1}));
}

TEST_CASE("span, membership, sum and equality") {
  const SubspaceQ a = span<Rational>({vec({1, 0}), vec({0, 1})}, 2);
  const SubspaceQ b = span<Rational>({vec({1, 1}), vec({1, -1})}, 2);
  CHECK(subspace_equal(a, b));

  const SubspaceQ line = span<Rational>({vec({1, 2})}, 2);
  const auto c = membership(line, vec({2, 4}));
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK_FALSE(membership(line, vec({1, 0})));

  const SubspaceQ x = span<Rational>({vec({1, 0, 0})}, 3);
  const SubspaceQ y = span<Rational>({vec({0, 1, 0})}, 3);
  CHECK(subspace_sum(x, y).dim() == 2);
  CHECK(subspace_intersection(x, y).dim() == 0);
  CHECK_THROWS_AS(subspace_sum(x, line), DimensionMismatch);
  CHECK_THROWS_AS(line.contains(vec({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("Subspace basis invariants and shuffle invariance") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    const SparseMatrixQ m = random_sparse(rng);
    std::vector<VectorQ> rows;
    for (const auto& r : m.row_list()) rows.push_back(r.to_dense(m.cols()));
    const SubspaceQ s = span(rows, m.cols());
    for (int i = 0; i < s.dim(); ++i) {
      CHECK(s.basis().row(i).leading_value() == 1);
      if (i > 0) CHECK(s.pivots()[i] > s.pivots()[i - 1]);
      for (int j = 0; j < s.dim(); ++j) {
        if (j != i) CHECK(s.basis().row(j).at(s.pivots()[i]) == 0);
      }
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    const SubspaceQ s2 = span(rows, m.cols());
    CHECK(subspace_equal(s, s2));
    CHECK(subspace_equal(s2, s));
    CHECK(subspace_equal(s, s));
  }
}

TEST_CASE("rref idempotence and rank-nullity on random sparse matrices") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const SparseMatrixQ m = random_sparse(rng);
    const auto r = rref(m);
    const auto rr = rref(r.reduced);
    CHECK(rr.reduced == r.reduced);
    CHECK(rr.pivots == r.pivots);
    const SubspaceQ k = kernel(m);
    CHECK(r.rank + k.dim() == m.cols());
    const MatrixQ d = m.to_dense();
    for (const auto& v : k.basis_vectors()) CHECK((d * v).isZero());
  }
}

TEST_CASE("SpanSolver recovers coefficients and relations") {
  const std::vector<VectorQ> gens{vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 2})};
  const SpanSolver<Rational> solver(gens, 3);
  CHECK(solver.span().dim() == 2);
  REQUIRE(solver.relations().size() == 1);
  const VectorQ rel = solver.relations()[0];
  CHECK((rel[0] * gens[0] + rel[1] * gens[1] + rel[2] * gens[2]).isZero());
  const VectorQ target = vec({2, 3, 5});
  const auto c = solver.solve(target);
  REQUIRE(c);
  CHECK(((*c)[0] * gens[0] + (*c)[1] * gens[1] + (*c)[2] * gens[2]) == target);
  CHECK_FALSE(solver.solve(vec({1, 0, 0})));
}

TEST_CASE("elimination is generic over the scalar type") {
  Matrix<Zp> m(3, 3);
  m << Zp(1), Zp(2), Zp(3), Zp(2), Zp(4), Zp(6), Zp(0), Zp(1), Zp(5);
  const auto r = rref(SparseMatrix<Zp>::from_dense(m));
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
  CHECK(r.reduced.at(0, 2) == Zp(3 - 2 * 5));
  const auto k = kernel(SparseMatrix<Zp>::from_dense(m));
  REQUIRE(k.dim() == 1);
  const Vector<Zp> v = k.basis_vector(0);
  for (int i = 0; i < 3; ++i) CHECK(m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2] == Zp(0));
}

}
