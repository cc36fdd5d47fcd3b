#pragma once

// Exact sparse row reduction and subspace algebra, generic over the field
// scalar. Dense inputs and outputs are Eigen vectors and matrices.

#include "wronsk/errors.hpp"
#include "wronsk/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wronsk {

template <class Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}
inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// Sorted (column, value) list with no stored zeros.
template <class Scalar>
class SparseRow {
 public:
  using Entry = std::pair<int, Scalar>;

  SparseRow() = default;

  /// Sorts, sums duplicate columns and drops zeros.
  static SparseRow from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseRow row;
    for (auto& [col, value] : entries) {
      if (!row.entries_.empty() && row.entries_.back().first == col) {
        row.entries_.back().second += value;
      } else {
        row.entries_.emplace_back(col, std::move(value));
      }
    }
    std::erase_if(row.entries_, [](const Entry& e) { return is_zero(e.second); });
    return row;
  }

  static SparseRow from_dense(const Vector<Scalar>& v) {
    SparseRow row;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (!is_zero(v[i])) row.entries_.emplace_back(static_cast<int>(i), v[i]);
    }
    return row;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  int leading_col() const { return entries_.front().first; }
  const Scalar& leading_value() const { return entries_.front().second; }

  Scalar at(int col) const {
    auto it = lower_bound(col);
    if (it != entries_.end() && it->first == col) return it->second;
    return Scalar(0);
  }

  typename std::vector<Entry>::const_iterator lower_bound(int col) const {
    return std::lower_bound(entries_.begin(), entries_.end(), col,
                            [](const Entry& e, int c) { return e.first < c; });
  }

  Vector<Scalar> to_dense(int n) const {
    Vector<Scalar> v = Vector<Scalar>::Zero(n);
    for (const auto& [col, value] : entries_) v[col] = value;
    return v;
  }

  void scale(const Scalar& s) {
    for (auto& e : entries_) e.second *= s;
  }

  /// a*x + b*y.
  friend SparseRow combine(const Scalar& a, const SparseRow& x, const Scalar& b,
                           const SparseRow& y) {
    SparseRow out;
    out.entries_.reserve(x.size() + y.size());
    auto i = x.entries_.begin();
    auto j = y.entries_.begin();
    while (i != x.entries_.end() || j != y.entries_.end()) {
      if (j == y.entries_.end() || (i != x.entries_.end() && i->first < j->first)) {
        out.entries_.emplace_back(i->first, a * i->second);
        ++i;
      } else if (i == x.entries_.end() || j->first < i->first) {
        out.entries_.emplace_back(j->first, b * j->second);
        ++j;
      } else {
        Scalar s = a * i->second + b * j->second;
        if (!is_zero(s)) out.entries_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  bool operator==(const SparseRow& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry> entries_;
};

template <class Scalar>
class SparseMatrix {
 public:
  using Row = SparseRow<Scalar>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix from_rows(int cols, std::vector<Row> rows) {
    SparseMatrix m(0, cols);
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
  }

  static SparseMatrix from_dense(const Matrix<Scalar>& d) {
    SparseMatrix m(0, static_cast<int>(d.cols()));
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
      m.append_row(Row::from_dense(d.row(i).transpose()));
    }
    return m;
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const Row& row(int i) const { return rows_.at(i); }
  const std::vector<Row>& row_list() const { return rows_; }

  void append_row(Row r) {
    if (!r.empty() && (r.leading_col() < 0 || r.entries().back().first >= cols_)) {
      throw DimensionMismatch("sparse row column out of range");
    }
    rows_.push_back(std::move(r));
  }

  void set(int r, int c, const Scalar& value) {
    check_index(r, c);
    auto entries = rows_[r].entries();
    std::erase_if(entries, [c](const auto& e) { return e.first == c; });
    entries.emplace_back(c, value);
    rows_[r] = Row::from_entries(std::move(entries));
  }

  Scalar at(int r, int c) const {
    check_index(r, c);
    return rows_[r].at(c);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  Matrix<Scalar> to_dense() const {
    Matrix<Scalar> d = Matrix<Scalar>::Zero(rows(), cols_);
    for (int i = 0; i < rows(); ++i) {
      for (const auto& [col, value] : rows_[i]) d(i, col) = value;
    }
    return d;
  }

  bool operator==(const SparseMatrix& other) const {
    return cols_ == other.cols_ && rows_ == other.rows_;
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows() || c < 0 || c >= cols_) {
      throw DimensionMismatch("matrix index out of range");
    }
  }

  int cols_ = 0;
  std::vector<Row> rows_;
};

/// Row normalization applied after every elimination step. For exact
/// rationals this clears denominators and removes the integer content, so
/// intermediate rows stay primitive integer vectors.
template <class Scalar>
struct EliminationTraits {
  static void normalize(SparseRow<Scalar>&) {}
};

template <>
struct EliminationTraits<Rational> {
  static void normalize(SparseRow<Rational>& row);
};

template <class Scalar>
struct RrefResult {
  SparseMatrix<Scalar> reduced;
  std::vector<int> pivots;
  int rank = 0;
};

/// Incremental fraction-free row echelon builder. Rows are inserted one at a
/// time; finish() back-substitutes and scales pivots to one.
template <class Scalar>
class RowReducer {
 public:
  using Row = SparseRow<Scalar>;

  explicit RowReducer(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces `row` against the current echelon rows; returns the remainder
  /// (empty iff the row was already in the span).
  Row reduce(Row row) const {
    EliminationTraits<Scalar>::normalize(row);
    auto it = row.begin();
    while (true) {
      it = std::find_if(it, row.end(), [&](const auto& e) { return pivot_row_[e.first] >= 0; });
      if (it == row.end()) break;
      const int col = it->first;
      const Row& p = rows_[pivot_row_[col]];
      const Scalar factor = it->second;
      row = combine(p.leading_value(), row, -factor, p);
      EliminationTraits<Scalar>::normalize(row);
      it = row.lower_bound(col);
    }
    return row;
  }

  /// Returns true when the rank grew.
  bool insert(Row row) {
    if (!row.empty() && row.entries().back().first >= cols_) {
      throw DimensionMismatch("row wider than reducer");
    }
    Row rest = reduce(std::move(row));
    if (rest.empty()) return false;
    pivot_row_[rest.leading_col()] = rank();
    rows_.push_back(std::move(rest));
    return true;
  }

  RrefResult<Scalar> finish() const {
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return rows_[a].leading_col() < rows_[b].leading_col();
    });
    std::vector<Row> sorted;
    std::vector<int> pivots;
    std::vector<int> row_of_col(cols_, -1);
    for (int idx : order) {
      row_of_col[rows_[idx].leading_col()] = static_cast<int>(sorted.size());
      pivots.push_back(rows_[idx].leading_col());
      sorted.push_back(rows_[idx]);
    }
    for (int i = static_cast<int>(sorted.size()) - 1; i >= 0; --i) {
      std::vector<int> targets;
      for (const auto& [col, value] : sorted[i]) {
        if (col != pivots[i] && row_of_col[col] >= 0) targets.push_back(col);
      }
      for (int col : targets) {
        const Row& p = sorted[row_of_col[col]];
        const Scalar factor = sorted[i].at(col);
        sorted[i] = combine(p.leading_value(), sorted[i], -factor, p);
        EliminationTraits<Scalar>::normalize(sorted[i]);
      }
    }
    for (auto& r : sorted) {
      const Scalar inv = Scalar(1) / r.leading_value();
      r.scale(inv);
    }
    RrefResult<Scalar> out;
    out.rank = static_cast<int>(sorted.size());
    out.pivots = std::move(pivots);
    out.reduced = SparseMatrix<Scalar>::from_rows(cols_, std::move(sorted));
    return out;
  }

 private:
  int cols_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;
};

template <class Scalar>
RrefResult<Scalar> rref(const SparseMatrix<Scalar>& m) {
  RowReducer<Scalar> reducer(m.cols());
  for (const auto& r : m.row_list()) reducer.insert(r);
  return reducer.finish();
}

/// A subspace of Scalar^n held as its unique reduced row-echelon basis.
template <class Scalar>
class Subspace {
 public:
  using Vec = Vector<Scalar>;

  explicit Subspace(int ambient_dim = 0) : basis_(0, ambient_dim) {}

  explicit Subspace(RrefResult<Scalar> r)
      : basis_(std::move(r.reduced)), pivots_(std::move(r.pivots)) {}

  static Subspace full(int n) {
    RowReducer<Scalar> red(n);
    for (int i = 0; i < n; ++i) {
      red.insert(SparseRow<Scalar>::from_entries({{i, Scalar(1)}}));
    }
    return Subspace(red.finish());
  }

  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const SparseMatrix<Scalar>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec basis_vector(int i) const { return basis_.row(i).to_dense(ambient_dim()); }

  std::vector<Vec> basis_vectors() const {
    std::vector<Vec> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// v minus its expansion over the pivot coordinates; zero iff v is a member.
  Vec residual(const Vec& v) const {
    check(v);
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (const auto& [col, value] : basis_.row(i)) r[col] -= c * value;
    }
    return r;
  }

  /// Coefficients over the RREF basis, or nullopt when v is not a member.
  std::optional<Vec> coordinates(const Vec& v) const {
    const Vec r = residual(v);
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      if (!is_zero(r[i])) return std::nullopt;
    }
    Vec c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool contains(const Vec& v) const { return coordinates(v).has_value(); }

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  void check(const Vec& v) const {
    if (v.size() != ambient_dim()) {
      throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                              " against subspace of ambient dimension " +
                              std::to_string(ambient_dim()));
    }
  }

  SparseMatrix<Scalar> basis_;
  std::vector<int> pivots_;
};

template <class Scalar>
Subspace<Scalar> span_rows(const SparseMatrix<Scalar>& rows) {
  return Subspace<Scalar>(rref(rows));
}

template <class Scalar>
Subspace<Scalar> span(const std::vector<Vector<Scalar>>& vectors, int ambient_dim) {
  RowReducer<Scalar> red(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length mismatch");
    red.insert(SparseRow<Scalar>::from_dense(v));
  }
  return Subspace<Scalar>(red.finish());
}

template <class Scalar>
std::optional<Vector<Scalar>> membership(const Subspace<Scalar>& s, const Vector<Scalar>& v) {
  return s.coordinates(v);
}

template <class Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum");
  RowReducer<Scalar> red(a.ambient_dim());
  for (const auto& r : a.basis().row_list()) red.insert(r);
  for (const auto& r : b.basis().row_list()) red.insert(r);
  return Subspace<Scalar>(red.finish());
}

template <class Scalar>
bool subspace_equal(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_equal");
  return a == b;
}

template <class Scalar>
bool is_subspace_of(const Subspace<Scalar>& inner, const Subspace<Scalar>& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) throw DimensionMismatch("is_subspace_of");
  for (int i = 0; i < inner.dim(); ++i) {
    if (!outer.contains(inner.basis_vector(i))) return false;
  }
  return true;
}

/// Null space {v : m v = 0}.
template <class Scalar>
Subspace<Scalar> kernel(const SparseMatrix<Scalar>& m) {
  const RrefResult<Scalar> r = rref(m);
  const int n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (int p : r.pivots) is_pivot[p] = 1;
  RowReducer<Scalar> red(n);
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename SparseRow<Scalar>::Entry> entries{{f, Scalar(1)}};
    for (int i = 0; i < r.rank; ++i) {
      Scalar c = r.reduced.row(i).at(f);
      if (!is_zero(c)) entries.emplace_back(r.pivots[i], -c);
    }
    red.insert(SparseRow<Scalar>::from_entries(std::move(entries)));
  }
  return Subspace<Scalar>(red.finish());
}

template <class Scalar>
Subspace<Scalar> subspace_intersection(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_intersection");
  const int n = a.ambient_dim();
  const int ka = a.dim();
  const int kb = b.dim();
  // Columns are the basis vectors of a followed by the negated basis of b.
  std::vector<std::vector<typename SparseRow<Scalar>::Entry>> cols_by_row(n);
  for (int i = 0; i < ka; ++i) {
    for (const auto& [c, v] : a.basis().row(i)) cols_by_row[c].emplace_back(i, v);
  }
  for (int j = 0; j < kb; ++j) {
    for (const auto& [c, v] : b.basis().row(j)) cols_by_row[c].emplace_back(ka + j, -v);
  }
  SparseMatrix<Scalar> m(0, ka + kb);
  for (auto& entries : cols_by_row) m.append_row(SparseRow<Scalar>::from_entries(std::move(entries)));
  const Subspace<Scalar> rel = kernel(m);
  RowReducer<Scalar> red(n);
  for (int r = 0; r < rel.dim(); ++r) {
    SparseRow<Scalar> acc;
    for (const auto& [i, coeff] : rel.basis().row(r)) {
      if (i >= ka) break;
      acc = combine(Scalar(1), acc, coeff, a.basis().row(i));
    }
    red.insert(std::move(acc));
  }
  return Subspace<Scalar>(red.finish());
}

/// Expresses vectors as combinations of a fixed generator list. Also exposes
/// a basis of the linear relations among the generators.
template <class Scalar>
class SpanSolver {
 public:
  using Vec = Vector<Scalar>;

  SpanSolver(const std::vector<Vec>& generators, int ambient_dim)
      : ambient_(ambient_dim), count_(static_cast<int>(generators.size())) {
    RowReducer<Scalar> red(ambient_ + count_);
    for (int k = 0; k < count_; ++k) {
      if (generators[k].size() != ambient_) throw DimensionMismatch("SpanSolver generator");
      auto entries = SparseRow<Scalar>::from_dense(generators[k]).entries();
      entries.emplace_back(ambient_ + k, Scalar(1));
      red.insert(SparseRow<Scalar>::from_entries(std::move(entries)));
    }
    const RrefResult<Scalar> r = red.finish();
    SparseMatrix<Scalar> head(0, ambient_);
    for (int i = 0; i < r.rank; ++i) {
      std::vector<typename SparseRow<Scalar>::Entry> left, right;
      for (const auto& [c, v] : r.reduced.row(i)) {
        if (c < ambient_) {
          left.emplace_back(c, v);
        } else {
          right.emplace_back(c - ambient_, v);
        }
      }
      if (r.pivots[i] < ambient_) {
        head.append_row(SparseRow<Scalar>::from_entries(std::move(left)));
        transform_.push_back(SparseRow<Scalar>::from_entries(std::move(right)));
        head_pivots_.push_back(r.pivots[i]);
      } else {
        relations_.push_back(SparseRow<Scalar>::from_entries(std::move(right)).to_dense(count_));
      }
    }
    RrefResult<Scalar> hr;
    hr.rank = head.rows();
    hr.pivots = head_pivots_;
    hr.reduced = std::move(head);
    span_ = Subspace<Scalar>(std::move(hr));
  }

  int generator_count() const { return count_; }
  const Subspace<Scalar>& span() const { return span_; }
  const std::vector<Vec>& relations() const { return relations_; }

  /// Coefficients c with sum_k c_k g_k = v, or nullopt outside the span.
  std::optional<Vec> solve(const Vec& v) const {
    const auto beta = span_.coordinates(v);
    if (!beta) return std::nullopt;
    Vec c = Vec::Zero(count_);
    for (int i = 0; i < span_.dim(); ++i) {
      if (is_zero((*beta)[i])) continue;
      for (const auto& [k, m] : transform_[i]) c[k] += (*beta)[i] * m;
    }
    return c;
  }

 private:
  int ambient_;
  int count_;
  Subspace<Scalar> span_;
  std::vector<int> head_pivots_;
  std::vector<SparseRow<Scalar>> transform_;
  std::vector<Vec> relations_;
};

using SparseRowQ = SparseRow<Rational>;
using SparseMatrixQ = SparseMatrix<Rational>;
using SubspaceQ = Subspace<Rational>;

}  // namespace wronsk
