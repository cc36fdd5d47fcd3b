#include "wronsk/modsym.hpp"

#include <stdexcept>
#include <string>

namespace wronsk {

const char* monomial_name(Monomial m) {
  switch (m) {
    case Monomial::X2: return "x2";
    case Monomial::XY: return "xy";
    case Monomial::Y2: return "y2";
  }
  return "?";
}

Monomial parse_monomial(std::string_view name) {
  if (name == "x2") return Monomial::X2;
  if (name == "xy") return Monomial::XY;
  if (name == "y2") return Monomial::Y2;
  throw std::invalid_argument("unknown monomial '" + std::string(name) + "'");
}

bool admissible(long u, long v, int level) {
  return gcd(gcd(mod(u, level), mod(v, level)), level) == 1;
}

// ---------------------------------------------------------------------------

SymbolVector::SymbolVector(int level) : level_(level) {
  if (level < 2) throw LevelTooSmall("symbol level must be at least 2");
}

SymbolVector& SymbolVector::add(Monomial m, long u, long v, const Rational& c) {
  if (!add_admissible(m, u, v, c)) {
    throw std::invalid_argument("generator (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has gcd with level " + std::to_string(level_) + " above 1");
  }
  return *this;
}

bool SymbolVector::add_admissible(Monomial m, long u, long v, const Rational& c) {
  if (!admissible(u, v, level_)) return false;
  if (c.is_zero()) return true;
  const SymbolKey key{m, static_cast<int>(mod(u, level_)), static_cast<int>(mod(v, level_))};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return true;
}

SymbolVector& SymbolVector::add_poly(const Quadratic& p, long u, long v, const Rational& scale) {
  if (p.x2 != 0) add_admissible(Monomial::X2, u, v, scale * p.x2);
  if (p.xy != 0) add_admissible(Monomial::XY, u, v, scale * p.xy);
  if (p.y2 != 0) add_admissible(Monomial::Y2, u, v, scale * p.y2);
  return *this;
}

void SymbolVector::require_level(const SymbolVector& w) const {
  if (w.level_ != level_) {
    throw LevelMismatch("symbol levels " + std::to_string(level_) + " and " +
                        std::to_string(w.level_));
  }
}

SymbolVector& SymbolVector::operator+=(const SymbolVector& w) {
  require_level(w);
  for (const auto& [k, c] : w.terms_) add(k.mono, k.u, k.v, c);
  return *this;
}

SymbolVector& SymbolVector::operator-=(const SymbolVector& w) {
  require_level(w);
  for (const auto& [k, c] : w.terms_) add(k.mono, k.u, k.v, -c);
  return *this;
}

SymbolVector& SymbolVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [k, c] : terms_) c *= s;
  }
  return *this;
}

SymbolVector symbol(Monomial m, long u, long v, int level) {
  SymbolVector w(level);
  w.add(m, u, v, Rational(1));
  return w;
}

// ---------------------------------------------------------------------------

PresentedSpace::PresentedSpace(int level) : level_(level) {
  if (level < 2) throw LevelTooSmall("level must be at least 2, got " + std::to_string(level));
  pair_table_.assign(level * level, -1);
  for (int u = 0; u < level; ++u) {
    for (int v = 0; v < level; ++v) {
      if (!admissible(u, v, level)) continue;
      pair_table_[u * level + v] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(u, v);
    }
  }

  using Entry = SparseRowQ::Entry;
  relations_ = SparseMatrixQ(0, generator_count());
  const auto g = [&](Monomial m, long u, long v) { return generator_index(m, u, v); };
  const auto row = [](std::initializer_list<std::pair<int, int>> terms) {
    std::vector<Entry> e;
    for (auto [col, c] : terms) e.emplace_back(col, Rational(c));
    return SparseRowQ::from_entries(std::move(e));
  };
  for (auto [u, v] : pairs_) {
    using enum Monomial;
    relations_.append_row(row({{g(X2, u, v), 1}, {g(Y2, v, -u), 1}}));
    relations_.append_row(row({{g(XY, u, v), 1}, {g(XY, v, -u), -1}}));
    relations_.append_row(row({{g(Y2, u, v), 1}, {g(X2, v, -u), 1}}));
    relations_.append_row(row({{g(XY, v, -u - v), 1},
                               {g(XY, -u - v, u), -1},
                               {g(Y2, -u - v, u), 1},
                               {g(X2, u, v), 1},
                               {g(XY, u, v), -1}}));
  }

  const RrefResult<Rational> r = rref(relations_);
  std::vector<int> row_of_pivot(generator_count(), -1);
  for (int i = 0; i < r.rank; ++i) row_of_pivot[r.pivots[i]] = i;
  std::vector<int> position(generator_count(), -1);
  for (int c = 0; c < generator_count(); ++c) {
    if (row_of_pivot[c] >= 0) continue;
    position[c] = static_cast<int>(basis_generators_.size());
    basis_generators_.push_back(c);
  }
  gen_coords_.resize(generator_count());
  for (int c = 0; c < generator_count(); ++c) {
    if (row_of_pivot[c] < 0) {
      gen_coords_[c] = SparseRowQ::from_entries({{position[c], Rational(1)}});
      continue;
    }
    std::vector<Entry> e;
    for (const auto& [k, value] : r.reduced.row(row_of_pivot[c])) {
      if (k != c) e.emplace_back(position[k], -value);
    }
    gen_coords_[c] = SparseRowQ::from_entries(std::move(e));
  }
}

int PresentedSpace::pair_index(long u, long v) const {
  return pair_table_[mod(u, level_) * level_ + mod(v, level_)];
}

int PresentedSpace::generator_index(Monomial m, long u, long v) const {
  const int p = pair_index(u, v);
  if (p < 0) return -1;
  return static_cast<int>(m) * static_cast<int>(pairs_.size()) + p;
}

SymbolKey PresentedSpace::generator(int index) const {
  const int n = static_cast<int>(pairs_.size());
  const auto [u, v] = pairs_.at(index % n);
  return {static_cast<Monomial>(index / n), u, v};
}

SymbolVector PresentedSpace::basis_symbol(int k) const {
  const SymbolKey key = generator(basis_generators_.at(k));
  return symbol(key.mono, key.u, key.v, level_);
}

VectorQ PresentedSpace::coordinates(const SymbolVector& w) const {
  if (w.level() != level_) throw LevelMismatch("symbol level does not match space level");
  VectorQ x = VectorQ::Zero(dim());
  for (const auto& [key, c] : w.terms()) {
    for (const auto& [k, value] : gen_coords_[generator_index(key.mono, key.u, key.v)]) {
      x[k] += c * value;
    }
  }
  return x;
}

VectorQ PresentedSpace::free_vector(const SymbolVector& w) const {
  if (w.level() != level_) throw LevelMismatch("symbol level does not match space level");
  VectorQ x = VectorQ::Zero(generator_count());
  for (const auto& [key, c] : w.terms()) x[generator_index(key.mono, key.u, key.v)] = c;
  return x;
}

SymbolVector PresentedSpace::lift(const VectorQ& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("lift: coordinate length");
  SymbolVector w(level_);
  for (int k = 0; k < dim(); ++k) {
    if (coords[k].is_zero()) continue;
    const SymbolKey key = generator(basis_generators_[k]);
    w.add(key.mono, key.u, key.v, coords[k]);
  }
  return w;
}

PresentedSpace build_space(int level) { return PresentedSpace(level); }

// ---------------------------------------------------------------------------

CuspClass canonical_cusp(long a, long b, int level) {
  if (level < 2) throw LevelTooSmall("cusp level must be at least 2");
  const long am = mod(a, level);
  const long g = gcd(am, level);
  if (gcd(mod(b, g), g) != 1) throw std::invalid_argument("cusp b must be a unit mod gcd(a,l)");
  const std::pair<long, long> p{am, mod(b, g)};
  const std::pair<long, long> q{mod(-a, level), mod(-b, g)};
  const auto& c = std::min(p, q);
  return {level, static_cast<int>(c.first), static_cast<int>(c.second)};
}

std::vector<CuspClass> cusps(int level) {
  std::vector<CuspClass> out;
  for (long a = 0; a < level; ++a) {
    const long g = gcd(a, level);
    for (long b = 0; b < g; ++b) {
      if (gcd(b, g) != 1) continue;
      const CuspClass c = canonical_cusp(a, b, level);
      if (c.a == a && c.b == b) out.push_back(c);
    }
  }
  return out;
}

Rational cusp_eval(const CuspClass& c, Monomial m, long u, long v) {
  const int l = c.level;
  const long g = gcd(c.a, l);
  const auto eq = [](long x, long y, long modulus) { return mod(x - y, modulus) == 0 ? 1 : 0; };
  switch (m) {
    case Monomial::X2:
      return Rational(eq(u, c.a, l) * eq(v, c.b, g) + eq(u, -c.a, l) * eq(v, -c.b, g));
    case Monomial::Y2:
      return Rational(-eq(v, c.a, l) * eq(u, -c.b, g) - eq(v, -c.a, l) * eq(u, c.b, g));
    case Monomial::XY:
      return Rational(0);
  }
  return Rational(0);
}

Rational cusp_eval(const CuspClass& c, const SymbolVector& w) {
  if (w.level() != c.level) throw LevelMismatch("cusp and symbol levels differ");
  Rational total = 0;
  for (const auto& [key, coeff] : w.terms()) total += coeff * cusp_eval(c, key.mono, key.u, key.v);
  return total;
}

VectorQ cusp_functional(const PresentedSpace& space, const CuspClass& c) {
  if (space.level() != c.level) throw LevelMismatch("cusp and space levels differ");
  VectorQ f(space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    const SymbolKey key = space.generator(space.basis_generators()[k]);
    f[k] = cusp_eval(c, key.mono, key.u, key.v);
  }
  return f;
}

SubspaceQ cuspidal_subspace(const PresentedSpace& space) {
  SparseMatrixQ m(0, space.dim());
  for (const CuspClass& c : cusps(space.level())) {
    m.append_row(SparseRowQ::from_dense(cusp_functional(space, c)));
  }
  return kernel(m);
}

// ---------------------------------------------------------------------------

SymbolVector involution_i(const SymbolVector& w) {
  SymbolVector out(w.level());
  for (const auto& [key, c] : w.terms()) {
    out.add(key.mono, -key.u, key.v, key.mono == Monomial::XY ? -c : c);
  }
  return out;
}

SymbolVector symmetrize(const SymbolVector& w, Sign sign) {
  SymbolVector out = w;
  if (sign == Sign::Plus) {
    out += involution_i(w);
  } else {
    out -= involution_i(w);
  }
  return Rational(1, 2) * out;
}

MatrixQ involution_matrix(const PresentedSpace& space) {
  MatrixQ m(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    m.col(k) = space.coordinates(involution_i(space.basis_symbol(k)));
  }
  return m;
}

namespace {

PlusMinus split(const SubspaceQ& cuspidal, const MatrixQ& inv) {
  std::vector<VectorQ> plus, minus;
  for (const VectorQ& b : cuspidal.basis_vectors()) {
    const VectorQ ib = inv * b;
    plus.push_back(Rational(1, 2) * (b + ib));
    minus.push_back(Rational(1, 2) * (b - ib));
  }
  const int n = cuspidal.ambient_dim();
  return {span(plus, n), span(minus, n)};
}

}  // namespace

PlusMinus plus_minus_subspaces(const PresentedSpace& space, const SubspaceQ& cuspidal) {
  return split(cuspidal, involution_matrix(space));
}

PlusMinus plus_minus_subspaces(const PresentedSpace& space) {
  return plus_minus_subspaces(space, cuspidal_subspace(space));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VectorQ> xy_images(const PresentedSpace& space) {
  std::vector<VectorQ> out;
  for (auto [u, v] : space.pairs()) {
    out.push_back(space.generator_coordinates(space.generator_index(Monomial::XY, u, v))
                      .to_dense(space.dim()));
  }
  return out;
}

}  // namespace

XYReducer::XYReducer(const PresentedSpace& space)
    : space_(&space), solver_(xy_images(space), space.dim()) {}

XYCoefficients XYReducer::reduce(const VectorQ& coords) const {
  const auto c = solver_.solve(coords);
  if (!c) throw NotCuspidal("class is not in the span of the xy(u,v) symbols");
  XYCoefficients out;
  for (int k = 0; k < c->size(); ++k) {
    if (!(*c)[k].is_zero()) out.emplace(space_->pairs()[k], (*c)[k]);
  }
  return out;
}

XYCoefficients XYReducer::reduce(const SymbolVector& w) const {
  return reduce(space_->coordinates(w));
}

std::vector<SymbolVector> XYReducer::relations() const {
  std::vector<SymbolVector> out;
  for (const VectorQ& rel : solver_.relations()) {
    SymbolVector w(space_->level());
    for (int k = 0; k < rel.size(); ++k) {
      if (rel[k].is_zero()) continue;
      const auto [u, v] = space_->pairs()[k];
      w.add(Monomial::XY, u, v, rel[k]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

SymbolVector extra_relation(long u, long v, int level) {
  if (!admissible(u, v, level)) throw std::invalid_argument("extra_relation: gcd(u,v,l) > 1");
  SymbolVector w(level);
  for (long k = 0; k < level; ++k) {
    w.add(Monomial::XY, v + k * u, -(k + 1) * u - v, Rational(1));
    w.add(Monomial::XY, -(k + 1) * u - v, u, Rational(-1));
    w.add(Monomial::XY, u, v + k * u, Rational(-1));
  }
  return w;
}

// ---------------------------------------------------------------------------

ModularSymbols::ModularSymbols(int level)
    : space_(level),
      cusps_(cusps(level)),
      cuspidal_(cuspidal_subspace(space_)),
      involution_(involution_matrix(space_)),
      pm_(split(cuspidal_, involution_)),
      xy_(space_) {}

}  // namespace wronsk
