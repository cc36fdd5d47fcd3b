#include "wronsk/pdmu.hpp"

#include "wronsk/heilbronn.hpp"

#include <stdexcept>
#include <string>

namespace wronsk {

namespace {

void require_m4(const PresentedSpace& space, const DualFunctional& phi) {
  if (phi.space != DualSpace::M4) throw std::invalid_argument("expected a functional on M_4(l)");
  if (phi.level != space.level()) throw LevelMismatch("functional level differs from space level");
  if (phi.coords.size() != space.dim()) throw DimensionMismatch("functional length != dim M_4(l)");
}

void require_minus(const ModularSymbols& ms, const DualFunctional& phi) {
  if (phi.space != DualSpace::S4Minus) {
    throw std::invalid_argument("expected a functional on S_4(l)_-");
  }
  if (phi.level != ms.level()) throw LevelMismatch("functional level differs from space level");
  if (phi.coords.size() != ms.minus().dim()) throw DimensionMismatch("functional length != dim S_4(l)_-");
}

Rational dot(const VectorQ& a, const VectorQ& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

// Integer templates of the quadratic arguments.
constexpr Quadratic kYMinusXSq{1, -2, 1};   // (y-x)^2
constexpr Quadratic kYPlusXSq{1, 2, 1};     // (y+x)^2
constexpr Quadratic kYTimesYMinusX{0, -1, 1};   // y(y-x)
constexpr Quadratic kNegYTimesYPlusX{0, -1, -1};  // (-y)(y+x)
constexpr Quadratic kYSq{0, 0, 1};          // y^2 and (-y)^2

}  // namespace

DualFunctional m4_functional(int level, VectorQ coords) {
  return {DualSpace::M4, level, std::move(coords)};
}

Rational evaluate(const ModularSymbols& ms, const DualFunctional& phi, const SymbolVector& w) {
  const VectorQ x = ms.space().coordinates(w);
  if (phi.space == DualSpace::M4) {
    require_m4(ms.space(), phi);
    return dot(phi.coords, x);
  }
  require_minus(ms, phi);
  const auto beta = ms.minus().coordinates(x);
  if (!beta) throw std::domain_error("symbol is not in S_4(l)_-");
  return dot(phi.coords, *beta);
}

VectorQ generator_values(const PresentedSpace& space, const DualFunctional& phi) {
  require_m4(space, phi);
  VectorQ out(space.generator_count());
  for (int g = 0; g < space.generator_count(); ++g) {
    Rational s = 0;
    for (const auto& [k, value] : space.generator_coordinates(g)) s += value * phi.coords[k];
    out[g] = s;
  }
  return out;
}

SymbolVector pd(const PresentedSpace& space, const DualFunctional& phi) {
  const VectorQ gv = generator_values(space, phi);
  const auto value = [&](const Quadratic& p, long u, long v) {
    Rational s = 0;
    const auto term = [&](Monomial m, long c) {
      if (c == 0) return;
      const int g = space.generator_index(m, u, v);
      if (g >= 0) s += gv[g] * c;
    };
    term(Monomial::X2, p.x2);
    term(Monomial::XY, p.xy);
    term(Monomial::Y2, p.y2);
    return s;
  };
  SymbolVector out(space.level());
  const Rational w(1, 24);
  for (auto [u, v] : space.pairs()) {
    const long a1 = -v, a2 = u + v;  // (-v, u+v)
    const long b1 = v, b2 = v - u;   // (v, v-u)
    const Rational c1 = value(kYMinusXSq, a1, a2) - value(kYPlusXSq, b1, b2);
    const Rational c2 = value(kYTimesYMinusX, a1, a2) - value(kNegYTimesYPlusX, b1, b2);
    const Rational c3 = value(kYSq, a1, a2) - value(kYSq, b1, b2);
    out.add(Monomial::X2, u, v, w * c1);
    out.add(Monomial::XY, u, v, Rational(-2) * w * c2);
    out.add(Monomial::Y2, u, v, w * c3);
  }
  return out;
}

VectorQ pd_coordinates(const PresentedSpace& space, const DualFunctional& phi) {
  return space.coordinates(pd(space, phi));
}

Rational pd_pairing(const PresentedSpace& space, const DualFunctional& phi,
                    const DualFunctional& lambda) {
  require_m4(space, lambda);
  if (phi.level != lambda.level) throw LevelMismatch("pd_pairing: functional levels differ");
  return dot(lambda.coords, pd_coordinates(space, phi));
}

DualFunctional extend_minus(const ModularSymbols& ms, const DualFunctional& phi) {
  return extend_minus(ms, phi, VectorQ::Zero(ms.space().dim()));
}

DualFunctional extend_minus(const ModularSymbols& ms, const DualFunctional& phi,
                            const VectorQ& offset) {
  require_minus(ms, phi);
  const int n = ms.space().dim();
  if (offset.size() != n) throw DimensionMismatch("extension offset length != dim M_4(l)");
  for (int i = 0; i < ms.minus().dim(); ++i) {
    if (!dot(offset, ms.minus().basis_vector(i)).is_zero()) {
      throw std::invalid_argument("extension offset does not vanish on S_4(l)_-");
    }
  }
  VectorQ ext = offset;
  for (int i = 0; i < ms.minus().dim(); ++i) ext[ms.minus().pivots()[i]] += phi.coords[i];
  const VectorQ pulled = ms.involution().transpose() * ext;  // ext o i
  return m4_functional(ms.level(), Rational(1, 2) * (ext - pulled));
}

std::vector<DualFunctional> minus_dual_basis(const ModularSymbols& ms) {
  std::vector<DualFunctional> out;
  const int d = ms.minus().dim();
  for (int i = 0; i < d; ++i) {
    VectorQ c = VectorQ::Zero(d);
    c[i] = 1;
    out.push_back({DualSpace::S4Minus, ms.level(), std::move(c)});
  }
  return out;
}

VectorQ pd_minus(const ModularSymbols& ms, const DualFunctional& phi) {
  return pd_coordinates(ms.space(), extend_minus(ms, phi));
}

PdMinusToPlus pd_minus_to_plus(const ModularSymbols& ms) {
  PdMinusToPlus out;
  const auto basis = minus_dual_basis(ms);
  out.matrix = MatrixQ::Zero(ms.plus().dim(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto c = ms.plus().coordinates(pd_minus(ms, basis[i]));
    if (!c) throw std::logic_error("pd of a minus functional left S_4(l)_+");
    out.matrix.col(static_cast<Eigen::Index>(i)) = *c;
  }
  out.rank = rref(SparseMatrixQ::from_dense(out.matrix)).rank;
  return out;
}

QSeries mu_formal(const SymbolVector& w, const EisensteinFamily& family) {
  if (w.level() != family.level()) throw LevelMismatch("mu_formal: level mismatch");
  QSeries out(family.precision());
  for (const auto& [key, c] : w.terms()) {
    if (key.mono != Monomial::XY) {
      throw std::invalid_argument("mu_formal: only xy(u,v) generators are supported");
    }
    out += c * family.wronskian(key.u, key.v);
  }
  return out;
}

QSeries mu_cuspidal(const ModularSymbols& ms, const VectorQ& coords, const EisensteinFamily& family) {
  if (ms.level() != family.level()) throw LevelMismatch("mu_cuspidal: level mismatch");
  QSeries out(family.precision());
  for (const auto& [uv, c] : ms.xy().reduce(coords)) out += c * family.wronskian(uv.first, uv.second);
  return out;
}

QSeries mu_cuspidal(const ModularSymbols& ms, const SymbolVector& w, const EisensteinFamily& family) {
  return mu_cuspidal(ms, ms.space().coordinates(w), family);
}

CompositionSeries::CompositionSeries(const ModularSymbols& ms, int precision)
    : precision_(precision), level_(ms.level()) {
  raw_ = hecke_e0_coordinates(ms.space(), precision - 1);
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    auto c = ms.minus().coordinates(raw_[i]);
    if (!c) {
      throw std::logic_error("T_" + std::to_string(i + 1) + " xy(0,1)_- is not in S_4(l)_-");
    }
    hecke_.push_back(std::move(*c));
  }
}

QSeries CompositionSeries::operator()(const DualFunctional& phi) const {
  if (phi.level != level_) throw LevelMismatch("composition series level mismatch");
  QSeries out(precision_);
  const auto& table = phi.space == DualSpace::S4Minus ? hecke_ : raw_;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (phi.coords.size() != table[i].size()) throw DimensionMismatch("functional length");
    out[static_cast<int>(i) + 1] = dot(phi.coords, table[i]);
  }
  return out;
}

QSeries composition_B(const ModularSymbols& ms, const DualFunctional& phi, int precision) {
  return CompositionSeries(ms, precision)(phi);
}

CompositionCheck composition_check(const ModularSymbols& ms, const DualFunctional& phi,
                                   const EisensteinFamily& family, const SubspaceQ& junk,
                                   const CompositionSeries& series) {
  CompositionCheck out;
  out.mu = mu_cuspidal(ms, pd_minus(ms, phi), family);
  out.b = series(phi);
  const QSeries diff = out.mu - out.b;
  out.exact = diff.is_zero();
  out.residual = QSeries(junk.residual(diff.coeffs()));
  out.pass = out.residual.is_zero();
  return out;
}

CompositionCheck composition_check(const ModularSymbols& ms, const DualFunctional& phi,
                                   int precision) {
  const EisensteinFamily family(ms.level(), precision);
  return composition_check(ms, phi, family, junk_space(family), CompositionSeries(ms, precision));
}

}  // namespace wronsk
