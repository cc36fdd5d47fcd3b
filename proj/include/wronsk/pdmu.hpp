#pragma once

// Poincare-duality map on functionals, the Wronskian map on cuspidal
// symbols, and the Hecke series of the winding element.

#include "wronsk/eisenstein.hpp"
#include "wronsk/modsym.hpp"

#include <vector>

namespace wronsk {

enum class DualSpace { M4, S4Minus };

/// A linear functional, stored as a row vector over the tagged space's basis:
/// quotient coordinates for M4, the RREF basis of S_4(l)_- for S4Minus.
struct DualFunctional {
  DualSpace space;
  int level;
  VectorQ coords;
};

DualFunctional m4_functional(int level, VectorQ coords);

/// Value on a symbol; gcd(u, v, l) > 1 generators never occur in a
/// SymbolVector, which realizes the zero convention for them.
Rational evaluate(const ModularSymbols& ms, const DualFunctional& phi, const SymbolVector& w);

/// phi restricted to the free generators: entry g is phi(generator g).
VectorQ generator_values(const PresentedSpace& space, const DualFunctional& phi);

/// The duality map M_4(l)* -> M_4(l).
SymbolVector pd(const PresentedSpace& space, const DualFunctional& phi);
VectorQ pd_coordinates(const PresentedSpace& space, const DualFunctional& phi);

/// lambda(pd(phi)).
Rational pd_pairing(const PresentedSpace& space, const DualFunctional& phi,
                    const DualFunctional& lambda);

/// Extends phi on S_4(l)_- by zero on the standard complement of the minus
/// basis pivots, adds `offset` (which must vanish on S_4(l)_-), then
/// antisymmetrizes with the dual involution.
DualFunctional extend_minus(const ModularSymbols& ms, const DualFunctional& phi);
DualFunctional extend_minus(const ModularSymbols& ms, const DualFunctional& phi,
                            const VectorQ& offset);

/// Dual basis of S_4(l)_-*.
std::vector<DualFunctional> minus_dual_basis(const ModularSymbols& ms);

struct PdMinusToPlus {
  MatrixQ matrix;  // columns: S_4(l)_+ coordinates of pd of each dual basis element
  int rank = 0;
};

PdMinusToPlus pd_minus_to_plus(const ModularSymbols& ms);

/// pd of a S_4(l)_- functional, in quotient coordinates.
VectorQ pd_minus(const ModularSymbols& ms, const DualFunctional& phi);

/// Sum of wronskian_q(s_u, s_v) over a combination of xy(u, v) generators,
/// computed on the free module (no quotient). Throws if w has x^2 or y^2 terms.
QSeries mu_formal(const SymbolVector& w, const EisensteinFamily& family);

/// mu on a cuspidal class: reduce to xy(u, v) and sum the Wronskians.
QSeries mu_cuspidal(const ModularSymbols& ms, const VectorQ& coords, const EisensteinFamily& family);
QSeries mu_cuspidal(const ModularSymbols& ms, const SymbolVector& w, const EisensteinFamily& family);

/// q^n coefficient phi(hecke_on_e0(n, l)) for 1 <= n < N.
class CompositionSeries {
 public:
  CompositionSeries(const ModularSymbols& ms, int precision);

  int precision() const { return precision_; }
  /// S_4(l)_- coordinates of hecke_on_e0(n, l), n = 1..N-1.
  const std::vector<VectorQ>& hecke_minus_coordinates() const { return hecke_; }
  const std::vector<VectorQ>& hecke_coordinates() const { return raw_; }

  QSeries operator()(const DualFunctional& phi) const;

 private:
  int precision_;
  int level_;
  std::vector<VectorQ> raw_;
  std::vector<VectorQ> hecke_;
};

QSeries composition_B(const ModularSymbols& ms, const DualFunctional& phi, int precision);

struct CompositionCheck {
  bool pass = false;
  bool exact = false;  // mu(pd(phi)) == B(phi) coefficientwise
  QSeries mu;
  QSeries b;
  QSeries residual;  // (mu - B) reduced against the junk space
};

CompositionCheck composition_check(const ModularSymbols& ms, const DualFunctional& phi,
                                   const EisensteinFamily& family, const SubspaceQ& junk,
                                   const CompositionSeries& series);
CompositionCheck composition_check(const ModularSymbols& ms, const DualFunctional& phi,
                                   int precision);

}  // namespace wronsk
