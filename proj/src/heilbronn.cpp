#include "wronsk/heilbronn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace wronsk {

std::vector<HeilbronnTuple> enumerate_H(long n) {
  if (n < 1) throw std::invalid_argument("enumerate_H: n must be positive");
  std::vector<HeilbronnTuple> out;
  // ad = n + bc <= n + (a-1)(d-1) forces a, d <= n.
  for (long a = 1; a <= n; ++a) {
    for (long d = 1; d <= n; ++d) {
      const long bc = a * d - n;
      if (bc < 0) continue;
      if (bc == 0) {
        for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
        for (long b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        continue;
      }
      for (long b = 1; b < a; ++b) {
        if (bc % b == 0 && bc / b < d) out.push_back({a, b, bc / b, d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EuclidTuple> enumerate_I(long n) {
  if (n < 1) throw std::invalid_argument("enumerate_I: n must be positive");
  std::vector<EuclidTuple> out;
  for (long m1 = 1; m1 < n; ++m1) {
    for (long k1 = 1; m1 * k1 < n; ++k1) {
      const long rest = n - m1 * k1;
      for (long m2 = 1; m2 <= rest; ++m2) {
        if (rest % m2 == 0) out.push_back({m1, k1, m2, rest / m2});
      }
    }
  }
  return out;
}

std::optional<EuclidTuple> up(const EuclidTuple& t) {
  if (t.m1 > t.m2) return EuclidTuple{t.m2, t.k1 + t.k2, t.m1 - t.m2, t.k1};
  if (t.m1 < t.m2) return EuclidTuple{t.m2 - t.m1, t.k2, t.m1, t.k1 + t.k2};
  return std::nullopt;
}

std::vector<EuclidRun> run_decomposition(long n) {
  const std::vector<EuclidTuple> all = enumerate_I(n);
  std::set<EuclidTuple> has_preimage;
  for (const auto& t : all) {
    if (auto next = up(t)) has_preimage.insert(*next);
  }
  std::vector<EuclidRun> runs;
  std::set<EuclidTuple> seen;
  for (const auto& start : all) {
    if (has_preimage.count(start)) continue;
    EuclidRun run;
    std::optional<EuclidTuple> cur = start;
    while (cur) {
      if (!seen.insert(*cur).second) {
        throw std::logic_error("up-orbits overlap in I(" + std::to_string(n) + ")");
      }
      run.tuples.push_back(*cur);
      cur = up(*cur);
    }
    runs.push_back(std::move(run));
  }
  if (seen.size() != all.size()) {
    throw std::logic_error("up-orbits do not cover I(" + std::to_string(n) + ")");
  }
  return runs;
}

SymbolVector hecke_on_e0(long n, int level) {
  SymbolVector w(level);
  for (const auto& h : enumerate_H(n)) {
    w.add_poly({h.a * h.c, h.a * h.d + h.b * h.c, h.b * h.d}, h.c, h.d);
  }
  return symmetrize(w, Sign::Minus);
}

std::vector<VectorQ> hecke_e0_coordinates(const PresentedSpace& space, long n_max) {
  std::vector<VectorQ> out;
  for (long n = 1; n <= n_max; ++n) out.push_back(space.coordinates(hecke_on_e0(n, space.level())));
  return out;
}

SymbolVector diamond(long j, const SymbolVector& w) {
  if (gcd(mod(j, w.level()), w.level()) != 1) {
    throw NotAUnit(std::to_string(j) + " is not a unit mod " + std::to_string(w.level()));
  }
  SymbolVector out(w.level());
  for (const auto& [key, c] : w.terms()) out.add(key.mono, j * key.u, j * key.v, c);
  return out;
}

MatrixQ diamond_matrix(const PresentedSpace& space, long j) {
  MatrixQ m(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) {
    m.col(k) = space.coordinates(diamond(j, space.basis_symbol(k)));
  }
  return m;
}

}  // namespace wronsk
