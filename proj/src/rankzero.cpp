#include "wronsk/rankzero.hpp"

#include "wronsk/heilbronn.hpp"
#include "wronsk/pdmu.hpp"

namespace wronsk {

SubspaceQ wronskian_span(const EisensteinFamily& family) {
  const int l = family.level();
  RowReducer<Rational> red(family.precision());
  for (int a = 0; a < l; ++a) {
    for (int b = a + 1; b < l; ++b) {
      red.insert(SparseRowQ::from_dense(family.wronskian(a, b).coeffs()));
    }
  }
  return SubspaceQ(red.finish());
}

SubspaceQ wronskian_span(int level, int precision) {
  return wronskian_span(EisensteinFamily(level, precision));
}

QSeries gamma0_generator(const EisensteinFamily& family, long a, long b) {
  const int l = family.level();
  QSeries out(family.precision());
  for (long j = 1; j < l; ++j) {
    if (gcd(j, l) == 1) out += family.wronskian(a * j, b * j);
  }
  return out;
}

SubspaceQ gamma0_span(const EisensteinFamily& family) {
  const int l = family.level();
  RowReducer<Rational> red(family.precision());
  for (int a = 0; a < l; ++a) {
    for (int b = a + 1; b < l; ++b) {
      red.insert(SparseRowQ::from_dense(gamma0_generator(family, a, b).coeffs()));
    }
  }
  return SubspaceQ(red.finish());
}

SubspaceQ gamma0_span(int level, int precision) {
  return gamma0_span(EisensteinFamily(level, precision));
}

CyclicResult cyclic_dim(const ModularSymbols& ms, int n_max) {
  const int l = ms.level();
  std::vector<MatrixQ> diamonds;
  for (long j = 1; j < l; ++j) {
    if (gcd(j, l) == 1) diamonds.push_back(diamond_matrix(ms.space(), j));
  }
  CyclicResult out;
  RowReducer<Rational> red(ms.minus().dim());
  for (int n = 1; n <= n_max; ++n) {
    const VectorQ e = ms.space().coordinates(hecke_on_e0(n, l));
    bool grew = false;
    for (const auto& d : diamonds) {
      const VectorQ x = d * e;
      const auto c = ms.minus().coordinates(x);
      if (!c) throw std::logic_error("diamond translate of T_n e0 left S_4(l)_-");
      grew = red.insert(SparseRowQ::from_dense(*c)) || grew;
    }
    if (grew) out.last_growth = n;
  }
  out.dim = red.rank();
  out.stabilized = n_max - out.last_growth >= 10;
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "mismatch";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

SpanReport theorem_check(int level, std::optional<int> precision, std::optional<int> n_max) {
  if (level < 2) throw LevelTooSmall("theorem_check: level must be at least 2");
  const ModularSymbols ms(level);
  return theorem_check(ms, precision, n_max);
}

SpanReport theorem_check(const ModularSymbols& ms, std::optional<int> precision,
                         std::optional<int> n_max) {
  const int level = ms.level();
  SpanReport rep;
  rep.level = level;
  rep.precision = precision.value_or(default_precision(level));
  rep.n_max = n_max.value_or(rep.precision);
  rep.prime_level = is_prime(level);

  const EisensteinFamily family(level, rep.precision);
  const SubspaceQ w = wronskian_span(family);
  const SubspaceQ junk = junk_space(family);
  rep.wronskian_dim = w.dim();
  rep.junk_dim = junk.dim();
  for (const auto& v : w.basis_vectors()) rep.witnesses.emplace_back(v);

  const CompositionSeries series(ms, rep.precision);
  SubspaceQ b_plus_j = junk;
  {
    RowReducer<Rational> red(rep.precision);
    for (const auto& r : junk.basis().row_list()) red.insert(r);
    for (const auto& phi : minus_dual_basis(ms)) red.insert(SparseRowQ::from_dense(series(phi).coeffs()));
    b_plus_j = SubspaceQ(red.finish());
  }
  const SubspaceQ w_plus_j = subspace_sum(w, junk);
  rep.b_span_dim_mod_junk = b_plus_j.dim() - junk.dim();
  rep.wronskian_dim_mod_junk = w_plus_j.dim() - junk.dim();
  rep.spans_match = subspace_equal(b_plus_j, w_plus_j);

  const CyclicResult cyc = cyclic_dim(ms, rep.n_max);
  rep.cyclic_dim = cyc.dim;
  rep.cyclic_last_growth = cyc.last_growth;
  rep.stabilized = cyc.stabilized;

  if (rep.wronskian_dim != rep.wronskian_dim_mod_junk) {
    rep.notes.push_back("Wronskian span meets the junk space");
  }
  if (!rep.prime_level) {
    rep.notes.push_back("composite level: cyclic dimension reported, not compared");
  }
  if (!rep.spans_match) {
    rep.verdict = Verdict::Mismatch;
  } else if (!rep.stabilized) {
    rep.verdict = Verdict::Indeterminate;
    rep.notes.push_back("cyclic dimension had not stabilized by n_max");
  } else if (rep.prime_level && rep.wronskian_dim != rep.cyclic_dim) {
    rep.verdict = Verdict::Mismatch;
  } else {
    rep.verdict = Verdict::Match;
  }
  return rep;
}

}  // namespace wronsk
