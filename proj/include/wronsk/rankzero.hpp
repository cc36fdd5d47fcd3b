#pragma once

#include "wronsk/eisenstein.hpp"
#include "wronsk/modsym.hpp"
#include "wronsk/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wronsk {

/// Span of wronskian_q(s_a, s_b) over all a, b mod l, as vectors in Q^N.
SubspaceQ wronskian_span(const EisensteinFamily& family);
SubspaceQ wronskian_span(int level, int precision);

/// sum over units j of wronskian_q(s_{aj}, s_{bj}).
QSeries gamma0_generator(const EisensteinFamily& family, long a, long b);

SubspaceQ gamma0_span(const EisensteinFamily& family);
SubspaceQ gamma0_span(int level, int precision);

struct CyclicResult {
  int dim = 0;
  bool stabilized = false;
  int last_growth = 0;  // last n at which the span grew (0 if never)
};

/// Span of diamond(j) hecke_on_e0(n) for units j and 1 <= n <= n_max, in
/// S_4(l)_- coordinates. Stabilized when the span stopped growing at least
/// 10 steps before n_max.
CyclicResult cyclic_dim(const ModularSymbols& ms, int n_max);

enum class Verdict { Match, Mismatch, Indeterminate };

const char* verdict_name(Verdict v);  // "match", "mismatch", "indeterminate"

struct SpanReport {
  int level = 0;
  int precision = 0;
  int n_max = 0;
  bool prime_level = false;
  int wronskian_dim = 0;
  int cyclic_dim = 0;
  int cyclic_last_growth = 0;
  bool stabilized = false;
  int junk_dim = 0;
  int b_span_dim_mod_junk = 0;
  int wronskian_dim_mod_junk = 0;
  bool spans_match = false;  // span{B} + J == W + J
  Verdict verdict = Verdict::Mismatch;
  std::vector<std::string> notes;
  std::vector<QSeries> witnesses;  // RREF basis of the Wronskian span
};

bool is_prime(int n);

/// Precision defaults to default_precision(l) and n_max to the precision.
SpanReport theorem_check(int level, std::optional<int> precision = std::nullopt,
                         std::optional<int> n_max = std::nullopt);
SpanReport theorem_check(const ModularSymbols& ms, std::optional<int> precision = std::nullopt,
                         std::optional<int> n_max = std::nullopt);

}  // namespace wronsk
