#include "wronsk/report.hpp"

#include "wronsk/eisenstein.hpp"
#include "wronsk/pdmu.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace wronsk {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const VectorQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Json to_json(const QSeries& f) {
  return {{"precision", f.precision()}, {"coeffs", to_json(f.coeffs())}};
}

Json to_json(const SubspaceQ& s) {
  Json basis = Json::array();
  for (int r = 0; r < s.dim(); ++r) {
    for (const auto& [c, value] : s.basis().row(r)) basis.push_back({r, c, to_string(value)});
  }
  return {{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

Json to_json(const SymbolVector& w) {
  Json out = Json::array();
  for (const auto& [key, c] : w.terms()) {
    out.push_back({monomial_name(key.mono), key.u, key.v, to_string(c)});
  }
  return out;
}

Json to_json(const HeilbronnTuple& t) { return {t.a, t.b, t.c, t.d}; }
Json to_json(const EuclidTuple& t) { return {t.m1, t.k1, t.m2, t.k2}; }

Json to_json(const SpanReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w.coeffs()));
  return {{"schema", 1},
          {"level", r.level},
          {"precision", r.precision},
          {"n_max", r.n_max},
          {"prime_level", r.prime_level},
          {"wronskian_dim", r.wronskian_dim},
          {"cyclic_dim", r.cyclic_dim},
          {"cyclic_last_growth", r.cyclic_last_growth},
          {"stabilized", r.stabilized},
          {"junk_dim", r.junk_dim},
          {"b_span_dim_mod_junk", r.b_span_dim_mod_junk},
          {"wronskian_dim_mod_junk", r.wronskian_dim_mod_junk},
          {"spans_match", r.spans_match},
          {"verdict", verdict_name(r.verdict)},
          {"notes", r.notes},
          {"witnesses", witnesses}};
}

Json dims_json(const ModularSymbols& ms) {
  return {{"level", ms.level()},
          {"generators", ms.space().generator_count()},
          {"cusps", static_cast<int>(ms.cusp_list().size())},
          {"dimM4", ms.space().dim()},
          {"dimS4", ms.cuspidal().dim()},
          {"dimS4plus", ms.plus().dim()},
          {"dimS4minus", ms.minus().dim()}};
}

std::string span_report_csv_header() {
  return "level,precision,n_max,wronskian_dim,cyclic_dim,b_span_dim_mod_junk,junk_dim,"
         "spans_match,stabilized,verdict";
}

std::string span_report_csv_row(const SpanReport& r) {
  std::ostringstream os;
  os << r.level << ',' << r.precision << ',' << r.n_max << ',' << r.wronskian_dim << ','
     << r.cyclic_dim << ',' << r.b_span_dim_mod_junk << ',' << r.junk_dim << ','
     << (r.spans_match ? "true" : "false") << ',' << (r.stabilized ? "true" : "false") << ','
     << verdict_name(r.verdict);
  return os.str();
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ConfigError("unknown format '" + s + "' (expected json or csv)");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dims",   "relations", "pd",    "composition",
                                              "euclid", "theorem",   "gamma0"};
  return names;
}

void validate(const RunConfig& config) {
  if (config.levels.empty()) throw ConfigError("no level given");
  for (int l : config.levels) {
    if (l < 2) throw ConfigError("level must be at least 2, got " + std::to_string(l));
  }
  if (config.precision && *config.precision < 8) {
    throw ConfigError("precision must be at least 8, got " + std::to_string(*config.precision));
  }
  if (config.n_max && *config.n_max < 1) throw ConfigError("n-max must be positive");
  for (const auto& s : config.suites) {
    if (s == "all") continue;
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw ConfigError("unknown suite '" + s + "'");
    }
  }
}

namespace {

constexpr int kEuclidBound = 300;

Json suite_dims(const ModularSymbols& ms) {
  Json out = dims_json(ms);
  const int l = ms.level();
  bool pass = ms.plus().dim() + ms.minus().dim() == ms.cuspidal().dim() &&
              ms.plus().dim() == ms.minus().dim();
  if (is_prime(l) && l >= 3) {
    const int expected = (l - 1) * (l - 3) / 8;
    out["expected_dimS4plus"] = expected;
    pass = pass && ms.plus().dim() == expected;
  }
  out["pass"] = pass;
  return out;
}

// Extra relations and xy(u,v) - xy(v,-u) vanish in the quotient and under the
// formal Wronskian map. All admissible pairs are checked.
Json suite_relations(const ModularSymbols& ms, const EisensteinFamily& family) {
  const int l = ms.level();
  Json failures = Json::array();
  int checked = 0;
  for (auto [u, v] : ms.space().pairs()) {
    const SymbolVector extra = extra_relation(u, v, l);
    const SymbolVector swap = symbol(Monomial::XY, u, v, l) - symbol(Monomial::XY, v, -u, l);
    const bool quotient_ok = ms.space().coordinates(extra).isZero() &&
                             ms.space().coordinates(swap).isZero();
    const QSeries m1 = mu_formal(extra, family);
    const QSeries m2 = mu_formal(swap, family);
    ++checked;
    if (!quotient_ok || !m1.is_zero() || !m2.is_zero()) {
      failures.push_back({{"u", u}, {"v", v}, {"quotient_ok", quotient_ok},
                          {"mu_extra", to_json(m1)}, {"mu_swap", to_json(m2)}});
    }
  }
  return {{"pairs_checked", checked}, {"failures", failures}, {"pass", failures.empty()}};
}

// Columns: pd of each coordinate dual basis functional.
MatrixQ pd_matrix(const PresentedSpace& space) {
  const int n = space.dim();
  MatrixQ p(n, n);
  for (int i = 0; i < n; ++i) {
    VectorQ e = VectorQ::Zero(n);
    e[i] = 1;
    p.col(i) = pd_coordinates(space, m4_functional(space.level(), e));
  }
  return p;
}

Json suite_pd(const ModularSymbols& ms) {
  const PresentedSpace& space = ms.space();
  const int n = space.dim();
  const MatrixQ p = pd_matrix(space);
  Json out;

  // lambda_j(pd(phi_i)) = p(j, i)
  const bool antisym = (p + p.transpose()).isZero();
  out["antisymmetry"] = antisym;

  bool cusp_kills = true, kills_cusp = true;
  for (const auto& c : ms.cusp_list()) {
    const VectorQ f = cusp_functional(space, c);
    if (!(f.transpose() * p).isZero()) cusp_kills = false;
    if (!(p * f).isZero()) kills_cusp = false;
  }
  out["cusp_eval_of_pd_zero"] = cusp_kills;
  out["pd_of_cusp_functional_zero"] = kills_cusp;

  std::mt19937 rng(20240601u + static_cast<unsigned>(ms.level()));
  std::uniform_int_distribution<int> dist(-5, 5);
  bool ext_ok = true;
  for (const auto& phi : minus_dual_basis(ms)) {
    VectorQ r(n);
    for (int k = 0; k < n; ++k) r[k] = dist(rng);
    for (int i = 0; i < ms.minus().dim(); ++i) {
      r[ms.minus().pivots()[i]] -= r.dot(ms.minus().basis_vector(i));
    }
    const VectorQ a = pd_coordinates(space, extend_minus(ms, phi));
    const VectorQ b = pd_coordinates(space, extend_minus(ms, phi, r));
    if (a != b) ext_ok = false;
  }
  out["extension_independent"] = ext_ok;

  bool parity = true;
  int rank = -1;
  try {
    const PdMinusToPlus m = pd_minus_to_plus(ms);
    rank = m.rank;
  } catch (const std::logic_error&) {
    parity = false;
  }
  // plus functionals go to the minus part
  const MatrixQ inv = ms.involution();
  for (int i = 0; i < n && parity; ++i) {
    VectorQ e = VectorQ::Zero(n);
    e[i] = 1;
    const VectorQ plus_fn = Rational(1, 2) * (e + inv.transpose() * e);
    const VectorQ image = pd_coordinates(space, m4_functional(ms.level(), plus_fn));
    if (!image.isZero() && !ms.minus().contains(image)) parity = false;
  }
  out["parity"] = parity;
  out["rank"] = rank;
  out["dimS4minus"] = ms.minus().dim();
  out["dimS4plus"] = ms.plus().dim();
  const bool rank_ok = rank == ms.minus().dim() && rank == ms.plus().dim();
  out["rank_full"] = rank_ok;
  out["pass"] = antisym && cusp_kills && kills_cusp && ext_ok && parity && rank_ok;
  return out;
}

Json suite_composition(const ModularSymbols& ms, const EisensteinFamily& family,
                       const SubspaceQ& junk, const CompositionSeries& series) {
  Json results = Json::array();
  bool pass = true;
  const auto basis = minus_dual_basis(ms);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const CompositionCheck c = composition_check(ms, basis[i], family, junk, series);
    Json r{{"index", static_cast<int>(i)}, {"pass", c.pass}, {"exact", c.exact}};
    if (!c.pass) r["residual"] = to_json(c.residual);
    results.push_back(r);
    pass = pass && c.pass;
  }
  return {{"precision", family.precision()}, {"junk_dim", junk.dim()},
          {"functionals", results}, {"pass", pass}};
}

Json suite_euclid() {
  Json failures = Json::array();
  for (long n = 1; n <= kEuclidBound; ++n) {
    try {
      const auto runs = run_decomposition(n);
      std::set<EuclidTuple> images;
      std::size_t domain = 0, codomain = 0;
      bool ends_ok = true;
      for (const auto& run : runs) {
        const EuclidTuple& last = run.tuples.back();
        if (last.m1 != last.m2) ends_ok = false;
      }
      for (const auto& t : enumerate_I(n)) {
        if (t.m1 != t.m2) {
          ++domain;
          const auto u = up(t);
          if (!u || u->k1 == u->k2) ends_ok = false;
          else images.insert(*u);
        }
        if (t.k1 != t.k2) ++codomain;
      }
      const bool bijective = images.size() == domain && domain == codomain;
      if (!ends_ok || !bijective) {
        failures.push_back({{"n", n}, {"runs_end_at_equal_m", ends_ok}, {"bijective", bijective}});
      }
    } catch (const std::logic_error& e) {
      failures.push_back({{"n", n}, {"error", e.what()}});
    }
  }
  return {{"n_max", kEuclidBound}, {"failures", failures}, {"pass", failures.empty()}};
}

Json suite_gamma0(const EisensteinFamily& family, const SubspaceQ& wspan) {
  const SubspaceQ g = gamma0_span(family);
  const int l = family.level();
  const bool contained = is_subspace_of(g, wspan);
  bool invariant = true;
  for (long a = 0; a < l && invariant; ++a) {
    for (long b = a + 1; b < l && invariant; ++b) {
      const QSeries base = gamma0_generator(family, a, b);
      for (long j = 2; j < l; ++j) {
        if (gcd(j, l) == 1 && !(gamma0_generator(family, a * j, b * j) == base)) {
          invariant = false;
          break;
        }
      }
    }
  }
  return {{"dim", g.dim()}, {"wronskian_dim", wspan.dim()}, {"contained", contained},
          {"equal", subspace_equal(g, wspan)}, {"invariant", invariant},
          {"pass", contained && invariant}};
}

std::vector<std::string> selected(const RunConfig& config) {
  const bool all = config.suites.empty() ||
                   std::find(config.suites.begin(), config.suites.end(), "all") != config.suites.end();
  std::vector<std::string> out;
  for (const auto& s : suite_names()) {
    if (all || std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end()) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

RunResult run_suite(const RunConfig& config, const Progress& progress) {
  validate(config);
  const auto say = [&](const std::string& msg) {
    if (progress) progress(msg);
  };
  const std::vector<std::string> suites = selected(config);
  RunResult result;
  Json levels = Json::array();
  bool all_pass = true;
  bool euclid_done = false;
  Json euclid_cache;

  for (int l : config.levels) {
    const int precision = config.precision.value_or(default_precision(l));
    Json suites_json = Json::object();
    say("level " + std::to_string(l) + ": building modular symbols");
    const ModularSymbols ms(l);
    const EisensteinFamily family(l, precision);
    std::optional<SubspaceQ> junk;
    std::optional<SubspaceQ> wspan;

    for (const auto& name : suites) {
      say("level " + std::to_string(l) + ": suite " + name);
      Json r;
      try {
        if (name == "dims") {
          r = suite_dims(ms);
        } else if (name == "relations") {
          r = suite_relations(ms, family);
        } else if (name == "pd") {
          r = suite_pd(ms);
        } else if (name == "composition") {
          if (!junk) junk = junk_space(family);
          r = suite_composition(ms, family, *junk, CompositionSeries(ms, precision));
        } else if (name == "euclid") {
          if (!euclid_done) {
            euclid_cache = suite_euclid();
            euclid_done = true;
          }
          r = euclid_cache;
        } else if (name == "theorem") {
          const SpanReport rep = theorem_check(ms, precision, config.n_max);
          r = to_json(rep);
          r.erase("schema");
          r["pass"] = rep.verdict == Verdict::Match;
        } else if (name == "gamma0") {
          if (!wspan) wspan = wronskian_span(family);
          r = suite_gamma0(family, *wspan);
        }
      } catch (const std::exception& e) {
        r = {{"pass", false}, {"error", e.what()}};
      }
      all_pass = all_pass && r.value("pass", false);
      suites_json[name] = r;
    }
    levels.push_back({{"level", l}, {"precision", precision}, {"suites", suites_json}});
  }

  Json cfg{{"levels", config.levels}, {"suites", suites}};
  cfg["precision"] = config.precision ? Json(*config.precision) : Json(nullptr);
  cfg["n_max"] = config.n_max ? Json(*config.n_max) : Json(nullptr);
  result.report = {{"schema", 1}, {"config", cfg}, {"levels", levels}, {"pass", all_pass}};
  result.exit_code = all_pass ? 0 : 2;
  return result;
}

std::string report_csv(const Json& report) {
  std::ostringstream os;
  os << "level,suite,pass\n";
  for (const auto& lv : report.at("levels")) {
    for (const auto& [name, r] : lv.at("suites").items()) {
      os << lv.at("level").get<int>() << ',' << name << ','
         << (r.value("pass", false) ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

}  // namespace wronsk
