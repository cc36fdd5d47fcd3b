#include "wronsk/eisenstein.hpp"
#include "wronsk/heilbronn.hpp"
#include "wronsk/rankzero.hpp"
#include "wronsk/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace wronsk;

namespace {

struct Options {
  int level = 0;
  std::vector<int> levels;
  std::optional<int> precision;
  std::optional<int> n_max;
  std::string format = "json";
  std::string out;
  std::string series = "s";
  long index = 1;
  long n = 1;
  std::vector<std::string> suites;
  std::string suite_positional;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw ConfigError("cannot open output file " + opt.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit(const Options& opt, const Json& j) { emit(opt, j.dump(2)); }

void require_level(int level) {
  if (level < 2) throw ConfigError("level must be at least 2, got " + std::to_string(level));
}

int precision_for(const Options& opt, int level) {
  if (opt.precision && *opt.precision < 8) {
    throw ConfigError("precision must be at least 8, got " + std::to_string(*opt.precision));
  }
  return opt.precision.value_or(default_precision(level));
}

void add_level(CLI::App* app, Options& opt) {
  app->add_option("--level,-l", opt.level, "level l")->envname("WRONSK_LEVEL")->required();
}

void add_precision(CLI::App* app, Options& opt) {
  app->add_option("--precision,-N", opt.precision, "number of q-coefficients")
      ->envname("WRONSK_PRECISION");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-four modular symbols, Eisenstein Wronskians and rank-zero spans"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--out,-o", opt.out, "write the report to FILE")->envname("WRONSK_OUT");
  app.add_option("--format", opt.format, "json or csv")->envname("WRONSK_FORMAT");

  auto* modsym = app.add_subcommand("modsym", "modular symbol spaces");
  modsym->require_subcommand(1);
  auto* dims = modsym->add_subcommand("dims", "dimensions of M4, S4 and its +/- parts");
  add_level(dims, opt);

  auto* eis = app.add_subcommand("eis", "Eisenstein series");
  eis->require_subcommand(1);
  auto* eis_dump = eis->add_subcommand("dump", "q-expansion of s_a, t_a or r_a");
  add_level(eis_dump, opt);
  add_precision(eis_dump, opt);
  eis_dump->add_option("--series", opt.series, "s, t or r")->check(CLI::IsMember({"s", "t", "r"}));
  eis_dump->add_option("--index,-a", opt.index, "residue a");

  auto* heil = app.add_subcommand("heilbronn", "Heilbronn tuples");
  heil->require_subcommand(1);
  auto* heil_dump = heil->add_subcommand("dump", "list H(n)");
  heil_dump->add_option("--n,-n", opt.n, "n")->required();

  auto* euclid = app.add_subcommand("euclid", "Euclid tuples");
  euclid->require_subcommand(1);
  auto* euclid_runs = euclid->add_subcommand("runs", "run decomposition of I(n)");
  euclid_runs->add_option("--n,-n", opt.n, "n")->required();

  auto* wspan = app.add_subcommand("wronskian-span", "span of the Wronskians W(s_a, s_b)");
  add_level(wspan, opt);
  add_precision(wspan, opt);

  auto* g0span = app.add_subcommand("gamma0-span", "span of the diamond-averaged Wronskians");
  add_level(g0span, opt);
  add_precision(g0span, opt);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("name", opt.suite_positional, "suite name or all");
  verify->add_option("--level,-l", opt.levels, "levels")->envname("WRONSK_LEVEL")->required();
  verify->add_option("--suite,-s", opt.suites, "suites")->envname("WRONSK_SUITE");
  add_precision(verify, opt);
  verify->add_option("--n-max", opt.n_max, "Hecke index bound")->envname("WRONSK_N_MAX");

  auto* theorem = app.add_subcommand("theorem-check", "compare Wronskian and rank-zero spans");
  add_level(theorem, opt);
  add_precision(theorem, opt);
  theorem->add_option("--n-max", opt.n_max, "Hecke index bound")->envname("WRONSK_N_MAX");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Format format = parse_format(opt.format);
    if (dims->parsed()) {
      require_level(opt.level);
      const ModularSymbols ms(opt.level);
      Json j = dims_json(ms);
      j["schema"] = 1;
      emit(opt, j);
    } else if (eis_dump->parsed()) {
      require_level(opt.level);
      const int N = precision_for(opt, opt.level);
      QSeries f = opt.series == "s"   ? s_series(opt.index, opt.level, N)
                  : opt.series == "t" ? t_nonconst(opt.index, opt.level, N)
                                      : r_nonconst(opt.index, opt.level, N);
      emit(opt, Json{{"schema", 1}, {"series", opt.series}, {"index", opt.index},
                     {"level", opt.level}, {"q", to_json(f)}});
    } else if (heil_dump->parsed()) {
      if (opt.n < 1) throw ConfigError("n must be positive");
      Json tuples = Json::array();
      for (const auto& t : enumerate_H(opt.n)) tuples.push_back(to_json(t));
      emit(opt, Json{{"schema", 1}, {"n", opt.n}, {"count", tuples.size()}, {"tuples", tuples}});
    } else if (euclid_runs->parsed()) {
      if (opt.n < 1) throw ConfigError("n must be positive");
      Json runs = Json::array();
      for (const auto& run : run_decomposition(opt.n)) {
        Json r = Json::array();
        for (const auto& t : run.tuples) r.push_back(to_json(t));
        runs.push_back(r);
      }
      emit(opt, Json{{"schema", 1}, {"n", opt.n}, {"runs", runs}});
    } else if (wspan->parsed() || g0span->parsed()) {
      require_level(opt.level);
      const int N = precision_for(opt, opt.level);
      const SubspaceQ s = wspan->parsed() ? wronskian_span(opt.level, N) : gamma0_span(opt.level, N);
      emit(opt, Json{{"schema", 1}, {"level", opt.level}, {"precision", N}, {"span", to_json(s)}});
    } else if (verify->parsed()) {
      RunConfig cfg;
      cfg.levels = opt.levels;
      cfg.precision = opt.precision;
      cfg.n_max = opt.n_max;
      cfg.format = format;
      cfg.suites = opt.suites;
      if (!opt.suite_positional.empty()) cfg.suites.push_back(opt.suite_positional);
      validate(cfg);
      const RunResult r = run_suite(cfg, [](const std::string& m) { std::cerr << m << '\n'; });
      emit(opt, format == Format::Json ? r.report.dump(2) : report_csv(r.report));
      return r.exit_code;
    } else if (theorem->parsed()) {
      require_level(opt.level);
      const int N = precision_for(opt, opt.level);
      if (opt.n_max && *opt.n_max < 1) throw ConfigError("n-max must be positive");
      std::cerr << "theorem-check: level " << opt.level << ", precision " << N << '\n';
      const SpanReport rep = theorem_check(opt.level, N, opt.n_max);
      if (format == Format::Json) {
        emit(opt, to_json(rep));
      } else {
        emit(opt, span_report_csv_header() + "\n" + span_report_csv_row(rep));
      }
      switch (rep.verdict) {
        case Verdict::Match: return 0;
        case Verdict::Mismatch: return 2;
        case Verdict::Indeterminate: return 3;
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
