#pragma once

// JSON/CSV rendering of the library objects and the verification suites
// driven by the command-line tool.

#include "wronsk/heilbronn.hpp"
#include "wronsk/modsym.hpp"
#include "wronsk/qseries.hpp"
#include "wronsk/rankzero.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wronsk {

using Json = nlohmann::json;  // std::map objects, so keys serialize sorted

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Rational& x);
Json to_json(const VectorQ& v);
Json to_json(const QSeries& f);
Json to_json(const SubspaceQ& s);  // {"dim", "ambient_dim", "basis": [[row, col, "n/d"], ...]}
Json to_json(const SymbolVector& w);  // [["xy", u, v, "n/d"], ...]
Json to_json(const HeilbronnTuple& t);
Json to_json(const EuclidTuple& t);
Json to_json(const SpanReport& r);

Json dims_json(const ModularSymbols& ms);

std::string span_report_csv_header();
std::string span_report_csv_row(const SpanReport& r);

enum class Format { Json, Csv };

Format parse_format(const std::string& s);  // throws ConfigError

/// Suites in the order they run.
const std::vector<std::string>& suite_names();

struct RunConfig {
  std::vector<int> levels;
  std::optional<int> precision;
  std::optional<int> n_max;
  Format format = Format::Json;
  std::vector<std::string> suites;  // empty or {"all"} selects every suite
};

/// Throws ConfigError for levels < 2, precision < 8, n_max < 1 or unknown suites.
void validate(const RunConfig& config);

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 all pass, 2 some suite failed
};

using Progress = std::function<void(const std::string&)>;

/// Runs the selected suites for each level. A failing or throwing suite is
/// recorded and the rest still run.
RunResult run_suite(const RunConfig& config, const Progress& progress = {});

/// Flattens a verify report to "level,suite,pass" lines.
std::string report_csv(const Json& report);

}  // namespace wronsk
