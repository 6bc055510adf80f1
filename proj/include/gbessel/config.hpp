#pragma once

// Scenario configuration: a JSON document
//
//   { "scenario": "theorem1",
//     "parameters": { "lambda": 0.5, "c": [1, 0], "g": "quadratic(0.4)", ... },
//     "expected_fail": ["conclusion"],
//     "output_path": "report.json" }
//
// Complex numbers are [re, im] pairs or plain numbers. Functions in class A
// are named presets ("koebe", "quadratic(a)", "quadratic(re, im)") or
// coefficient lists starting at z^0. Every scenario has its own set of
// accepted parameters; anything else is a ConfigError.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbessel/series.hpp"
#include "json.hpp"

namespace gbessel {

enum class Scenario {
  Theorem1,
  CorollaryLambda0,
  TrigChain,
  LiberaSandwich,
  IdentitySuite,
  ConditionSweep
};

const char* to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);
const std::vector<Scenario>& all_scenarios();

/// A function given by preset name or coefficient list.
struct FunctionSpec {
  /// Echoed verbatim in reports.
  nlohmann::json source;
  /// Coefficients as parsed, before padding to the working order.
  std::vector<Complex> coeffs;

  static FunctionSpec parse(const nlohmann::json& j);
  PowerSeries series(std::size_t order) const;
};

/// Fully resolved configuration: every field has a value after parsing.
struct ScenarioConfig {
  Scenario scenario = Scenario::Theorem1;

  // operator parameters
  double lambda = 0.0;
  double p = 0.0;
  double b = 0.0;
  Complex c{1.0, 0.0};
  double mu = 1.0;

  // functions (theorem1, corollary_lambda0: f, g; libera_sandwich: g1, f, g2)
  std::optional<FunctionSpec> f, g, g1, g2;

  // numerics
  std::size_t order = kDefaultOrder;
  std::size_t angles = 512;
  std::vector<double> radii{0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 0.9999};
  std::vector<double> rho_ladder{0.9, 0.99, 0.999, 0.9999};
  std::uint64_t seed = 1;

  // scenario specific
  std::vector<double> a_values{0.1, 0.3, 0.49};
  std::vector<double> t_samples{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0};
  std::size_t cases = 100;
  std::size_t s_samples = 10000;

  std::vector<std::string> expected_fail;
  std::string output_path;

  /// Defaults for a scenario (what `suite --all` runs).
  static ScenarioConfig defaults(Scenario s);

  /// Parses and validates a configuration document. Throws ConfigError.
  static ScenarioConfig from_json(const nlohmann::json& j);
  static ScenarioConfig from_file(const std::string& path);

  /// Checks every value against the module invariants. Throws ConfigError.
  void validate() const;

  /// The resolved configuration in the input format.
  nlohmann::json to_json() const;

  EvaluationGrid grid() const { return EvaluationGrid(radii, angles); }
};

/// Parses "0.9,0.99,0.999" into a list. Throws ConfigError.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace gbessel
