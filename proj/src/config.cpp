#include "gbessel/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "gbessel/error.hpp"

namespace gbessel {

namespace {

using nlohmann::json;

const std::set<std::string> kCommonKeys{"order", "angles", "radii", "rho_ladder", "seed"};

std::set<std::string> scenario_keys(Scenario s) {
  std::set<std::string> keys = kCommonKeys;
  auto add = [&](std::initializer_list<const char*> more) {
    for (const char* k : more) keys.insert(k);
  };
  switch (s) {
    case Scenario::Theorem1:
      add({"lambda", "p", "b", "c", "f", "g", "t_samples", "s_samples"});
      break;
    case Scenario::CorollaryLambda0:
      add({"p", "b", "c", "f", "g", "t_samples", "s_samples"});
      break;
    case Scenario::TrigChain:
      add({"a_values"});
      break;
    case Scenario::LiberaSandwich:
      add({"mu", "p", "b", "c", "g1", "f", "g2", "t_samples"});
      break;
    case Scenario::IdentitySuite:
      add({"cases"});
      break;
    case Scenario::ConditionSweep:
      add({"cases", "s_samples"});
      break;
  }
  return keys;
}

double as_number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("parameter '" + key + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError("parameter '" + key + "' must be finite");
  return v;
}

Complex as_complex(const json& j, const std::string& key) {
  if (j.is_number()) return {as_number(j, key), 0.0};
  if (j.is_array() && j.size() == 2)
    return {as_number(j[0], key + "[0]"), as_number(j[1], key + "[1]")};
  throw ConfigError("parameter '" + key + "' must be a number or an [re, im] pair");
}

std::size_t as_count(const json& j, const std::string& key) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw ConfigError("parameter '" + key + "' must be an integer");
  const auto v = j.get<long long>();
  if (v < 0) throw ConfigError("parameter '" + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<double> as_number_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw ConfigError("parameter '" + key + "' must be a list of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(as_number(x, key));
  return out;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size() || !std::isfinite(v)) throw ConfigError("not a number: '" + text + "'");
  return v;
}

void require_increasing_unit(const std::vector<double>& v, const std::string& key,
                             std::size_t min_size) {
  if (v.size() < min_size)
    throw ConfigError("'" + key + "' needs at least " + std::to_string(min_size) + " entries");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0 && v[i] < 1.0)) throw ConfigError("'" + key + "' entries must lie in (0, 1)");
    if (i > 0 && !(v[i] > v[i - 1]))
      throw ConfigError("'" + key + "' must be strictly increasing");
  }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::Theorem1:
      return "theorem1";
    case Scenario::CorollaryLambda0:
      return "corollary_lambda0";
    case Scenario::TrigChain:
      return "trig_chain";
    case Scenario::LiberaSandwich:
      return "libera_sandwich";
    case Scenario::IdentitySuite:
      return "identity_suite";
    case Scenario::ConditionSweep:
      return "condition_sweep";
  }
  return "?";
}

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> all{Scenario::Theorem1,       Scenario::CorollaryLambda0,
                                         Scenario::TrigChain,      Scenario::LiberaSandwich,
                                         Scenario::IdentitySuite,  Scenario::ConditionSweep};
  return all;
}

Scenario scenario_from_string(const std::string& name) {
  for (Scenario s : all_scenarios())
    if (name == to_string(s)) return s;
  throw ConfigError("unknown scenario '" + name + "'");
}

FunctionSpec FunctionSpec::parse(const json& j) {
  FunctionSpec spec;
  spec.source = j;
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    static const std::regex quadratic(
        R"(^\s*quadratic\(\s*([^,()]+?)\s*(?:,\s*([^,()]+?)\s*)?\)\s*$)");
    std::smatch m;
    if (text == "koebe") {
      // z/(1-z); truncated to the working order when materialized
      spec.coeffs = {0.0, 1.0};
    } else if (std::regex_match(text, m, quadratic)) {
      const double re = parse_real(m[1].str());
      const double im = m[2].matched ? parse_real(m[2].str()) : 0.0;
      spec.coeffs = {0.0, 1.0, Complex{re, im}};
    } else {
      throw ConfigError("unknown function preset '" + text + "'");
    }
  } else if (j.is_array()) {
    for (std::size_t n = 0; n < j.size(); ++n)
      spec.coeffs.push_back(as_complex(j[n], "coefficient " + std::to_string(n)));
    if (spec.coeffs.size() < 2 || spec.coeffs[0] != Complex{} ||
        spec.coeffs[1] != Complex{1.0, 0.0})
      throw ConfigError("coefficient list must start 0, 1 (class A normalization)");
  } else {
    throw ConfigError("a function must be a preset name or a coefficient list");
  }
  return spec;
}

PowerSeries FunctionSpec::series(std::size_t order) const {
  if (source.is_string() && source.get<std::string>() == "koebe")
    return PowerSeries::koebe(order);
  if (coeffs.size() > order)
    throw ConfigError("function has " + std::to_string(coeffs.size()) +
                      " coefficients, more than order " + std::to_string(order));
  return PowerSeries(coeffs).resized(order);
}

ScenarioConfig ScenarioConfig::defaults(Scenario s) {
  ScenarioConfig cfg;
  cfg.scenario = s;
  switch (s) {
    case Scenario::Theorem1:
      cfg.lambda = 0.5;
      cfg.f = FunctionSpec::parse("quadratic(0.2)");
      cfg.g = FunctionSpec::parse("quadratic(0.4)");
      break;
    case Scenario::CorollaryLambda0:
      cfg.f = FunctionSpec::parse("quadratic(0.2)");
      cfg.g = FunctionSpec::parse("quadratic(0.45)");
      break;
    case Scenario::LiberaSandwich:
      cfg.g1 = FunctionSpec::parse("quadratic(0.1)");
      cfg.f = FunctionSpec::parse("quadratic(0.2)");
      cfg.g2 = FunctionSpec::parse("quadratic(0.4)");
      break;
    case Scenario::ConditionSweep:
      cfg.cases = 10000;
      break;
    case Scenario::TrigChain:
    case Scenario::IdentitySuite:
      break;
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  static const std::set<std::string> top{"scenario", "parameters", "expected_fail",
                                         "output_path"};
  for (const auto& [key, value] : j.items())
    if (!top.count(key)) throw ConfigError("unknown top-level key '" + key + "'");
  if (!j.contains("scenario") || !j["scenario"].is_string())
    throw ConfigError("'scenario' is required and must be a string");

  ScenarioConfig cfg = defaults(scenario_from_string(j["scenario"].get<std::string>()));

  if (j.contains("parameters")) {
    const json& params = j["parameters"];
    if (!params.is_object()) throw ConfigError("'parameters' must be an object");
    const auto allowed = scenario_keys(cfg.scenario);
    for (const auto& [key, v] : params.items()) {
      if (!allowed.count(key))
        throw ConfigError("unknown parameter '" + key + "' for scenario " +
                          to_string(cfg.scenario));
      if (key == "lambda") cfg.lambda = as_number(v, key);
      else if (key == "p") cfg.p = as_number(v, key);
      else if (key == "b") cfg.b = as_number(v, key);
      else if (key == "c") cfg.c = as_complex(v, key);
      else if (key == "mu") cfg.mu = as_number(v, key);
      else if (key == "f") cfg.f = FunctionSpec::parse(v);
      else if (key == "g") cfg.g = FunctionSpec::parse(v);
      else if (key == "g1") cfg.g1 = FunctionSpec::parse(v);
      else if (key == "g2") cfg.g2 = FunctionSpec::parse(v);
      else if (key == "order") cfg.order = as_count(v, key);
      else if (key == "angles") cfg.angles = as_count(v, key);
      else if (key == "radii") cfg.radii = as_number_list(v, key);
      else if (key == "rho_ladder") cfg.rho_ladder = as_number_list(v, key);
      else if (key == "seed") cfg.seed = as_count(v, key);
      else if (key == "a_values") cfg.a_values = as_number_list(v, key);
      else if (key == "t_samples") cfg.t_samples = as_number_list(v, key);
      else if (key == "cases") cfg.cases = as_count(v, key);
      else if (key == "s_samples") cfg.s_samples = as_count(v, key);
    }
  }

  if (j.contains("expected_fail")) {
    const json& xf = j["expected_fail"];
    if (!xf.is_array()) throw ConfigError("'expected_fail' must be a list of check names");
    for (const auto& name : xf) {
      if (!name.is_string()) throw ConfigError("'expected_fail' entries must be strings");
      cfg.expected_fail.push_back(name.get<std::string>());
    }
  }
  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) throw ConfigError("'output_path' must be a string");
    cfg.output_path = j["output_path"].get<std::string>();
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON in '") + path + "': " + e.what());
  }
  return from_json(j);
}

void ScenarioConfig::validate() const {
  if (order < 4 || order > 4096) throw ConfigError("'order' must lie in [4, 4096]");
  if (angles < 256 || angles > 65536) throw ConfigError("'angles' must lie in [256, 65536]");
  require_increasing_unit(radii, "radii", 1);
  require_increasing_unit(rho_ladder, "rho_ladder", 2);
  if (cases < 1) throw ConfigError("'cases' must be at least 1");
  if (s_samples < 2) throw ConfigError("'s_samples' must be at least 2");
  for (double t : t_samples)
    if (!(t >= 0.0)) throw ConfigError("'t_samples' must be non-negative");
  if (t_samples.empty()) throw ConfigError("'t_samples' must not be empty");
  for (double a : a_values)
    if (!(a > 0.0 && a < 0.5)) throw ConfigError("'a_values' entries must lie in (0, 1/2)");
  if (a_values.empty()) throw ConfigError("'a_values' must not be empty");

  const double kappa = p + (b + 1.0) / 2.0;
  switch (scenario) {
    case Scenario::Theorem1:
    case Scenario::CorollaryLambda0:
      if (!(lambda >= 0.0 && lambda < 1.0)) throw ConfigError("'lambda' must lie in [0, 1)");
      [[fallthrough]];
    case Scenario::LiberaSandwich:
      if (!(kappa > -1.0))
        throw ConfigError("kappa = p + (b+1)/2 must exceed -1, got " + std::to_string(kappa));
      if (c == Complex{}) throw ConfigError("'c' must be non-zero");
      break;
    default:
      break;
  }
  if (scenario == Scenario::LiberaSandwich) {
    if (!(mu > -1.0)) throw ConfigError("'mu' must exceed -1");
    if (kappa == 0.0) throw ConfigError("kappa = 0 makes B_kappa undefined");
  }
  for (const auto* spec : {&f, &g, &g1, &g2})
    if (*spec && (*spec)->coeffs.size() > order)
      throw ConfigError("a function has more coefficients than 'order'");
}

json ScenarioConfig::to_json() const {
  json params = json::object();
  const auto keys = scenario_keys(scenario);
  auto put = [&](const char* key, json value) {
    if (keys.count(key)) params[key] = std::move(value);
  };
  put("lambda", lambda);
  put("p", p);
  put("b", b);
  put("c", complex_json(c));
  put("mu", mu);
  if (f) put("f", f->source);
  if (g) put("g", g->source);
  if (g1) put("g1", g1->source);
  if (g2) put("g2", g2->source);
  put("order", order);
  put("angles", angles);
  put("radii", radii);
  put("rho_ladder", rho_ladder);
  put("seed", seed);
  put("a_values", a_values);
  put("t_samples", t_samples);
  put("cases", cases);
  put("s_samples", s_samples);

  json out = json::object();
  out["scenario"] = to_string(scenario);
  out["parameters"] = std::move(params);
  out["expected_fail"] = expected_fail;
  out["output_path"] = output_path;
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

}  // namespace gbessel
