// gbessel: verification harness for subordination results on generalized
// Bessel operators.
//
//   gbessel verify <config.json> [--json-out PATH] [--csv-out PATH]
//   gbessel suite --all --out <dir>
//   gbessel eval --preset <name> --z <re> <im>
//
// Exit status: 0 overall pass, 1 fail or indeterminate, 2 configuration
// error, 3 numeric guard.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "gbessel/bessel.hpp"
#include "gbessel/config.hpp"
#include "gbessel/error.hpp"
#include "gbessel/report.hpp"
#include "gbessel/scenarios.hpp"
#include "gbessel/sweep.hpp"

namespace {

using namespace gbessel;
namespace fs = std::filesystem;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;

struct Overrides {
  std::optional<std::size_t> order;
  std::optional<std::string> rho_ladder;
  std::optional<std::size_t> angles;
  std::optional<std::uint64_t> seed;

  void apply(ScenarioConfig& cfg) const {
    if (order) cfg.order = *order;
    if (rho_ladder) cfg.rho_ladder = parse_number_list(*rho_ladder);
    if (angles) cfg.angles = *angles;
    if (seed) cfg.seed = *seed;
    cfg.validate();
  }
};

void add_common_flags(CLI::App* cmd, Overrides& o, unsigned& threads) {
  cmd->add_option("--order", o.order, "series truncation order N");
  cmd->add_option("--rho-ladder", o.rho_ladder, "comma-separated radii, e.g. 0.9,0.99");
  cmd->add_option("--angles", o.angles, "angles per circle");
  cmd->add_option("--seed", o.seed, "seed for randomized checks");
  cmd->add_option("--threads", threads, "worker threads for grid sweeps")
      ->check(CLI::Range(1u, 256u));
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

void write_samples(const fs::path& path, const ScenarioConfig& cfg) {
  std::ostringstream csv;
  write_csv(csv, scenario_samples(cfg));
  write_file(path, csv.str());
}

VerificationReport timed_run(const ScenarioConfig& cfg, bool embed_timing) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep = run_scenario(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "%-18s %-13s %s s\n", rep.scenario.c_str(), to_string(rep.overall()),
               format15(secs).c_str());
  if (embed_timing) rep.runtime_seconds = secs;
  return rep;
}

int cmd_verify(const std::string& config_path, const Overrides& o, const std::string& json_out,
               const std::string& csv_out, bool timing) {
  ScenarioConfig cfg = ScenarioConfig::from_file(config_path);
  o.apply(cfg);
  const VerificationReport rep = timed_run(cfg, timing);
  const std::string target = !json_out.empty() ? json_out : cfg.output_path;
  if (target.empty())
    std::cout << rep.dump();
  else
    write_file(target, rep.dump());
  if (!csv_out.empty()) write_samples(csv_out, cfg);
  return rep.passed() ? 0 : kExitFail;
}

int cmd_suite(const std::string& out_dir, const Overrides& o, const std::string& csv_dir,
              bool timing) {
  bool all_pass = true;
  for (Scenario s : all_scenarios()) {
    ScenarioConfig cfg = ScenarioConfig::defaults(s);
    o.apply(cfg);
    const VerificationReport rep = timed_run(cfg, timing);
    all_pass = all_pass && rep.passed();
    write_file(fs::path(out_dir) / (std::string(to_string(s)) + ".json"), rep.dump());
    if (!csv_dir.empty())
      write_samples(fs::path(csv_dir) / (std::string(to_string(s)) + ".csv"), cfg);
  }
  return all_pass ? 0 : kExitFail;
}

void print_complex(const char* label, Complex z) {
  std::printf("%s %s %s\n", label, format15(z.real()).c_str(), format15(z.imag()).c_str());
}

int cmd_eval(const std::string& preset, const std::vector<double>& zs, std::size_t order) {
  const Complex z{zs.at(0), zs.at(1)};
  std::printf("preset %s\n", preset.c_str());
  print_complex("z", z);
  for (ClosedFormTag tag : {ClosedFormTag::CosSqrt, ClosedFormTag::SincSqrt,
                            ClosedFormTag::ThreeHalvesTrig}) {
    if (preset != to_string(tag)) continue;
    print_complex("series", evaluate(u_series(closed_form_parameters(tag), order), z));
    print_complex("closed_form", closed_form_eval(tag, z));
    return 0;
  }
  const FunctionSpec spec = FunctionSpec::parse(preset);
  print_complex("series", evaluate(spec.series(order), z));
  if (preset == "koebe") {
    if (z == Complex{1.0, 0.0}) throw DomainError("koebe has a pole at z = 1");
    print_complex("closed_form", z / (1.0 - z));
  } else {
    print_complex("closed_form", z + spec.coeffs[2] * z * z);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of subordination results for generalized Bessel operators"};
  app.require_subcommand(1);

  Overrides overrides;
  unsigned threads = 1;
  std::string json_out, csv_out, config_path, out_dir;
  bool all = false, timing = false;

  auto* verify = app.add_subcommand("verify", "run one scenario configuration");
  verify->add_option("config", config_path, "scenario configuration (JSON)")->required();
  add_common_flags(verify, overrides, threads);
  verify->add_option("--json-out", json_out, "report path (default: config output_path, else stdout)");
  verify->add_option("--csv-out", csv_out, "CSV of grid samples");
  verify->add_flag("--timing", timing, "embed runtime in the report");

  auto* suite = app.add_subcommand("suite", "run every scenario with defaults");
  suite->add_flag("--all", all, "run all scenarios")->required();
  suite->add_option("--out", out_dir, "directory for <scenario>.json reports")->required();
  add_common_flags(suite, overrides, threads);
  suite->add_option("--csv-out", csv_out, "directory for <scenario>.csv samples");
  suite->add_flag("--timing", timing, "embed runtime in the reports");

  std::string preset;
  std::vector<double> z;
  std::size_t eval_order = kDefaultOrder;
  auto* eval = app.add_subcommand("eval", "evaluate a preset at one point");
  eval->add_option("--preset", preset,
                   "cos_sqrt, sinc_sqrt, three_halves_trig, koebe or quadratic(a)")
      ->required();
  eval->add_option("--z", z, "real and imaginary part")->expected(2)->required()
      ->allow_extra_args(false);
  eval->add_option("--order", eval_order, "series truncation order N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    set_sweep_threads(threads);
    if (*verify) return cmd_verify(config_path, overrides, json_out, csv_out, timing);
    if (*suite) return cmd_suite(out_dir, overrides, csv_out, timing);
    return cmd_eval(preset, z, eval_order);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitConfig;
  } catch (const NumericGuard& e) {
    std::fprintf(stderr, "numeric guard: %s\n", e.what());
    return kExitGuard;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
}
