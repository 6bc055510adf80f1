#pragma once

// Verification reports: a JSON document per scenario run and an optional
// CSV of grid samples.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gbessel/bessel.hpp"
#include "gbessel/config.hpp"
#include "gbessel/subordination.hpp"
#include "gbessel/sweep.hpp"
#include "json.hpp"

namespace gbessel {

inline constexpr const char* kToolName = "gbessel";
inline constexpr const char* kToolVersion = "1.0.0";

/// pass, fail and indeterminate are verdicts. unmet marks a theorem premise
/// that does not hold; the conclusions of that theorem become vacuous.
/// expected-fail is a failure listed in the config's expected_fail.
enum class CheckStatus { Pass, Fail, Indeterminate, Unmet, Vacuous, ExpectedFail };

const char* to_string(CheckStatus s);

/// Does not count against the overall verdict.
bool is_passing(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  nlohmann::json detail = nlohmann::json::object();
};

/// Rounds to 15 significant digits, the precision of all reported numbers.
double round15(double x);
nlohmann::json to_json(Complex z);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const SubordinationVerdict& v);
nlohmann::json to_json(const LadderVerdict& v);

/// Status of a ladder verdict used as a conclusion: pass when stably holds,
/// fail when stably fails, indeterminate otherwise.
CheckStatus status_of(const LadderVerdict& v);

struct VerificationReport {
  std::string scenario;
  nlohmann::json config;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  /// Wall-clock seconds. Left out of the JSON unless set, since it would
  /// break byte-identical reports.
  std::optional<double> runtime_seconds;

  Check& add(std::string name, CheckStatus status, nlohmann::json detail);
  Check& add(std::string name, bool passed, nlohmann::json detail);
  const Check* find(const std::string& name) const;

  /// Relabels failed checks named in `names` as expected-fail. Throws
  /// ConfigError for a name that matches no check.
  void apply_expected_fail(const std::vector<std::string>& names);

  /// fail if any check fails, else indeterminate if any is indeterminate,
  /// else pass.
  CheckStatus overall() const;
  bool passed() const { return overall() == CheckStatus::Pass; }

  nlohmann::json to_json() const;
  /// Two-space indented JSON with a trailing newline.
  std::string dump() const;
};

/// Writes "re_z,im_z,value" rows with 15 significant digits.
void write_csv(std::ostream& out, const std::vector<GridSample>& samples);

/// 15 significant digits, trailing zeros kept.
std::string format15(double x);

}  // namespace gbessel
