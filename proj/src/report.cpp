#include "gbessel/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gbessel/error.hpp"

namespace gbessel {

using nlohmann::json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Indeterminate:
      return "indeterminate";
    case CheckStatus::Unmet:
      return "unmet";
    case CheckStatus::Vacuous:
      return "vacuous";
    case CheckStatus::ExpectedFail:
      return "expected-fail";
  }
  return "?";
}

bool is_passing(CheckStatus s) {
  return s == CheckStatus::Pass || s == CheckStatus::Unmet || s == CheckStatus::Vacuous ||
         s == CheckStatus::ExpectedFail;
}

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.15g", x == 0.0 ? 0.0 : x);
  return buf;
}

json to_json(Complex z) { return json::array({round15(z.real()), round15(z.imag())}); }

json to_json(const ConditionReport& r) {
  return {{"functional", r.functional_name},
          {"value", round15(r.value)},
          {"threshold", round15(r.threshold)},
          {"bound", r.bound == Bound::Lower ? "value > threshold" : "value <= threshold"},
          {"passed", r.passed},
          {"arg", to_json(r.arg)}};
}

json to_json(const SubordinationVerdict& v) {
  return {{"status", to_string(v.status)},
          {"margin", round15(v.margin)},
          {"witness", to_json(v.witness)}};
}

json to_json(const LadderVerdict& v) {
  json rungs = json::array();
  for (std::size_t i = 0; i < v.rungs.size(); ++i) {
    json r = to_json(v.rungs[i]);
    r["rho"] = round15(v.rhos[i]);
    r["rho_outer"] = round15(outer_radius(v.rhos[i]));
    rungs.push_back(std::move(r));
  }
  return {{"rungs", std::move(rungs)}, {"stable", v.stable}, {"verdict", to_string(v.status)}};
}

CheckStatus status_of(const LadderVerdict& v) {
  switch (v.status) {
    case VerdictStatus::Holds:
      return CheckStatus::Pass;
    case VerdictStatus::Fails:
      return CheckStatus::Fail;
    case VerdictStatus::Indeterminate:
      return CheckStatus::Indeterminate;
  }
  return CheckStatus::Indeterminate;
}

Check& VerificationReport::add(std::string name, CheckStatus status, json detail) {
  checks.push_back(Check{std::move(name), status, std::move(detail)});
  return checks.back();
}

Check& VerificationReport::add(std::string name, bool passed, json detail) {
  return add(std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::apply_expected_fail(const std::vector<std::string>& names) {
  for (const auto& name : names) {
    bool found = false;
    for (auto& c : checks) {
      if (c.name != name) continue;
      found = true;
      if (c.status == CheckStatus::Fail) c.status = CheckStatus::ExpectedFail;
    }
    if (!found) throw ConfigError("expected_fail names unknown check '" + name + "'");
  }
}

CheckStatus VerificationReport::overall() const {
  bool indeterminate = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Indeterminate) indeterminate = true;
  }
  return indeterminate ? CheckStatus::Indeterminate : CheckStatus::Pass;
}

json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json entry = {{"name", c.name}, {"status", to_string(c.status)}};
    for (const auto& [k, v] : c.detail.items()) entry[k] = v;
    list.push_back(std::move(entry));
  }
  json out = {{"tool", kToolName},
              {"version", kToolVersion},
              {"scenario", scenario},
              {"config", config},
              {"checks", std::move(list)},
              {"overall", to_string(overall())}};
  if (!notes.empty()) out["notes"] = notes;
  if (runtime_seconds) out["runtime_seconds"] = round15(*runtime_seconds);
  return out;
}

std::string VerificationReport::dump() const { return to_json().dump(2) + "\n"; }

void write_csv(std::ostream& out, const std::vector<GridSample>& samples) {
  out << "re_z,im_z,value\n";
  for (const auto& s : samples)
    out << format15(s.z.real()) << ',' << format15(s.z.imag()) << ',' << format15(s.value)
        << '\n';
}

}  // namespace gbessel
