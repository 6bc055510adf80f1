// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "gbessel/bessel.hpp"
#include "gbessel/operators.hpp"
#include "gbessel/report.hpp"
#include "gbessel/scenarios.hpp"
#include "gbessel/subordination.hpp"
#include "gbessel/sweep.hpp"

using namespace gbessel;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  if (!ok) ++failures;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Complex unit_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

PowerSeries random_normalized(std::mt19937_64& rng, std::size_t order) {
  std::vector<Complex> c(order);
  c[1] = 1.0;
  for (std::size_t n = 2; n < order; ++n) c[n] = unit_box(rng);
  return PowerSeries(std::move(c));
}

double open_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  for (;;) {
    const double x = d(rng);
    if (x > lo && x < hi) return x;
  }
}

PowerSeries linear(Complex c0, Complex c1) {
  std::vector<Complex> c(8);
  c[0] = c0;
  c[1] = c1;
  return PowerSeries(std::move(c));
}

void criterion1() {
  std::mt19937_64 rng(1);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double kappa = open_uniform(rng, -1.0, 5.0);
    Complex c;
    do c = unit_box(rng);
    while (c == Complex{});
    worst = std::max(worst, recurrence_residual(BesselParameters(kappa - 1.0, 1.0, c),
                                                random_normalized(rng, 64)));
  }
  const double secs = seconds_since(t0);
  report(1, worst < 1e-12 && secs < 1.0,
         "recurrence identity: max residual " + sci(worst) + " over 100 cases in " +
             sci(secs) + " s");
}

void criterion2() {
  const EvaluationGrid grid({0.25, 0.5, 0.75, 0.99}, 512);
  double worst = 0.0;
  for (ClosedFormTag tag :
       {ClosedFormTag::CosSqrt, ClosedFormTag::SincSqrt, ClosedFormTag::ThreeHalvesTrig}) {
    const PowerSeries u = u_series(closed_form_parameters(tag), 64);
    worst = std::max(worst, sweep_grid(grid,
                                       [&](Complex z) {
                                         return std::abs(evaluate(u, z) -
                                                         closed_form_eval(tag, z));
                                       },
                                       Extremum::Max)
                                .value);
  }
  report(2, worst < 1e-10, "closed forms: sup |u_series - closed form| = " + sci(worst));
}

void criterion3() {
  const EvaluationGrid u_grid({0.1, 0.25, 0.5, 0.75, 0.9, 0.99}, 512);
  double u_worst = 0.0;
  for (const BesselParameters& p :
       {BesselParameters(0.5, 1.0, 1.0), BesselParameters(0.0, 1.0, 1.0),
        BesselParameters(-0.5, 1.0, 1.0), BesselParameters(0.0, 1.0, 2.0),
        BesselParameters(1.5, 1.0, -1.0), BesselParameters(0.25, 2.0, Complex{0.5, 0.5})})
    u_worst = std::max(u_worst, ode_residual_u(p, u_series(p, 64), u_grid));
  const EvaluationGrid w_grid({0.1, 0.25, 0.5, 0.75, 0.9}, 511);
  double w_worst = 0.0;
  for (const BesselParameters& p : {BesselParameters(0.5, 1.0, 1.0), BesselParameters(0.0, 1.0, 1.0)})
    w_worst = std::max(w_worst, ode_residual_w(p, w_grid, 64));
  report(3, u_worst < 1e-10 && w_worst < 1e-5,
         "ODE residuals: u-equation " + sci(u_worst) + " (radii <= 0.99), w-equation " +
             sci(w_worst));
}

void criterion4() {
  const double gmax = (2.0 - std::sqrt(2.0)) / 4.0;
  const double origin = std::abs(gamma_lambda_kappa(0.0, 0.0) - gmax);
  std::mt19937_64 rng(4);
  double agree = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double k = open_uniform(rng, -1.0, 10.0);
    agree = std::max(agree, std::abs(gamma_lambda_kappa(0.0, k) - gamma_lambda0_direct(k)));
  }
  bool bounded = true;
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) {
      const double g = gamma_lambda_kappa(i / 200.0, -1.0 + 2.0 * (j + 1) / 200.0);
      bounded = bounded && g > 0.0 && g <= gmax + 1e-15;
    }
  report(4, origin < 1e-14 && agree < 1e-14 && bounded,
         "gamma constants: |gamma(0,0) - (2-sqrt2)/4| = " + sci(origin) +
             ", lambda=0 agreement " + sci(agree) + ", 200x200 bound " +
             (bounded ? "holds" : "violated"));
}

void criterion5() {
  std::vector<double> s(10000);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = -50.0 + 100.0 * i / (s.size() - 1);
  double sup = -INFINITY;
  for (double lambda : {0.0, 0.5, 0.9})
    for (double kappa : {-0.5, 0.5, 3.0})
      sup = std::max(sup, admissibility_check(lambda, kappa, s).value);
  std::mt19937_64 rng(5);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const double lambda = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (!key_inequality_check(lambda, open_uniform(rng, -1.0, 20.0))) ++violations;
  }
  report(5, sup <= 0.0 && violations == 0,
         "admissibility: sup Re xi = " + sci(sup) + "; key inequality violations " +
             std::to_string(violations) + " / 10000");
}

void criterion6() {
  const VerificationReport rep = run_scenario(ScenarioConfig::defaults(Scenario::TrigChain));
  const double expected[] = {std::cosh(1.0) - 1.0, std::sinh(1.0) - 1.0,
                             3.0 / std::exp(1.0) - 1.0};
  double S[3], worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    S[i] = rep.find("supremum_S" + std::to_string(i))->detail["extrapolated"].get<double>();
    worst = std::max(worst, std::abs(S[i] - expected[i]));
  }
  const bool ordered = S[0] > S[1] && S[1] > S[2];
  const bool table = rep.find("bound_table")->detail["rows"].size() == 6;
  report(6, worst < 1e-6 && ordered && table,
         "trig chain: S = (" + sci(S[0]) + ", " + sci(S[1]) + ", " + sci(S[2]) +
             "), max error " + sci(worst) + ", ordering " + (ordered ? "strict" : "broken") +
             ", bound table " + (table ? "reported" : "missing"));
}

void criterion7() {
  const PowerSeries id = linear(0.0, 1.0);
  const bool half = check_subordination(linear(0.0, 0.5), id, 0.99, 0.995, 512).holds;
  const bool twice =
      check_subordination(linear(0.0, 2.0), id, 0.99, 0.995, 512).status == VerdictStatus::Fails;
  const bool square = check_subordination(PowerSeries{0.0, 0.0, 1.0}, id, 0.99, 0.995, 512).holds;

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(0.05, 0.95), angle(0.0, 2.0 * std::numbers::pi);
  const EvaluationGrid rim({0.9999}, 4096);
  double worst = 0.0;
  bool statuses = true;
  for (int n = 0; n < 20;) {
    const double beta = mag(rng), radius = mag(rng);
    if (std::abs(beta - radius) < 0.01) continue;
    const PowerSeries g = linear(1.0, std::polar(beta, angle(rng)));
    const auto disk = check_disk_subordination(g, radius, rim);
    const auto general = check_subordination(g, linear(1.0, radius), 0.9999, 1.0 - 1e-9, 4096);
    worst = std::max(worst, std::abs(disk.margin - general.margin));
    statuses = statuses && disk.status == general.status;
    ++n;
  }
  report(7, half && twice && square && statuses && worst < 1e-6,
         std::string("subordination oracle: z/2<z ") + (half ? "holds" : "FAILS") + ", 2z<z " +
             (twice ? "fails" : "HOLDS") + ", z^2<z " + (square ? "holds" : "FAILS") +
             "; disk vs general max margin gap " + sci(worst));
}

void criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> order(3, 24);
  std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, 2.0 * std::numbers::pi);
  double quad = 0.0;
  for (int i = 0; i < 100; ++i) {
    const LiberaSpec spec(open_uniform(rng, -0.95, 6.0));
    const PowerSeries f = random_normalized(rng, order(rng));
    const Complex z = std::polar(rad(rng), ang(rng));
    quad = std::max(quad, std::abs(libera_quadrature_oracle(spec, f, z) -
                                   evaluate(libera_transform(spec, f), z)));
  }
  double rec = 0.0;
  for (int i = 0; i < 100; ++i) {
    const LiberaSpec spec(open_uniform(rng, -0.9, 5.0));
    Complex c;
    do c = unit_box(rng);
    while (std::abs(c) < 1e-3);
    const BesselParameters params(open_uniform(rng, 0.1, 4.0) - 1.0, 1.0, c);
    rec = std::max(rec, libera_recurrence_residual(spec, params, random_normalized(rng, 64)));
  }
  report(8, quad < 1e-8 && rec < 1e-12,
         "Libera operator: transform vs quadrature " + sci(quad) + ", recurrence residual " +
             sci(rec));
}

bool stable_pass(const VerificationReport& rep, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const Check* c = rep.find(n);
    if (!c || c->status != CheckStatus::Pass || c->detail["stable"] != true) return false;
  }
  return true;
}

void criteria9and10() {
  set_sweep_threads(1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto one = run_suite([](ScenarioConfig& c) { c.seed = 7; });
  const double secs = seconds_since(t0);
  set_sweep_threads(4);
  const auto four = run_suite([](ScenarioConfig& c) { c.seed = 7; });
  set_sweep_threads(1);

  const VerificationReport* t1 = nullptr;
  const VerificationReport* lib = nullptr;
  for (const auto& [s, rep] : one) {
    if (s == Scenario::Theorem1) t1 = &rep;
    if (s == Scenario::LiberaSandwich) lib = &rep;
  }
  const bool t1_ok = t1 && t1->passed() && stable_pass(*t1, {"premise", "conclusion"});
  const bool lib_ok = lib && lib->passed() &&
                      stable_pass(*lib, {"premise_lower", "premise_upper", "conclusion_lower",
                                         "conclusion_upper"});
  report(9, t1_ok && lib_ok && secs < 30.0,
         std::string("end-to-end demos: theorem1 ") + (t1_ok ? "pass" : "FAIL") +
             ", libera_sandwich " + (lib_ok ? "pass" : "FAIL") + " (stable ladders); suite " +
             sci(secs) + " s");

  bool identical = one.size() == four.size();
  for (std::size_t i = 0; identical && i < one.size(); ++i)
    identical = one[i].second.dump() == four[i].second.dump();
  report(10, identical,
         std::string("determinism: suite reports with 1 and 4 threads are ") +
             (identical ? "byte-identical" : "DIFFERENT"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criteria9and10();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
