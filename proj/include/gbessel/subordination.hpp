#pragma once

// Numerical subordination oracle and the analytic side conditions of the
// subordination-preserving theorems for B_{kappa,c}.
//
// f is subordinate to a univalent F (f < F) iff f(0) = F(0) and
// f(D) is contained in F(D). The open disk is approached through circles
// |z| = rho on a ladder rho -> 1; no finite check is conclusive, and every
// verdict says which radii it looked at.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gbessel/series.hpp"
#include "gbessel/sweep.hpp"

namespace gbessel {

/// Distance below which a point counts as lying on a curve, and below which
/// a subordination margin is reported indeterminate.
inline constexpr double kCurveTolerance = 1e-9;

/// Tolerance for f(0) == F(0).
inline constexpr double kOriginTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Constants

/// gamma_{lambda,kappa} = ((1-l)^2 + (k+1)^2 - sqrt((1-l)^4 + (k+1)^4)) / (4 (1-l)(k+1)),
/// evaluated in the cancellation-free form (1-l)(k+1) / (2 (A^2 + K^2 + sqrt(A^4 + K^4))).
/// Requires lambda in [0, 1) and kappa > -1.
double gamma_lambda_kappa(double lambda, double kappa);

/// gamma_mu for the Libera sandwich; identical to gamma_lambda_kappa(0, mu).
double gamma_mu(double mu);

/// (1 + (k+1)^2 - sqrt(1 + (k+1)^4)) / (4 (k+1)) evaluated literally, in
/// the uncancelled lambda = 0 form. Independent of gamma_lambda_kappa.
double gamma_lambda0_direct(double kappa);

// ---------------------------------------------------------------------------
// Curves and winding numbers

/// Closed polyline through the images of rho e^{2 pi i k / M}.
struct BoundaryCurve {
  /// M >= 256 points; index M wraps to 0.
  BoundaryCurve(double rho, std::vector<Complex> points);

  /// Image of |z| = rho under F.
  static BoundaryCurve image_of(const PowerSeries& F, double rho, std::size_t samples);

  double rho;
  std::vector<Complex> points;
};

inline constexpr std::size_t kMinCurveSamples = 256;

/// Distance from w to the nearest segment of the polyline.
double distance_to_curve(const BoundaryCurve& curve, Complex w);

/// Signed turns of the curve around w. Throws NumericGuard when w is within
/// kCurveTolerance of a segment.
int winding_number(const BoundaryCurve& curve, Complex w);

/// True if two non-adjacent segments intersect.
bool self_intersects(const BoundaryCurve& curve);

// ---------------------------------------------------------------------------
// Verdicts and reports

enum class VerdictStatus { Holds, Fails, Indeterminate };

const char* to_string(VerdictStatus s);

struct SubordinationVerdict {
  VerdictStatus status = VerdictStatus::Indeterminate;
  /// status == Holds, i.e. margin > kCurveTolerance.
  bool holds = false;
  /// Signed distance of the tested images to the target boundary; negative
  /// when some tested point escapes.
  double margin = 0.0;
  /// Tested point realizing the margin.
  Complex witness{};
};

enum class Bound {
  Lower,  ///< value is an infimum; passed <=> value > threshold
  Upper   ///< value is a supremum; passed <=> value <= threshold
};

struct ConditionReport {
  std::string functional_name;
  double value = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::Lower;
  bool passed = false;
  /// Where the extremum was found. For admissibility this is s + i t.
  Complex arg{};
};

ConditionReport make_report(std::string name, double value, double threshold, Bound bound,
                            Complex arg);

// ---------------------------------------------------------------------------
// Subordination oracles

/// f < F tested on the circle |z| = rho_f against the image of |z| = rho_F.
/// Requires 0 < rho_f < rho_F < 1 and M >= 256. F must be univalent (the
/// caller's responsibility); a self-intersecting or degenerate F-curve
/// raises NumericGuard.
SubordinationVerdict check_subordination(const PowerSeries& f, const PowerSeries& F,
                                         double rho_f, double rho_F, std::size_t samples);

/// g < 1 + radius z, i.e. sup |g - 1| < radius over the grid (max radius
/// 0.9999 by default). Requires g(0) = 1.
SubordinationVerdict check_disk_subordination(const PowerSeries& g, double radius,
                                              const EvaluationGrid& grid = EvaluationGrid::standard());

inline const std::vector<double>& default_rho_ladder() {
  static const std::vector<double> ladder{0.9, 0.99, 0.999, 0.9999};
  return ladder;
}

struct LadderVerdict {
  std::vector<double> rhos;
  std::vector<SubordinationVerdict> rungs;
  /// The last two rungs agree on status and their margins differ by less
  /// than 10%.
  bool stable = false;
  /// Last rung's status when stable, Indeterminate otherwise.
  VerdictStatus status = VerdictStatus::Indeterminate;
};

/// Outer radius paired with an inner test radius rho on a ladder rung.
double outer_radius(double rho);

/// check_subordination at each rung with rho_f = rho, rho_F = outer_radius(rho).
LadderVerdict check_subordination_ladder(const PowerSeries& f, const PowerSeries& F,
                                         std::span<const double> ladder, std::size_t samples);

struct DiskLadder {
  std::vector<double> rhos;
  std::vector<double> sups;
  std::vector<Complex> witnesses;
  /// Linear extrapolation of the last two rungs to rho = 1.
  double extrapolated = 0.0;
};

/// sup_{|z| = rho} |g(z) - center| for each rung, refined by golden section.
DiskLadder disk_deviation_ladder(const PowerSeries& g, Complex center,
                                 std::span<const double> ladder, std::size_t samples);

// ---------------------------------------------------------------------------
// Analytic side conditions

/// Re(1 + z phi''(z)/phi'(z)) at z, given d1 = phi' and d2 = phi''.
/// Throws DomainError if |phi'(z)| <= 1e-12.
double convexity_functional(const PowerSeries& d1, const PowerSeries& d2, Complex z);

/// inf over the grid of Re(1 + z phi''/phi'); passed iff inf > -threshold_gamma.
/// Requires phi(0) = 1.
ConditionReport check_convexity_condition(const PowerSeries& phi, double threshold_gamma,
                                          const EvaluationGrid& grid);

/// inf over grid x t_samples of Re[(kappa+1)/(1-lambda) + (1+t)(1 + z phi''/phi')],
/// the Loewner-chain quotient Re(z dL/dz / dL/dt) for
/// L(z,t) = phi(z) + (1+t) (1-lambda)/(kappa+1) z phi'(z). Passed iff > 0.
/// Throws DomainError if phi'(0) = 0.
ConditionReport loewner_chain_check(const PowerSeries& phi, double lambda, double kappa,
                                    std::span<const double> t_samples,
                                    const EvaluationGrid& grid);

/// Re xi(u, v) for xi(u, v) = u + v / (u + (kappa+1)/(1-lambda)) + gamma_{lambda,kappa}.
double admissibility_expression(double lambda, double kappa, Complex u, Complex v);

/// sup over s of Re xi(i s, -(1 + s^2)/2); passed iff sup <= 0.
///
/// Re xi(i s, t) = t K/(s^2 + K^2) + gamma with K = (kappa+1)/(1-lambda) > 0,
/// increasing in t, so t = -(1+s^2)/2 is the worst case of the admissible
/// cone t <= -(1+s^2)/2.
ConditionReport admissibility_check(double lambda, double kappa, std::span<const double> s_samples);

/// (1-lambda)^4 - sqrt((1-lambda)^4 + (kappa+1)^4) < 3 (kappa+1)^2.
bool key_inequality_check(double lambda, double kappa);

}  // namespace gbessel
