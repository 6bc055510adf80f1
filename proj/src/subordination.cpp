#include "gbessel/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gbessel/error.hpp"

namespace gbessel {

namespace {

void require_lambda_kappa(double lambda, double kappa) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in [0, 1)");
  if (!(kappa > -1.0) || !std::isfinite(kappa)) throw DomainError("kappa must exceed -1");
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance2(Complex a, Complex b, Complex w) {
  const double abx = b.real() - a.real(), aby = b.imag() - a.imag();
  const double awx = w.real() - a.real(), awy = w.imag() - a.imag();
  const double len2 = abx * abx + aby * aby;
  double t = len2 == 0.0 ? 0.0 : (awx * abx + awy * aby) / len2;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = awx - t * abx, dy = awy - t * aby;
  return dx * dx + dy * dy;
}

int orientation(Complex a, Complex b, Complex c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Complex a, Complex b, Complex p) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

SubordinationVerdict make_verdict(double margin, Complex witness) {
  SubordinationVerdict v;
  v.margin = margin;
  v.witness = witness;
  if (margin > kCurveTolerance)
    v.status = VerdictStatus::Holds;
  else if (margin < -kCurveTolerance)
    v.status = VerdictStatus::Fails;
  else
    v.status = VerdictStatus::Indeterminate;
  v.holds = v.status == VerdictStatus::Holds;
  return v;
}

}  // namespace

double gamma_lambda_kappa(double lambda, double kappa) {
  require_lambda_kappa(lambda, kappa);
  const double a = 1.0 - lambda;
  const double k = kappa + 1.0;
  const double a2 = a * a, k2 = k * k;
  // Numerator times its conjugate: (A^2+K^2)^2 - (A^4+K^4) = 2 A^2 K^2.
  return a * k / (2.0 * (a2 + k2 + std::sqrt(a2 * a2 + k2 * k2)));
}

double gamma_mu(double mu) {
  if (!(mu > -1.0)) throw DomainError("gamma_mu requires mu > -1");
  return gamma_lambda_kappa(0.0, mu);
}

double gamma_lambda0_direct(double kappa) {
  if (!(kappa > -1.0)) throw DomainError("kappa must exceed -1");
  const double k = kappa + 1.0;
  return (1.0 + k * k - std::sqrt(1.0 + k * k * k * k)) / (4.0 * k);
}

BoundaryCurve::BoundaryCurve(double rho_, std::vector<Complex> points_)
    : rho(rho_), points(std::move(points_)) {
  if (points.size() < kMinCurveSamples)
    throw DomainError("boundary curve needs at least 256 samples");
  for (const auto& p : points)
    if (!is_finite(p)) throw DomainError("boundary curve has a non-finite point");
}

BoundaryCurve BoundaryCurve::image_of(const PowerSeries& F, double rho, std::size_t samples) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("curve radius must lie in (0, 1)");
  std::vector<Complex> pts(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    pts[k] = evaluate(F, std::polar(rho, theta));
  }
  return BoundaryCurve(rho, std::move(pts));
}

double distance_to_curve(const BoundaryCurve& curve, Complex w) {
  const auto& p = curve.points;
  double best = segment_distance2(p.back(), p.front(), w);
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    best = std::min(best, segment_distance2(p[k], p[k + 1], w));
  return std::sqrt(best);
}

namespace {

int crossing_winding(const BoundaryCurve& curve, Complex w) {
  // Signed crossings of the upward ray from w; exact once w is off the curve.
  const auto& p = curve.points;
  const std::size_t m = p.size();
  int wn = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const Complex a = p[k], b = p[k + 1 == m ? 0 : k + 1];
    const double side = cross(b - a, w - a);
    if (a.imag() <= w.imag()) {
      if (b.imag() > w.imag() && side > 0.0) ++wn;
    } else if (b.imag() <= w.imag() && side < 0.0) {
      --wn;
    }
  }
  return wn;
}

}  // namespace

int winding_number(const BoundaryCurve& curve, Complex w) {
  if (distance_to_curve(curve, w) < kCurveTolerance)
    throw NumericGuard("winding_number: point lies on the curve");
  return crossing_winding(curve, w);
}

bool self_intersects(const BoundaryCurve& curve) {
  const auto& p = curve.points;
  const std::size_t m = p.size();
  struct Seg {
    double xmin, xmax, ymin, ymax;
    std::size_t index;
  };
  std::vector<Seg> segs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex a = p[i], b = p[(i + 1) % m];
    segs[i] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()),
               std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag()), i};
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
    return a.xmin != b.xmin ? a.xmin < b.xmin : a.index < b.index;
  });
  for (std::size_t u = 0; u < m; ++u) {
    const Seg& s = segs[u];
    for (std::size_t v = u + 1; v < m && segs[v].xmin <= s.xmax; ++v) {
      const Seg& t = segs[v];
      const std::size_t gap = s.index > t.index ? s.index - t.index : t.index - s.index;
      if (gap == 1 || gap == m - 1) continue;
      if (t.ymin > s.ymax || t.ymax < s.ymin) continue;
      if (segments_intersect(p[s.index], p[(s.index + 1) % m], p[t.index],
                             p[(t.index + 1) % m]))
        return true;
    }
  }
  return false;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds:
      return "holds";
    case VerdictStatus::Fails:
      return "fails";
    case VerdictStatus::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

ConditionReport make_report(std::string name, double value, double threshold, Bound bound,
                            Complex arg) {
  ConditionReport r;
  r.functional_name = std::move(name);
  r.value = value;
  r.threshold = threshold;
  r.bound = bound;
  r.passed = bound == Bound::Lower ? value > threshold : value <= threshold;
  r.arg = arg;
  return r;
}

SubordinationVerdict check_subordination(const PowerSeries& f, const PowerSeries& F,
                                         double rho_f, double rho_F, std::size_t samples) {
  if (!(rho_f > 0.0 && rho_f < rho_F && rho_F < 1.0))
    throw DomainError("check_subordination requires 0 < rho_f < rho_F < 1");
  if (samples < kMinCurveSamples) throw DomainError("check_subordination needs M >= 256");

  const Complex f0 = f.coeff_or_zero(0);
  const double origin_gap = std::abs(f0 - F.coeff_or_zero(0));
  if (origin_gap >= kOriginTolerance) return make_verdict(-origin_gap, f0);

  const BoundaryCurve target = BoundaryCurve::image_of(F, rho_F, samples);
  double perimeter = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double len = std::abs(target.points[(k + 1) % samples] - target.points[k]);
    if (len == 0.0) throw NumericGuard("target curve is degenerate (repeated samples)");
    perimeter += len;
  }
  if (!(perimeter > 1e-12)) throw NumericGuard("target curve is degenerate");
  if (self_intersects(target))
    throw NumericGuard("target curve self-intersects: F is not univalent at this radius");

  double margin = std::numeric_limits<double>::infinity();
  Complex witness{};
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    const Complex w = evaluate(f, std::polar(rho_f, theta));
    const double d = distance_to_curve(target, w);
    double signed_d = 0.0;
    if (d >= kCurveTolerance) signed_d = crossing_winding(target, w) == 1 ? d : -d;
    if (signed_d < margin) {
      margin = signed_d;
      witness = w;
    }
  }
  return make_verdict(margin, witness);
}

SubordinationVerdict check_disk_subordination(const PowerSeries& g, double radius,
                                              const EvaluationGrid& grid) {
  if (std::abs(g.coeff_or_zero(0) - 1.0) >= kOriginTolerance)
    throw DomainError("check_disk_subordination requires g(0) = 1");
  if (!(radius > 0.0)) throw DomainError("disk radius must be positive");
  const GridExtremum sup =
      extremize(grid, [&](Complex z) { return std::abs(evaluate(g, z) - 1.0); }, Extremum::Max);
  return make_verdict(radius - sup.value, sup.z);
}

double outer_radius(double rho) { return 1.0 - (1.0 - rho) / 2.0; }

LadderVerdict check_subordination_ladder(const PowerSeries& f, const PowerSeries& F,
                                         std::span<const double> ladder, std::size_t samples) {
  if (ladder.size() < 2) throw DomainError("rho ladder needs at least two rungs");
  LadderVerdict out;
  for (double rho : ladder) {
    out.rhos.push_back(rho);
    out.rungs.push_back(check_subordination(f, F, rho, outer_radius(rho), samples));
  }
  const auto& a = out.rungs[out.rungs.size() - 2];
  const auto& b = out.rungs.back();
  const double scale = std::max(std::abs(a.margin), std::abs(b.margin));
  out.stable = a.status == b.status && b.status != VerdictStatus::Indeterminate &&
               std::abs(a.margin - b.margin) < 0.1 * scale;
  out.status = out.stable ? b.status : VerdictStatus::Indeterminate;
  return out;
}

DiskLadder disk_deviation_ladder(const PowerSeries& g, Complex center,
                                 std::span<const double> ladder, std::size_t samples) {
  if (ladder.size() < 2) throw DomainError("rho ladder needs at least two rungs");
  DiskLadder out;
  const GridFunctional dev = [&](Complex z) { return std::abs(evaluate(g, z) - center); };
  for (double rho : ladder) {
    const GridExtremum e = extremize(EvaluationGrid({rho}, samples), dev, Extremum::Max);
    out.rhos.push_back(rho);
    out.sups.push_back(e.value);
    out.witnesses.push_back(e.z);
  }
  const std::size_t n = out.rhos.size();
  const double r1 = out.rhos[n - 2], r2 = out.rhos[n - 1];
  const double s1 = out.sups[n - 2], s2 = out.sups[n - 1];
  out.extrapolated = s2 + (s2 - s1) * (1.0 - r2) / (r2 - r1);
  return out;
}

double convexity_functional(const PowerSeries& d1, const PowerSeries& d2, Complex z) {
  const Complex dp = evaluate(d1, z);
  if (std::abs(dp) <= 1e-12)
    throw DomainError("convexity functional: phi' vanishes on the grid");
  return (1.0 + z * evaluate(d2, z) / dp).real();
}

namespace {

struct Derivatives {
  PowerSeries d1;
  PowerSeries d2;
};

Derivatives derivatives_of(const PowerSeries& phi) {
  const PowerSeries padded = phi.order() < 3 ? phi.resized(3) : phi;
  PowerSeries d1 = differentiate(padded);
  PowerSeries d2 = differentiate(d1);
  return {std::move(d1), std::move(d2)};
}

}  // namespace

ConditionReport check_convexity_condition(const PowerSeries& phi, double threshold_gamma,
                                          const EvaluationGrid& grid) {
  if (std::abs(phi.coeff_or_zero(0) - 1.0) >= kOriginTolerance)
    throw DomainError("check_convexity_condition requires phi(0) = 1");
  const auto [d1, d2] = derivatives_of(phi);
  const GridExtremum inf = extremize(
      grid, [&](Complex z) { return convexity_functional(d1, d2, z); }, Extremum::Min);
  return make_report("Re(1 + z phi''/phi')", inf.value, -threshold_gamma, Bound::Lower, inf.z);
}

ConditionReport loewner_chain_check(const PowerSeries& phi, double lambda, double kappa,
                                    std::span<const double> t_samples,
                                    const EvaluationGrid& grid) {
  require_lambda_kappa(lambda, kappa);
  if (t_samples.empty()) throw DomainError("loewner_chain_check needs t samples");
  for (double t : t_samples)
    if (!(t >= 0.0)) throw DomainError("loewner_chain_check: t must be >= 0");
  if (std::abs(phi.coeff_or_zero(1)) <= 1e-14)
    throw DomainError("loewner_chain_check: phi'(0) = 0, chain has a_1(t) = 0");
  const auto [d1, d2] = derivatives_of(phi);
  const double base = (kappa + 1.0) / (1.0 - lambda);
  const GridExtremum inf = extremize(
      grid,
      [&](Complex z) {
        const double q = convexity_functional(d1, d2, z);
        double worst = std::numeric_limits<double>::infinity();
        for (double t : t_samples) worst = std::min(worst, base + (1.0 + t) * q);
        return worst;
      },
      Extremum::Min);
  return make_report("Re(z dL/dz / dL/dt)", inf.value, 0.0, Bound::Lower, inf.z);
}

double admissibility_expression(double lambda, double kappa, Complex u, Complex v) {
  const double shift = (kappa + 1.0) / (1.0 - lambda);
  return (u + v / (u + shift)).real() + gamma_lambda_kappa(lambda, kappa);
}

ConditionReport admissibility_check(double lambda, double kappa,
                                    std::span<const double> s_samples) {
  require_lambda_kappa(lambda, kappa);
  if (s_samples.empty()) throw DomainError("admissibility_check needs s samples");
  double sup = -std::numeric_limits<double>::infinity();
  Complex arg{};
  for (double s : s_samples) {
    // Coefficient of t in Re xi(is, t) is K/(s^2+K^2) > 0: the boundary t is worst.
    const double t = -(1.0 + s * s) / 2.0;
    const double v = admissibility_expression(lambda, kappa, Complex{0.0, s}, Complex{t, 0.0});
    if (v > sup) {
      sup = v;
      arg = {s, t};
    }
  }
  return make_report("Re xi(is, -(1+s^2)/2)", sup, 0.0, Bound::Upper, arg);
}

bool key_inequality_check(double lambda, double kappa) {
  require_lambda_kappa(lambda, kappa);
  const double a4 = std::pow(1.0 - lambda, 4);
  const double k = kappa + 1.0;
  return a4 - std::sqrt(a4 + k * k * k * k) < 3.0 * k * k;
}

}  // namespace gbessel
