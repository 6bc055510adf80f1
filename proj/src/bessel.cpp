#include "gbessel/bessel.hpp"

#include <cmath>
#include <string>

#include "gbessel/error.hpp"

namespace gbessel {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

void require_no_pole(const BesselParameters& params) {
  if (params.has_pochhammer_pole())
    throw DomainError("kappa = " + std::to_string(params.kappa()) +
                      " is a non-positive integer: (kappa)_n vanishes");
}

}  // namespace

BesselParameters::BesselParameters(double p, double b, Complex c) : p_(p), b_(b), c_(c) {
  if (!std::isfinite(p) || !std::isfinite(b) || !is_finite(c))
    throw DomainError("Bessel parameters must be finite");
  if (c == Complex{}) throw DomainError("Bessel parameter c must be non-zero");
}

bool BesselParameters::has_pochhammer_pole() const noexcept {
  return is_nonpositive_integer(kappa());
}

double pochhammer(double a, std::size_t n) {
  double acc = 1.0;
  for (std::size_t k = 0; k < n; ++k) acc *= a + static_cast<double>(k);
  return acc;
}

PowerSeries u_series(const BesselParameters& params, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("u_series needs n_terms >= 1");
  require_no_pole(params);
  const double kappa = params.kappa();
  const Complex step = -params.c() / 4.0;
  std::vector<Complex> c(n_terms);
  c[0] = 1.0;
  for (std::size_t n = 0; n + 1 < n_terms; ++n) {
    const double nd = static_cast<double>(n);
    c[n + 1] = c[n] * step / ((kappa + nd) * (nd + 1.0));
  }
  return PowerSeries(std::move(c));
}

CoefficientRule u_coefficient_rule(const BesselParameters& params) {
  require_no_pole(params);
  return [kappa = params.kappa(), step = -params.c() / 4.0](std::size_t n) {
    Complex c{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const double kd = static_cast<double>(k);
      c *= step / ((kappa + kd) * (kd + 1.0));
    }
    return c;
  };
}

std::size_t certified_u_order(const BesselParameters& params, double radius, double tolerance) {
  const auto rule = u_coefficient_rule(params);
  for (std::size_t n = kDefaultOrder; n <= 4096; n *= 2) {
    try {
      const Complex lead = rule(n);
      // Underflowed coefficients mean the tail is far below double resolution.
      if (lead == Complex{}) return n;
      if (tail_bound(rule, n, radius) <= tolerance) return n;
    } catch (const DomainError&) {
      // ratio still >= 1 at this order; keep doubling
    }
  }
  throw NumericGuard("could not certify the u-series tail up to order 4096");
}

Complex w_value(const BesselParameters& params, Complex z, std::size_t n_terms) {
  if (!is_finite(z)) throw DomainError("w_value: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw DomainError("w_value: z lies on the branch cut (-inf, 0]");
  if (params.has_pochhammer_pole())
    throw DomainError("w_value: Gamma(kappa) has a pole");
  const Complex prefactor = std::exp(params.p() * std::log(z / 2.0));
  const double inv_gamma = 1.0 / std::tgamma(params.kappa());
  return prefactor * inv_gamma * evaluate(u_series(params, n_terms), z * z);
}

BesselParameters closed_form_parameters(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::CosSqrt:
      return {-0.5, 1.0, 1.0};
    case ClosedFormTag::SincSqrt:
      return {0.5, 1.0, 1.0};
    case ClosedFormTag::ThreeHalvesTrig:
      return {1.5, 1.0, 1.0};
  }
  throw DomainError("unknown closed-form tag");
}

Complex closed_form_eval(ClosedFormTag tag, Complex z) {
  const Complex r = std::sqrt(z);
  switch (tag) {
    case ClosedFormTag::CosSqrt:
      return std::cos(r);
    case ClosedFormTag::SincSqrt:
      if (z == Complex{}) return 1.0;
      return std::sin(r) / r;
    case ClosedFormTag::ThreeHalvesTrig:
      if (z == Complex{}) return 1.0;
      return 3.0 * (std::sin(r) / (z * r) - std::cos(r) / z);
  }
  throw DomainError("unknown closed-form tag");
}

const char* to_string(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::CosSqrt:
      return "cos_sqrt";
    case ClosedFormTag::SincSqrt:
      return "sinc_sqrt";
    case ClosedFormTag::ThreeHalvesTrig:
      return "three_halves_trig";
  }
  return "?";
}

GridExtremum ode_residual_u_extremum(const BesselParameters& params, const PowerSeries& s,
                                     const EvaluationGrid& grid) {
  const PowerSeries padded = s.order() < 3 ? s.resized(3) : s;
  const PowerSeries d1 = differentiate(padded);
  const PowerSeries d2 = differentiate(d1);
  const double lin = 2.0 * (2.0 * params.p() + params.b() + 1.0);
  const Complex c = params.c();
  return sweep_grid(
      grid,
      [&](Complex z) {
        const Complex r = 4.0 * z * z * evaluate(d2, z) + lin * z * evaluate(d1, z) +
                          c * z * evaluate(padded, z);
        return std::abs(r);
      },
      Extremum::Max);
}

double ode_residual_u(const BesselParameters& params, const PowerSeries& s,
                      const EvaluationGrid& grid) {
  return ode_residual_u_extremum(params, s, grid).value;
}

GridExtremum ode_residual_w_extremum(const BesselParameters& params,
                                     const std::function<Complex(Complex)>& w,
                                     const EvaluationGrid& grid) {
  const double p = params.p();
  const double b = params.b();
  const Complex c = params.c();
  const double free_term = -p * p + (1.0 - b) * p;
  return sweep_grid(
      grid,
      [&](Complex z) {
        const double h = 1e-3 * std::abs(z);
        const double to_cut = z.real() > 0.0 ? std::abs(z) : std::abs(z.imag());
        if (to_cut <= 2.5 * h)
          throw DomainError("ode_residual_w: stencil reaches the branch cut near z = (" +
                            std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
        const Complex f0 = w(z);
        const Complex fp1 = w(z + h), fm1 = w(z - h);
        const Complex fp2 = w(z + 2.0 * h), fm2 = w(z - 2.0 * h);
        const Complex d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        const Complex d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        return std::abs(z * z * d2 + b * z * d1 + (c * z * z + free_term) * f0);
      },
      Extremum::Max);
}

GridExtremum ode_residual_w_extremum(const BesselParameters& params, const EvaluationGrid& grid,
                                     std::size_t n_terms) {
  const PowerSeries u = u_series(params, n_terms);
  if (params.has_pochhammer_pole()) throw DomainError("Gamma(kappa) has a pole");
  const double inv_gamma = 1.0 / std::tgamma(params.kappa());
  const double p = params.p();
  return ode_residual_w_extremum(
      params,
      [&](Complex z) {
        if (z.imag() == 0.0 && z.real() <= 0.0)
          throw DomainError("w evaluated on the branch cut");
        return std::exp(p * std::log(z / 2.0)) * inv_gamma * evaluate(u, z * z);
      },
      grid);
}

double ode_residual_w(const BesselParameters& params, const EvaluationGrid& grid,
                      std::size_t n_terms) {
  return ode_residual_w_extremum(params, grid, n_terms).value;
}

}  // namespace gbessel
