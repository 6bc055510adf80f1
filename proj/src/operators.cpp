#include "gbessel/operators.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

#include "gbessel/error.hpp"

namespace gbessel {

namespace {

void require_normalized(const PowerSeries& f, const char* who) {
  if (!f.is_normalized())
    throw DomainError(std::string(who) + ": f must satisfy f(0) = 0, f'(0) = 1");
}

// z s'(z), keeping the order of s.
PowerSeries z_derivative(const PowerSeries& s) {
  std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= static_cast<double>(n);
  return PowerSeries(std::move(c));
}

}  // namespace

BlendSpec::BlendSpec(double lambda_, BesselParameters params_)
    : lambda(lambda_), params(params_) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in [0, 1)");
  if (!(params.kappa() > -1.0)) throw DomainError("blend requires kappa > -1");
}

LiberaSpec::LiberaSpec(double mu_) : mu(mu_) {
  if (!(mu > -1.0) || !std::isfinite(mu)) throw DomainError("Libera operator requires mu > -1");
}

PowerSeries apply_B(const BesselParameters& params, const PowerSeries& f) {
  require_normalized(f, "apply_B");
  return hadamard(f, u_series(params, f.order()).multiply_by_z());
}

PowerSeries B_quotient(const BesselParameters& params, const PowerSeries& f) {
  return apply_B(params, f).divide_by_z();
}

double recurrence_residual(const BesselParameters& params, const PowerSeries& f) {
  const double kappa = params.kappa();
  const PowerSeries b1 = apply_B(params.shifted(1.0), f);
  const PowerSeries b2 = apply_B(params.shifted(2.0), f);
  const PowerSeries lhs = z_derivative(b2);
  const PowerSeries rhs = subtract(b1.scaled(kappa + 1.0), b2.scaled(kappa));
  return max_coeff_diff(lhs, rhs);
}

PowerSeries blend_phi(const BlendSpec& spec, const PowerSeries& g) {
  const double lam = spec.lambda;
  const PowerSeries first = B_quotient(spec.params.shifted(1.0), g);
  const PowerSeries second = B_quotient(spec.params.shifted(2.0), g);
  return add(first.scaled(1.0 - lam), second.scaled(lam));
}

PowerSeries libera_transform(const LiberaSpec& spec, const PowerSeries& f) {
  require_normalized(f, "libera_transform");
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = 1; k < c.size(); ++k)
    c[k] *= (spec.mu + 1.0) / (spec.mu + static_cast<double>(k));
  return PowerSeries(std::move(c));
}

Complex libera_quadrature_oracle(const LiberaSpec& spec, const PowerSeries& f, Complex z) {
  if (!is_finite(z)) throw DomainError("libera_quadrature_oracle: non-finite z");
  if (!(std::abs(z) < 1.0)) throw DomainError("libera_quadrature_oracle: needs |z| < 1");
  if (f.coeff_or_zero(0) != Complex{})
    throw DomainError("libera_quadrature_oracle: f(0) must be 0");
  if (z == Complex{}) return 0.0;

  // F_mu(f)(z) = (mu+1) int_0^1 s^{mu-1} f(sz) ds. With x = s^{mu+1}:
  //          = int_0^1 z f(sz)/(sz) dx,   s = x^{1/(mu+1)}.
  const double expo = 1.0 / (spec.mu + 1.0);
  auto integrand = [&](double x) -> Complex {
    const double s = std::pow(x, expo);
    const Complex t = s * z;
    if (std::abs(t) < 1e-150) return z * f.coeff_or_zero(1);
    return z * evaluate(f, t) / t;
  };

  boost::math::quadrature::tanh_sinh<double> quad;
  constexpr double kTol = 1e-14;
  double err_re = 0.0, err_im = 0.0, l1 = 0.0;
  const double re =
      quad.integrate([&](double x) { return integrand(x).real(); }, 0.0, 1.0, kTol, &err_re, &l1);
  const double im =
      quad.integrate([&](double x) { return integrand(x).imag(); }, 0.0, 1.0, kTol, &err_im, &l1);
  if (!(err_re <= 1e-11 && err_im <= 1e-11) || !std::isfinite(re) || !std::isfinite(im))
    throw NumericGuard("libera_quadrature_oracle: quadrature did not converge");
  return {re, im};
}

double libera_recurrence_residual(const LiberaSpec& spec, const BesselParameters& params,
                                  const PowerSeries& f) {
  const PowerSeries bf = apply_B(params, f);
  const PowerSeries bff = apply_B(params, libera_transform(spec, f));
  const PowerSeries lhs = z_derivative(bff);
  const PowerSeries rhs = subtract(bf.scaled(spec.mu + 1.0), bff.scaled(spec.mu));
  return max_coeff_diff(lhs, rhs);
}

}  // namespace gbessel
