#pragma once

// Coefficient-diagonal operators on normalized functions f = z + a_2 z^2 + ...
//
//   B_{kappa,c}(f)(z) = z u_{p,b,c}(z) * f(z)          (Hadamard product)
//   F_mu(f)(z)        = (mu+1) z^{-mu} int_0^z t^{mu-1} f(t) dt
//
// Both act as multipliers on a_{n+1}, so every identity between them holds
// exactly up to rounding.

#include "gbessel/bessel.hpp"
#include "gbessel/series.hpp"

namespace gbessel {

/// Weight lambda in [0, 1) and parameters with kappa > -1.
struct BlendSpec {
  BlendSpec(double lambda, BesselParameters params);

  double lambda;
  BesselParameters params;
};

/// mu > -1.
struct LiberaSpec {
  explicit LiberaSpec(double mu);

  double mu;
};

/// B_{kappa,c}(f). Throws DomainError if f is not normalized or kappa is a
/// Pochhammer pole.
PowerSeries apply_B(const BesselParameters& params, const PowerSeries& f);

/// B_{kappa,c}(f)(z) / z, a series with value 1 at the origin.
PowerSeries B_quotient(const BesselParameters& params, const PowerSeries& f);

/// Largest coefficient gap in
///   z (B_{kappa+2,c} f)' = (kappa+1) B_{kappa+1,c} f - kappa B_{kappa+2,c} f.
double recurrence_residual(const BesselParameters& params, const PowerSeries& f);

/// Phi = (1-lambda) B_{kappa+1,c}(g)/z + lambda B_{kappa+2,c}(g)/z.
PowerSeries blend_phi(const BlendSpec& spec, const PowerSeries& g);

/// a_{n+1} -> a_{n+1} (mu+1)/(mu+n+1).
PowerSeries libera_transform(const LiberaSpec& spec, const PowerSeries& f);

/// F_mu(f)(z) straight from the integral along [0, z], by tanh-sinh
/// quadrature of (mu+1) int_0^1 s^{mu-1} f(s z) ds after the substitution
/// x = s^{mu+1}, which leaves a bounded integrand. Only f's values are
/// used, never its coefficients. Throws NumericGuard when the quadrature
/// error estimate stays above 1e-11.
Complex libera_quadrature_oracle(const LiberaSpec& spec, const PowerSeries& f, Complex z);

/// Largest coefficient gap in
///   z (B F_mu f)' = (mu+1) B f - mu B F_mu f,   B = B_{kappa,c}.
double libera_recurrence_residual(const LiberaSpec& spec, const BesselParameters& params,
                                  const PowerSeries& f);

}  // namespace gbessel
