#pragma once

// Generalized Bessel functions of the first kind.
//
//   w_{p,b,c}(z) = sum_n (-1)^n c^n / (n! Gamma(p + n + (b+1)/2)) (z/2)^(2n+p)
//   u_{p,b,c}(z) = sum_n (-c/4)^n / ((kappa)_n n!) z^n,   kappa = p + (b+1)/2
//
// u is entire with u(0) = 1 and is related to w by
//   w(z) = (z/2)^p / Gamma(kappa) * u(z^2).
// b = c = 1 recovers J_p and b = 1, c = -1 recovers I_p.

#include <cstddef>
#include <functional>

#include "gbessel/series.hpp"
#include "gbessel/sweep.hpp"

namespace gbessel {

class BesselParameters {
 public:
  /// Throws DomainError if c == 0 or any value is non-finite.
  ///
  /// kappa is not restricted here: the blended operators only ever use
  /// kappa + 1 and kappa + 2. Operations that divide by (kappa)_n check
  /// for a Pochhammer pole themselves.
  BesselParameters(double p, double b, Complex c);

  double p() const noexcept { return p_; }
  double b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  double kappa() const noexcept { return p_ + (b_ + 1.0) / 2.0; }

  /// Same b and c with p -> p + k, hence kappa -> kappa + k.
  BesselParameters shifted(double k) const { return {p_ + k, b_, c_}; }

  /// kappa in {0, -1, -2, ...}.
  bool has_pochhammer_pole() const noexcept;

 private:
  double p_;
  double b_;
  Complex c_;
};

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
double pochhammer(double a, std::size_t n);

/// Taylor coefficients of u_{p,b,c} up to order n_terms, computed by the
/// ratio recurrence c_{n+1} = c_n (-c/4) / ((kappa + n)(n + 1)).
/// Throws DomainError on a Pochhammer pole or n_terms == 0.
PowerSeries u_series(const BesselParameters& params, std::size_t n_terms = kDefaultOrder);

/// Coefficient rule of u_{p,b,c}, for tail_bound.
CoefficientRule u_coefficient_rule(const BesselParameters& params);

/// Smallest order >= kDefaultOrder (doubling) at which the tail of u on
/// |z| <= radius is certified below `tolerance`.
std::size_t certified_u_order(const BesselParameters& params, double radius,
                              double tolerance = 1e-17);

/// w_{p,b,c}(z) on the principal branch. Throws DomainError for z on
/// (-inf, 0] or when Gamma(kappa) has a pole.
Complex w_value(const BesselParameters& params, Complex z, std::size_t n_terms = kDefaultOrder);

enum class ClosedFormTag { CosSqrt, SincSqrt, ThreeHalvesTrig };

/// (p, b, c) of the u function each tag reproduces:
/// (-1/2, 1, 1), (1/2, 1, 1) and (3/2, 1, 1).
BesselParameters closed_form_parameters(ClosedFormTag tag);

/// cos(sqrt z), sin(sqrt z)/sqrt z, 3 (sin sqrt z / (z sqrt z) - cos sqrt z / z).
/// All three are even in sqrt z, so the branch does not matter; the
/// removable singularities at 0 return their limit 1.
Complex closed_form_eval(ClosedFormTag tag, Complex z);

const char* to_string(ClosedFormTag tag);

/// sup over the grid of |4 z^2 u'' + 2(2p+b+1) z u' + c z u| with exact
/// series derivatives. The extremum carries the arg max.
GridExtremum ode_residual_u_extremum(const BesselParameters& params, const PowerSeries& s,
                                     const EvaluationGrid& grid);
double ode_residual_u(const BesselParameters& params, const PowerSeries& s,
                      const EvaluationGrid& grid);

/// sup over the grid of |z^2 w'' + b z w' + (c z^2 - p^2 + (1-b) p) w| with
/// w' and w'' from 5-point central differences of w_value, step 1e-3 |z|
/// along the real direction. Throws DomainError if a stencil comes within
/// reach of the branch cut.
GridExtremum ode_residual_w_extremum(const BesselParameters& params, const EvaluationGrid& grid,
                                     std::size_t n_terms = kDefaultOrder);
/// Same residual for an arbitrary candidate w.
GridExtremum ode_residual_w_extremum(const BesselParameters& params,
                                     const std::function<Complex(Complex)>& w,
                                     const EvaluationGrid& grid);
double ode_residual_w(const BesselParameters& params, const EvaluationGrid& grid,
                      std::size_t n_terms = kDefaultOrder);

}  // namespace gbessel
