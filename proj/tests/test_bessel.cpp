#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gbessel/bessel.hpp"
#include "gbessel/error.hpp"
#include "test_support.hpp"

using namespace gbessel;

namespace {

// J_0 by direct summation of sum (-1)^n (x/2)^{2n} / (n!)^2, 30 terms.
double j0_reference(double x) {
  double sum = 0.0;
  for (int n = 0; n < 30; ++n) {
    const double fact = std::tgamma(n + 1.0);
    sum += std::pow(-1.0, n) * std::pow(x / 2.0, 2 * n) / (fact * fact);
  }
  return sum;
}

const ClosedFormTag kTags[] = {ClosedFormTag::CosSqrt, ClosedFormTag::SincSqrt,
                               ClosedFormTag::ThreeHalvesTrig};

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(-2.5, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
  CHECK(pochhammer(-2.0, 4) == 0.0);  // zero propagates

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> a_dist(-5.0, 5.0);
  std::uniform_int_distribution<std::size_t> n_dist(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = a_dist(rng);
    const std::size_t m = n_dist(rng), n = n_dist(rng);
    const double whole = pochhammer(a, m + n);
    const double split = pochhammer(a, m) * pochhammer(a + static_cast<double>(m), n);
    CHECK(std::abs(whole - split) <= 1e-13 * std::abs(whole));
  }
}

TEST_CASE("u_series coefficients") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const BesselParameters params(std::uniform_real_distribution<double>(-0.9, 3.0)(rng), 1.0,
                                  gbessel::testing::nonzero_unit_box(rng));
    CHECK(u_series(params, 16)[0] == Complex{1.0, 0.0});
  }
  // cos sqrt z = 1 - z/2 + z^2/24 - ...
  const auto cosine = u_series(BesselParameters(-0.5, 1.0, 1.0), 8);
  CHECK(cosine[1] == Complex{-0.5, 0.0});
  CHECK(std::abs(cosine[2] - 1.0 / 24.0) < 1e-17);
  const auto sinc = u_series(BesselParameters(0.5, 1.0, 1.0), 8);
  CHECK(std::abs(sinc[1] - (-1.0 / 6.0)) < 1e-17);

  CHECK_THROWS_AS(u_series(BesselParameters(-1.0, 1.0, 1.0), 8), DomainError);  // kappa = 0
  CHECK_THROWS_AS(u_series(BesselParameters(-3.0, 1.0, 1.0), 8), DomainError);  // kappa = -2
  CHECK_THROWS_AS(BesselParameters(0.5, 1.0, 0.0), DomainError);
}

TEST_CASE("u_series alternates for real positive c and kappa > 0") {
  for (double c : {0.1, 1.0, 7.5}) {
    for (double p : {-0.4, 0.0, 1.3}) {
      const auto s = u_series(BesselParameters(p, 1.0, c), 40);
      for (std::size_t n = 0; n < 40; ++n) {
        const double signed_coeff = s[n].real() * (n % 2 == 0 ? 1.0 : -1.0);
        // deep coefficients underflow to exactly zero
        if (s[n] != Complex{}) CHECK(signed_coeff > 0.0);
      }
    }
  }
}

TEST_CASE("w_value") {
  const double j_half = std::sqrt(2.0 / std::numbers::pi) * std::sin(1.0);
  CHECK(std::abs(w_value(BesselParameters(0.5, 1.0, 1.0), 1.0) - j_half) < 1e-14);
  CHECK(std::abs(w_value(BesselParameters(0.0, 1.0, 1.0), 0.5) - j0_reference(0.5)) < 1e-15);
  CHECK(std::abs(w_value(BesselParameters(0.0, 1.0, 1.0), 0.5) - std::cyl_bessel_j(0.0, 0.5)) <
        1e-15);
  // c = -1, b = 1 gives I_p
  CHECK(std::abs(w_value(BesselParameters(1.0, 1.0, -1.0), 0.8) - std::cyl_bessel_i(1.0, 0.8)) <
        1e-14);
  CHECK_THROWS_AS(w_value(BesselParameters(0.5, 1.0, 1.0), -0.5), DomainError);
  CHECK_THROWS_AS(w_value(BesselParameters(0.5, 1.0, 1.0), 0.0), DomainError);
  CHECK_THROWS_AS(w_value(BesselParameters(-1.0, 1.0, 1.0), 0.5), DomainError);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_eval(ClosedFormTag::SincSqrt, 0.0) == Complex{1.0, 0.0});
  CHECK(closed_form_eval(ClosedFormTag::ThreeHalvesTrig, 0.0) == Complex{1.0, 0.0});
  CHECK(std::abs(closed_form_eval(ClosedFormTag::CosSqrt, -1.0) - std::cosh(1.0)) < 1e-15);
  CHECK(std::abs(closed_form_eval(ClosedFormTag::ThreeHalvesTrig, -1.0) - 3.0 / std::exp(1.0)) <
        1e-14);
  CHECK(std::abs(closed_form_eval(ClosedFormTag::ThreeHalvesTrig, -1.0) - 1.1036383235143269) <
        1e-14);
}

TEST_CASE("closed forms agree with u_series on 1024 grid points") {
  const EvaluationGrid grid({0.25, 0.5, 0.9, 0.999}, 256);
  for (auto tag : kTags) {
    const auto s = u_series(closed_form_parameters(tag), 64);
    double worst = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < grid.angles(); ++k) {
        const Complex z = grid.point(j, k);
        worst = std::max(worst, std::abs(evaluate(s, z) - closed_form_eval(tag, z)));
      }
    INFO(to_string(tag));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("u ODE residual") {
  const EvaluationGrid grid({0.25, 0.5, 0.9, 0.99}, 512);
  const BesselParameters params(-0.5, 1.0, 1.0);
  CHECK(ode_residual_u(params, u_series(params, 64), grid) < 1e-10);

  // constant 1 is not a solution: residual is |c z|
  const BesselParameters cplx(0.3, 1.4, Complex{0.6, -0.8});
  CHECK(ode_residual_u(cplx, PowerSeries::constant(1.0, 1), grid) ==
        doctest::Approx(0.99).epsilon(1e-12));

  // z = 0 contributes nothing; grid radius tiny gives tiny residual
  const EvaluationGrid tiny({1e-9}, 16);
  CHECK(ode_residual_u(cplx, PowerSeries::constant(1.0, 1), tiny) < 1e-8);

  // weakly decreasing as the truncation doubles
  const BesselParameters strong(0.0, 1.0, Complex{3.0, 2.0});
  double previous = INFINITY;
  for (std::size_t n = 4; n <= 64; n *= 2) {
    const double r = ode_residual_u(strong, u_series(strong, n), grid);
    CHECK(r <= previous);
    previous = r;
  }
}

TEST_CASE("w ODE residual") {
  // odd angle count keeps the grid off the branch cut
  const EvaluationGrid grid({0.1, 0.25, 0.5, 0.75, 0.9}, 511);
  CHECK(ode_residual_w(BesselParameters(0.5, 1.0, 1.0), grid) < 1e-5);
  CHECK(ode_residual_w(BesselParameters(0.0, 1.0, 1.0), grid) < 1e-5);

  // w == 1 with p = 0, b = 1 leaves c z^2
  const BesselParameters params(0.0, 1.0, Complex{2.0, 1.0});
  const auto e = ode_residual_w_extremum(params, [](Complex) { return Complex{1.0, 0.0}; }, grid);
  CHECK(e.value == doctest::Approx(std::sqrt(5.0) * 0.81).epsilon(1e-12));

  const EvaluationGrid on_cut({0.5}, 512);
  CHECK_THROWS_AS(ode_residual_w(BesselParameters(0.5, 1.0, 1.0), on_cut), DomainError);
}

TEST_CASE("certified order") {
  CHECK(certified_u_order(BesselParameters(0.5, 1.0, 1.0), 1.0) == 64);
  CHECK(certified_u_order(BesselParameters(0.5, 1.0, 40000.0), 1.0) > 64);
}
