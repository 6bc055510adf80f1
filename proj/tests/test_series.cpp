#include <cmath>
#include <random>

#include "doctest.h"
#include "gbessel/bessel.hpp"
#include "gbessel/error.hpp"
#include "gbessel/series.hpp"
#include "test_support.hpp"

using namespace gbessel;
using gbessel::testing::random_series;

TEST_CASE("add") {
  CHECK(add(PowerSeries{1.0, 1.0}, PowerSeries{1.0, -1.0}) == PowerSeries{2.0, 0.0});
  const PowerSeries s{0.5, Complex{1, 2}, -3.0};
  CHECK(add(s, PowerSeries::zero(3)) == s);
  CHECK(add(PowerSeries{0.0, 1.0, 0.0}, PowerSeries{0.0, 0.0, 1.0}) ==
        PowerSeries{0.0, 1.0, 1.0});
  // min-order truncation
  CHECK(add(PowerSeries{1.0, 2.0, 3.0}, PowerSeries{1.0}).order() == 1);
}

TEST_CASE("hadamard") {
  const PowerSeries s{0.25, Complex{-1, 3}, 7.0, Complex{0, -2}};
  CHECK(hadamard(PowerSeries::ones(4), s) == s);
  CHECK(hadamard(PowerSeries::zero(4), s) == PowerSeries::zero(4));
  CHECK(hadamard(PowerSeries{1.0, 2.0}, PowerSeries{3.0, 4.0}) == PowerSeries{3.0, 8.0});
}

TEST_CASE("hadamard is commutative and associative with exact identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 32);
    const auto b = random_series(rng, 32);
    const auto c = random_series(rng, 32);
    CHECK(hadamard(a, b) == hadamard(b, a));
    // Complex multiplication is commutative but not associative in floating
    // point; compare at rounding level.
    CHECK(max_coeff_diff(hadamard(hadamard(a, b), c), hadamard(a, hadamard(b, c))) < 1e-15);
    CHECK(hadamard(a, PowerSeries::ones(32)) == a);
  }
}

TEST_CASE("differentiate") {
  CHECK(differentiate(PowerSeries{0.0, 0.0, 1.0}) == PowerSeries{0.0, 2.0});
  CHECK(differentiate(PowerSeries{5.0, 0.0}) == PowerSeries{0.0});
  const auto d = differentiate(PowerSeries{1.0, -0.5, 1.0 / 24.0});
  CHECK(d.order() == 2);
  CHECK(std::abs(d[0] - (-0.5)) == 0.0);
  CHECK(std::abs(d[1] - 1.0 / 12.0) < 1e-17);
  CHECK_THROWS_AS(differentiate(PowerSeries{1.0}), DomainError);
}

TEST_CASE("differentiate agrees with central finite differences") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(2, 64);
  const double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_series(rng, order(rng));
    const auto ds = differentiate(s);
    const Complex z = gbessel::testing::random_point(rng, 0.5);
    const Complex fd = (evaluate(s, z + h) - evaluate(s, z - h)) / (2.0 * h);
    CHECK(std::abs(evaluate(ds, z) - fd) < 1e-6);
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(PowerSeries::constant(1.0, 5), Complex{0.3, -0.7}) == Complex{1.0, 0.0});

  // exact for low-order polynomials against hand expansion
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_series(rng, 3);
    const Complex z = gbessel::testing::random_point(rng, 1.0);
    const Complex hand = s[0] + s[1] * z + s[2] * z * z;
    CHECK(std::abs(evaluate(s, z) - hand) <= 1e-14);
  }

  const auto sinc = u_series(BesselParameters(0.5, 1.0, 1.0), 64);
  CHECK(std::abs(evaluate(sinc, 1.0) - std::sin(1.0)) < 1e-12);
  const auto cosine = u_series(BesselParameters(-0.5, 1.0, 1.0), 64);
  CHECK(std::abs(evaluate(cosine, -1.0) - std::cosh(1.0)) < 1e-12);

  CHECK_THROWS_AS(evaluate(sinc, Complex{NAN, 0.0}), DomainError);
  CHECK_THROWS_AS(evaluate(sinc, Complex{0.0, INFINITY}), DomainError);
}

TEST_CASE("series construction rejects bad input") {
  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), DomainError);
  CHECK_THROWS_AS(PowerSeries({1.0, Complex{NAN, 0}}), DomainError);
  CHECK_THROWS_AS(PowerSeries({1.0, 2.0}).divide_by_z(), DomainError);
  CHECK(PowerSeries({0.0, 2.0, 3.0}).divide_by_z() == PowerSeries{2.0, 3.0});
  CHECK(PowerSeries::koebe(4).is_normalized());
  CHECK_FALSE(PowerSeries({0.0, 2.0}).is_normalized());
}

TEST_CASE("tail_bound") {
  SUBCASE("u_{1/2,1,1} at N = 64") {
    const auto rule = u_coefficient_rule(BesselParameters(0.5, 1.0, 1.0));
    CHECK(tail_bound(rule, 64, 1.0) < 1e-80);
  }
  SUBCASE("exp-type coefficients") {
    const CoefficientRule inv_factorial = [](std::size_t n) {
      return Complex{1.0 / std::tgamma(static_cast<double>(n) + 1.0), 0.0};
    };
    const double expected = (1.0 / std::tgamma(21.0)) / (1.0 - 1.0 / 21.0);
    CHECK(tail_bound(inv_factorial, 20, 1.0) <= expected * (1.0 + 1e-14));
    CHECK(tail_bound(inv_factorial, 20, 1.0) >= expected * (1.0 - 1e-14));
  }
  SUBCASE("ratio >= 1 cannot be certified") {
    const CoefficientRule growing = [](std::size_t n) {
      return Complex{std::pow(2.0, static_cast<double>(n)), 0.0};
    };
    CHECK_THROWS_AS(tail_bound(growing, 10, 1.0), DomainError);
    // 1/n! at N = 0 has ratio 1
    const CoefficientRule inv_factorial = [](std::size_t n) {
      return Complex{1.0 / std::tgamma(static_cast<double>(n) + 1.0), 0.0};
    };
    CHECK_THROWS_AS(tail_bound(inv_factorial, 0, 1.0), DomainError);
  }
}

TEST_CASE("tail_bound is sound for u-series") {
  std::mt19937_64 rng(99);
  const BesselParameters panel[] = {{0.5, 1.0, 20.0}, {0.0, 2.0, Complex{4.0, 4.0}},
                                    {-0.5, 1.0, -12.0}};
  for (const auto& params : panel) {
    const auto rule = u_coefficient_rule(params);
    for (std::size_t n : {6u, 8u, 12u}) {
      const double bound = tail_bound(rule, n, 1.0);
      const auto short_s = u_series(params, n);
      const auto long_s = u_series(params, 2 * n);
      // the omitted terms alone, so rounding in the head does not swamp them
      const auto tail = subtract(long_s, short_s.resized(2 * n));
      for (int k = 0; k < 50; ++k) {
        const Complex z = gbessel::testing::random_point(rng, 1.0);
        CHECK(std::abs(evaluate(tail, z)) <= bound * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("evaluation grid") {
  CHECK_THROWS_AS(EvaluationGrid({0.5, 0.5}, 8), DomainError);
  CHECK_THROWS_AS(EvaluationGrid({0.5, 1.0}, 8), DomainError);
  CHECK_THROWS_AS(EvaluationGrid({0.5}, 0), DomainError);
  const auto g = EvaluationGrid::standard();
  CHECK(g.size() == 8 * 512);
  CHECK(g.max_radius() == doctest::Approx(0.9999));
}
