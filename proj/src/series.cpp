#include "gbessel/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gbessel/error.hpp"

namespace gbessel {

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("power series must have order >= 1");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!is_finite(coeffs_[n]))
      throw DomainError("non-finite coefficient at index " + std::to_string(n));
  }
}

PowerSeries::PowerSeries(std::initializer_list<Complex> coeffs)
    : PowerSeries(std::vector<Complex>(coeffs)) {}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Complex>(order));
}

PowerSeries PowerSeries::constant(Complex value, std::size_t order) {
  std::vector<Complex> c(order);
  if (!c.empty()) c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::ones(std::size_t order) {
  return PowerSeries(std::vector<Complex>(order, Complex{1.0, 0.0}));
}

PowerSeries PowerSeries::koebe(std::size_t order) {
  std::vector<Complex> c(order, Complex{1.0, 0.0});
  if (!c.empty()) c[0] = 0.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::quadratic(Complex a, std::size_t order) {
  if (order < 3) throw DomainError("quadratic preset needs order >= 3");
  std::vector<Complex> c(order);
  c[1] = 1.0;
  c[2] = a;
  return PowerSeries(std::move(c));
}

bool PowerSeries::is_normalized() const noexcept {
  return coeffs_.size() >= 2 && coeffs_[0] == Complex{} && coeffs_[1] == Complex{1.0, 0.0};
}

PowerSeries PowerSeries::dilate(Complex r) const {
  std::vector<Complex> c(coeffs_);
  Complex power{1.0, 0.0};
  for (auto& x : c) {
    x *= power;
    power *= r;
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scaled(Complex k) const {
  std::vector<Complex> c(coeffs_);
  for (auto& x : c) x *= k;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::divide_by_z() const {
  if (coeffs_.size() < 2) throw DomainError("divide_by_z needs order >= 2");
  if (coeffs_[0] != Complex{})
    throw DomainError("divide_by_z: constant term is not zero");
  return PowerSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::multiply_by_z() const {
  std::vector<Complex> c(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::resized(std::size_t order) const {
  std::vector<Complex> c(order);
  std::copy_n(coeffs_.begin(), std::min(order, coeffs_.size()), c.begin());
  return PowerSeries(std::move(c));
}

namespace {

template <typename Op>
PowerSeries zip(const PowerSeries& a, const PowerSeries& b, Op op) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = op(a.coeffs()[k], b.coeffs()[k]);
  return PowerSeries(std::move(c));
}

}  // namespace

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  return zip(a, b, [](Complex x, Complex y) { return x + y; });
}

PowerSeries subtract(const PowerSeries& a, const PowerSeries& b) {
  return zip(a, b, [](Complex x, Complex y) { return x - y; });
}

PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b) {
  return zip(a, b, [](Complex x, Complex y) { return x * y; });
}

PowerSeries differentiate(const PowerSeries& s) {
  if (s.order() < 2) throw DomainError("differentiate needs order >= 2");
  std::vector<Complex> c(s.order() - 1);
  for (std::size_t n = 0; n + 1 < s.order(); ++n)
    c[n] = static_cast<double>(n + 1) * s.coeffs()[n + 1];
  return PowerSeries(std::move(c));
}

Complex evaluate(const PowerSeries& s, Complex z) {
  if (!is_finite(z)) throw DomainError("evaluate: non-finite argument");
  const auto c = s.coeffs();
  Complex acc = c.back();
  for (std::size_t n = c.size() - 1; n-- > 0;) acc = acc * z + c[n];
  return acc;
}

double max_coeff_diff(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    worst = std::max(worst, std::abs(a.coeffs()[k] - b.coeffs()[k]));
  return worst;
}

double tail_bound(const CoefficientRule& rule, std::size_t n_terms, double radius) {
  if (!(radius > 0.0) || radius > 1.0)
    throw DomainError("tail_bound: radius must lie in (0, 1]");
  constexpr std::size_t kWindow = 8;
  const Complex first = rule(n_terms);
  const double lead = std::abs(first);
  if (lead == 0.0)
    throw DomainError("tail_bound: first omitted coefficient is zero, ratio undefined");

  double ratio = 0.0;
  double prev = lead;
  for (std::size_t k = 1; k <= kWindow; ++k) {
    const double next = std::abs(rule(n_terms + k));
    ratio = std::max(ratio, next / prev);
    if (next == 0.0) break;
    prev = next;
  }
  const double q = ratio * radius;
  if (q >= 1.0)
    throw DomainError("tail_bound: ratio >= 1 at N = " + std::to_string(n_terms) +
                      ", cannot certify");
  return lead * std::pow(radius, static_cast<double>(n_terms)) / (1.0 - q);
}

EvaluationGrid::EvaluationGrid(std::vector<double> radii, std::size_t angles_per_radius)
    : radii_(std::move(radii)), angles_(angles_per_radius) {
  if (radii_.empty()) throw DomainError("grid needs at least one radius");
  if (angles_ == 0) throw DomainError("grid needs at least one angle");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0 && radii_[i] < 1.0))
      throw DomainError("grid radii must lie in (0, 1)");
    if (i > 0 && !(radii_[i] > radii_[i - 1]))
      throw DomainError("grid radii must be strictly increasing");
  }
}

EvaluationGrid EvaluationGrid::standard() {
  return EvaluationGrid({0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 0.9999}, 512);
}

double EvaluationGrid::angle(std::size_t k) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(angles_);
}

Complex EvaluationGrid::point(std::size_t radius_index, std::size_t angle_index) const {
  return std::polar(radii_.at(radius_index), angle(angle_index));
}

}  // namespace gbessel
