#pragma once

// Truncated complex power series about 0.
//
// A PowerSeries of order N holds the Taylor coefficients c_0 .. c_{N-1}.
// Binary operations truncate to the smaller order of their operands; the
// result's order() records the truncation.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace gbessel {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;

bool is_finite(Complex z) noexcept;

class PowerSeries {
 public:
  /// Throws DomainError if `coeffs` is empty or holds a non-finite value.
  explicit PowerSeries(std::vector<Complex> coeffs);
  PowerSeries(std::initializer_list<Complex> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(Complex value, std::size_t order);
  /// All coefficients equal to one: the Hadamard identity, and the
  /// expansion of 1/(1-z).
  static PowerSeries ones(std::size_t order);
  /// z/(1-z) truncated to `order`, i.e. coefficients 0, 1, 1, 1, ...
  static PowerSeries koebe(std::size_t order);
  /// z + a z^2 padded with zeros to `order` (order >= 3).
  static PowerSeries quadratic(Complex a, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t n) const { return coeffs_.at(n); }
  /// Coefficient n, or zero past the truncation.
  Complex coeff_or_zero(std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  /// Class-A normalization: c_0 == 0 and c_1 == 1 exactly.
  bool is_normalized() const noexcept;

  /// Coefficients rescaled so that s(z) -> s(r z).
  PowerSeries dilate(Complex r) const;
  /// s(z) * k, coefficientwise.
  PowerSeries scaled(Complex k) const;
  /// s(z) / z as an index shift. Throws DomainError if c_0 != 0 or order < 2.
  PowerSeries divide_by_z() const;
  /// z * s(z); the order grows by one.
  PowerSeries multiply_by_z() const;
  /// Same series, truncated (or zero-padded) to `order`.
  PowerSeries resized(std::size_t order) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries subtract(const PowerSeries& a, const PowerSeries& b);
/// Termwise (convolution) product of Taylor coefficients.
PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b);
/// Requires order >= 2; the result has order - 1.
PowerSeries differentiate(const PowerSeries& s);
/// Horner evaluation. Throws DomainError on non-finite z.
Complex evaluate(const PowerSeries& s, Complex z);

/// Largest coefficient discrepancy over the common order.
double max_coeff_diff(const PowerSeries& a, const PowerSeries& b);

using CoefficientRule = std::function<Complex(std::size_t)>;

/// Upper bound on |sum_{n>=N} c_n z^n| over |z| <= radius.
///
/// Majorizes the tail by a geometric series started at the first omitted
/// term. The ratio q = radius * max |c_{n+1}/c_n| is taken over a short
/// window past N; rules in this library have monotonically shrinking
/// ratios (factorial decay) so the window maximum is the tail maximum.
/// Throws DomainError when q >= 1 or c_N == 0 (nothing to certify with).
double tail_bound(const CoefficientRule& rule, std::size_t n_terms,
                  double radius);

/// Discretization of the open unit disk by concentric circles.
class EvaluationGrid {
 public:
  /// Radii must lie in (0, 1) and be strictly increasing.
  EvaluationGrid(std::vector<double> radii, std::size_t angles_per_radius);

  /// 8 radii from 0.1 to 0.9999, 512 angles each.
  static EvaluationGrid standard();

  std::span<const double> radii() const noexcept { return radii_; }
  std::size_t angles() const noexcept { return angles_; }
  std::size_t size() const noexcept { return radii_.size() * angles_; }
  double max_radius() const noexcept { return radii_.back(); }

  double angle(std::size_t k) const noexcept;
  Complex point(std::size_t radius_index, std::size_t angle_index) const;

 private:
  std::vector<double> radii_;
  std::size_t angles_;
};

}  // namespace gbessel
