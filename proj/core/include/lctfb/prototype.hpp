#pragma once

#include <complex>
#include <vector>

#include "lctfb/signal.hpp"

namespace lctfb {

/// Zero-phase half-band filter f(-N..N), stored at taps[n + N].
/// f(0) = 1/2 and f(2k) = 0 for k != 0, hence F(w) + F(w + pi) = 1.
class HalfBand {
 public:
  /// Validates symmetry, the half-band zero pattern and f(0) = 1/2.
  /// Throws Error{InvalidOrder} or Error{InvalidArgument}.
  explicit HalfBand(std::vector<double> taps);

  int half_order() const noexcept { return static_cast<int>(taps_.size() / 2); }
  int order() const noexcept { return static_cast<int>(taps_.size()) - 1; }
  double tap(int n) const noexcept;
  const std::vector<double>& taps() const noexcept { return taps_; }

  /// F(e^{jw}) (real for a zero-phase filter).
  double response(double omega) const noexcept;
  /// Minimum of F over [0, pi], grid search refined by golden section.
  double min_response() const;

 private:
  std::vector<double> taps_;
};

/// Windowed ideal half-band: f(n) = 1/2 sinc(n/2) sinc(t n / 2pi) w(n), with t the
/// transition bandwidth and w a Kaiser window of shape `shape`. Odd taps are
/// rescaled so F(0) = 1, F(pi) = 0, and F is lifted to be nonnegative
/// (f(0) += eps, eps = |min F| + 1e-12, then renormalised).
/// `order` = 2N must satisfy order = 2 (mod 4) so N is odd; otherwise
/// Error{InvalidOrder}. transition in (0, pi/2), shape >= 0.
HalfBand design_halfband(int order, double transition, double shape);

/// Real minimum-phase h with h * reverse(h) = f, length N + 1.
/// Throws Error{NegativeSpectrum} if F dips below zero beyond tolerance,
/// Error{RootFindingFailure} if the factor cannot be refined to 1e-8.
std::vector<double> spectral_factor(const HalfBand& f);

/// sqrt(2) * spectral_factor(f): unit energy, so |H|^2 + |H(w + pi)|^2 = 2.
/// Returned as a Signal on 0..N with the requested period.
Signal orthonormal_prototype(const HalfBand& f, double period);

/// Roots of sum_k coeffs[k] z^{-k} (as a polynomial in z). Leading/trailing
/// zero coefficients are trimmed.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

}  // namespace lctfb
