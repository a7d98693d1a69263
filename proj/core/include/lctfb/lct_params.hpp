#pragma once

#include <complex>

namespace lctfb {

using cplx = std::complex<double>;

/// Unimodular LCT parameter matrix [[a, b], [c, d]] restricted to b > 0.
///
/// Instances are only obtainable through the validating factories, so every
/// LctParams in flight satisfies |ad - bc - 1| <= kUnimodularTolerance and b > 0.
class LctParams {
 public:
  static constexpr double kUnimodularTolerance = 1e-12;

  /// Throws Error{NonUnimodular} or Error{NonPositiveB}.
  static LctParams validate(double a, double b, double c, double d);

  /// Fractional Fourier transform at `angle` radians: (cos, sin, -sin, cos).
  /// The angle must lie in (0, pi) so that b = sin(angle) > 0.
  static LctParams frft(double angle);

  /// The ordinary Fourier case (0, 1, -1, 0).
  static LctParams fourier();

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  friend bool operator==(const LctParams&, const LctParams&) = default;

 private:
  LctParams(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}

  double a_;
  double b_;
  double c_;
  double d_;
};

}  // namespace lctfb
