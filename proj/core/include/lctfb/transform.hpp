#pragma once

#include <numbers>
#include <vector>

#include "lctfb/lct_params.hpp"
#include "lctfb/signal.hpp"

namespace lctfb {

/// Uniform frequency grid omega_k = origin + k * span / count, k = 0..count-1.
struct FrequencyGrid {
  std::size_t count = 512;
  double origin = 0.0;
  double span = 2.0 * std::numbers::pi;

  /// Throws Error{InvalidGrid} unless count >= 2 and span > 0.
  void validate() const;
  double omega(std::size_t k) const noexcept {
    return origin + static_cast<double>(k) * span / static_cast<double>(count);
  }
  double step() const noexcept { return span / static_cast<double>(count); }
};

struct Spectrum {
  FrequencyGrid grid;
  std::vector<cplx> values;
  double period = 1.0;
};

// Scalar building blocks of the DTLCT kernel
//   X(w) = P * sum_n x(n) exp[(j/2)((a/b) n^2 T^2 - 2 n w + (d b / T^2) w^2)],
// with P = sqrt(1/(j 2 pi b)) taken on the principal branch, i.e.
// P = exp(-j pi/4) / sqrt(2 pi b).

/// Coefficient alpha of the time chirp exp(j alpha n^2): alpha = a T^2 / (2b).
double time_chirp_rate(const LctParams& p, double period) noexcept;

/// Coefficient beta of the frequency chirp exp(j beta w^2): beta = d b / (2 T^2).
double freq_chirp_rate(const LctParams& p, double period) noexcept;

/// exp(j a T^2 n^2 / (2b)).
cplx time_chirp(Index n, const LctParams& p, double period) noexcept;

/// exp(j d b w^2 / (2 T^2)).
cplx freq_chirp(double omega, const LctParams& p, double period) noexcept;

/// The constant prefactor P = sqrt(1/(j 2 pi b)).
cplx dtlct_prefactor(const LctParams& p) noexcept;

/// X(w + 2 pi) = quasi_period_factor(w) X(w) = exp(j d b 2 pi (w + pi) / T^2) X(w).
cplx quasi_period_factor(double omega, const LctParams& p, double period) noexcept;

/// DTLCT at a single frequency. Summation runs over increasing n, so results
/// are bit-reproducible for identical inputs.
cplx dtlct_at(const Signal& x, const LctParams& p, double omega);

/// DTLCT over a grid by direct O(len * K) summation.
Spectrum dtlct(const Signal& x, const LctParams& p, const FrequencyGrid& grid);

/// Ordinary DTFT sum_n x(n) exp(-j n w). Independent of the LCT path; used as
/// the classical reference in checks.
cplx dtft_at(const Signal& x, double omega);

}  // namespace lctfb
