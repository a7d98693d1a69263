#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lctfb/filter_bank.hpp"

namespace lctfb {

struct Tolerances {
  double ps = 1e-8;
  double pu = 1e-8;
  double pr = 1e-9;
};

struct VerificationReport {
  std::optional<double> max_ps_error;
  std::optional<double> max_pu_error;
  std::optional<double> max_pr_error;
  /// |x_hat(n)| against |x(n - N)|, the magnitude-only form of the PR claim.
  std::optional<double> max_pr_magnitude_error;
  FrequencyGrid grid;
  Tolerances tolerances;
  std::optional<std::uint64_t> seed;

  /// True iff every populated error is within its tolerance.
  bool passed() const noexcept;
};

struct Subbands {
  Signal y0;
  Signal y1;
};

/// y_i = downsample(lct_convolve(h_i, x), 2). Throws Error{PeriodMismatch}.
Subbands analysis(const Signal& x, const FilterBank& fb);

/// x_hat = g0 * (y0 up 2) + g1 * (y1 up 2). Throws Error{PeriodMismatch}.
Signal synthesis(const Subbands& y, const FilterBank& fb);

/// Runs the bank and reports max_n |x_hat(n) - D^N[x](n)| over the full
/// support of x_hat.
VerificationReport run_pr_check(const Signal& x, const FilterBank& fb,
                                const Tolerances& tol = {});

/// Power-symmetry, paraunitarity and a seeded random PR probe in one report.
VerificationReport verify_bank(const FilterBank& fb, const FrequencyGrid& grid,
                               const Tolerances& tol = {}, std::uint64_t seed = 20260101,
                               std::size_t probe_length = 256);

/// Same output as synthesis(analysis(x)) computed through the polyphase
/// branches: x is split with `signal_kind`, the analysis filters with the
/// opposite kind, the synthesis filters with `signal_kind`; each channel runs
/// at period 2T and the result is merged.
Signal polyphase_run(const Signal& x, const FilterBank& fb,
                     PolyphaseKind signal_kind = PolyphaseKind::Type1);

/// x(n) = sum_p conj(time_chirp(n)) exp(j w_p n), n = 0..length-1, so |X(w)|
/// peaks at each w_p. Peaks must lie in [0, 2 pi).
Signal generate_multitone(const std::vector<double>& peaks, std::size_t length,
                          const LctParams& p, double period);

/// Seeded complex Gaussian samples on 0..length-1.
Signal random_signal(std::size_t length, double period, std::uint64_t seed, Index start = 0);

}  // namespace lctfb
