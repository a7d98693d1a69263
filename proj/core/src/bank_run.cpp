#include "lctfb/bank_run.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lctfb/error.hpp"

namespace lctfb {

namespace {

PolyphaseKind opposite(PolyphaseKind k) {
  return k == PolyphaseKind::Type1 ? PolyphaseKind::Type2 : PolyphaseKind::Type1;
}

// One branch product sum: a0 * b0 + a1 * b1 under LCT convolution.
Signal branch_sum(const Signal& a0, const Signal& b0, const Signal& a1, const Signal& b1,
                  const LctParams& p) {
  return add(lct_convolve(a0, b0, p), lct_convolve(a1, b1, p));
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  const auto ok = [](const std::optional<double>& e, double tol) { return !e || *e <= tol; };
  return ok(max_ps_error, tolerances.ps) && ok(max_pu_error, tolerances.pu) &&
         ok(max_pr_error, tolerances.pr);
}

Subbands analysis(const Signal& x, const FilterBank& fb) {
  if (!same_period(x.period(), fb.period())) {
    throw Error(ErrorCode::PeriodMismatch, "input period differs from the filter bank period");
  }
  return {downsample(lct_convolve(fb.h0, x, fb.params), 2),
          downsample(lct_convolve(fb.h1, x, fb.params), 2)};
}

Signal synthesis(const Subbands& y, const FilterBank& fb) {
  if (!same_period(y.y0.period(), y.y1.period())) {
    throw Error(ErrorCode::PeriodMismatch, "sub-band periods differ");
  }
  if (!same_period(y.y0.period(), 2.0 * fb.period())) {
    throw Error(ErrorCode::PeriodMismatch, "sub-band period must be twice the bank period");
  }
  return branch_sum(fb.g0, upsample(y.y0, 2), fb.g1, upsample(y.y1, 2), fb.params);
}

VerificationReport run_pr_check(const Signal& x, const FilterBank& fb, const Tolerances& tol) {
  const Signal xhat = synthesis(analysis(x, fb), fb);
  const Signal expected = delay_pow(x, fb.order, fb.params);

  double magnitude = 0.0;
  const Index lo = std::min(xhat.start(), expected.start());
  const Index hi = std::max(xhat.end(), expected.end());
  for (Index n = lo; n < hi; ++n) {
    magnitude = std::max(magnitude, std::abs(std::abs(xhat.at(n)) - std::abs(x.at(n - fb.order))));
  }

  VerificationReport r;
  r.max_pr_error = max_abs_diff(xhat, expected);
  r.max_pr_magnitude_error = magnitude;
  r.tolerances = tol;
  return r;
}

VerificationReport verify_bank(const FilterBank& fb, const FrequencyGrid& grid,
                               const Tolerances& tol, std::uint64_t seed,
                               std::size_t probe_length) {
  VerificationReport r = run_pr_check(random_signal(probe_length, fb.period(), seed), fb, tol);
  r.max_ps_error = power_symmetry_check(fb.h0, fb.params, grid);
  r.max_pu_error = paraunitary_check(fb, grid);
  r.grid = grid;
  r.seed = seed;
  return r;
}

Signal polyphase_run(const Signal& x, const FilterBank& fb, PolyphaseKind signal_kind) {
  if (!same_period(x.period(), fb.period())) {
    throw Error(ErrorCode::PeriodMismatch, "input period differs from the filter bank period");
  }
  const LctParams& p = fb.params;
  const PolyphaseKind filter_kind = opposite(signal_kind);

  const PolyphasePair xp = polyphase_split(x, signal_kind, p);
  const PolyphasePair h0p = polyphase_split(fb.h0, filter_kind, p);
  const PolyphasePair h1p = polyphase_split(fb.h1, filter_kind, p);
  const Signal y0 = branch_sum(h0p.comp0, xp.comp0, h0p.comp1, xp.comp1, p);
  const Signal y1 = branch_sum(h1p.comp0, xp.comp0, h1p.comp1, xp.comp1, p);

  const PolyphasePair g0p = polyphase_split(fb.g0, signal_kind, p);
  const PolyphasePair g1p = polyphase_split(fb.g1, signal_kind, p);
  PolyphasePair out{branch_sum(g0p.comp0, y0, g1p.comp0, y1, p),
                    branch_sum(g0p.comp1, y0, g1p.comp1, y1, p), signal_kind};
  return polyphase_merge(out, p);
}

Signal generate_multitone(const std::vector<double>& peaks, std::size_t length,
                          const LctParams& p, double period) {
  if (peaks.empty()) throw Error(ErrorCode::InvalidArgument, "at least one peak is required");
  if (length == 0) throw Error(ErrorCode::InvalidArgument, "length must be positive");
  for (double w : peaks) {
    if (!(w >= 0.0 && w < 2.0 * std::numbers::pi)) {
      throw Error(ErrorCode::InvalidArgument, "peaks must lie in [0, 2 pi)");
    }
  }
  std::vector<cplx> out(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto n = static_cast<Index>(i);
    cplx tones{0.0, 0.0};
    for (double w : peaks) tones += std::polar(1.0, w * static_cast<double>(n));
    out[i] = std::conj(time_chirp(n, p, period)) * tones;
  }
  return Signal(std::move(out), 0, period);
}

Signal random_signal(std::size_t length, double period, std::uint64_t seed, Index start) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
  std::vector<cplx> out(std::max<std::size_t>(length, 1));
  for (cplx& v : out) {
    const double re = dist(rng);
    v = {re, dist(rng)};
  }
  return Signal(std::move(out), start, period);
}

}  // namespace lctfb
