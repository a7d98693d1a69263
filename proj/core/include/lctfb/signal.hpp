#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lctfb/lct_params.hpp"

namespace lctfb {

using Index = std::int64_t;

/// Finite complex sequence x(n), n in [start, start + size), sampled with
/// period T. Samples outside the stored support are implicitly zero.
///
/// Chirp factors in this library are always evaluated at the absolute index
/// n, never at the buffer offset, so shifting `start` changes phases.
class Signal {
 public:
  /// Throws Error{InvalidSignal} for empty or non-finite samples and for a
  /// non-positive or non-finite period.
  Signal(std::vector<cplx> samples, Index start, double period);

  static Signal zeros(std::size_t length, Index start, double period);
  static Signal impulse(Index at, double period, cplx value = 1.0);

  std::span<const cplx> samples() const noexcept { return samples_; }
  std::span<cplx> samples() noexcept { return samples_; }
  Index start() const noexcept { return start_; }
  /// One past the last stored index.
  Index end() const noexcept { return start_ + static_cast<Index>(samples_.size()); }
  Index last() const noexcept { return end() - 1; }
  std::size_t size() const noexcept { return samples_.size(); }
  double period() const noexcept { return period_; }

  /// Zero-extended access.
  cplx at(Index n) const noexcept;

  double energy() const noexcept;

 private:
  std::vector<cplx> samples_;
  Index start_;
  double period_;
};

/// max_n |x(n) - y(n)| over the union of both supports (zero extension).
double max_abs_diff(const Signal& x, const Signal& y);

/// Relative period equality used for every PeriodMismatch check.
bool same_period(double t1, double t2) noexcept;

/// Pointwise sum over the union of supports. Periods must match.
Signal add(const Signal& x, const Signal& y);

/// Floor / ceiling integer division for possibly negative numerators.
constexpr Index floor_div(Index num, Index den) noexcept {
  Index q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}
constexpr Index ceil_div(Index num, Index den) noexcept { return -floor_div(-num, den); }

}  // namespace lctfb
