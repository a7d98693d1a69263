#include "lctfb/signal.hpp"

#include <algorithm>
#include <cmath>

#include "lctfb/error.hpp"

namespace lctfb {

Signal::Signal(std::vector<cplx> samples, Index start, double period)
    : samples_(std::move(samples)), start_(start), period_(period) {
  if (samples_.empty()) throw Error(ErrorCode::InvalidSignal, "signal has no samples");
  if (!std::isfinite(period_) || !(period_ > 0.0)) {
    throw Error(ErrorCode::InvalidSignal, "period must be finite and positive");
  }
  for (const cplx& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidSignal, "non-finite sample");
    }
  }
}

Signal Signal::zeros(std::size_t length, Index start, double period) {
  return Signal(std::vector<cplx>(std::max<std::size_t>(length, 1)), start, period);
}

Signal Signal::impulse(Index at, double period, cplx value) {
  return Signal({value}, at, period);
}

cplx Signal::at(Index n) const noexcept {
  if (n < start_ || n >= end()) return {0.0, 0.0};
  return samples_[static_cast<std::size_t>(n - start_)];
}

double Signal::energy() const noexcept {
  double e = 0.0;
  for (const cplx& v : samples_) e += std::norm(v);
  return e;
}

double max_abs_diff(const Signal& x, const Signal& y) {
  const Index lo = std::min(x.start(), y.start());
  const Index hi = std::max(x.end(), y.end());
  double m = 0.0;
  for (Index n = lo; n < hi; ++n) m = std::max(m, std::abs(x.at(n) - y.at(n)));
  return m;
}

bool same_period(double t1, double t2) noexcept {
  return std::abs(t1 - t2) <= 1e-12 * std::max(std::abs(t1), std::abs(t2));
}

Signal add(const Signal& x, const Signal& y) {
  if (!same_period(x.period(), y.period())) {
    throw Error(ErrorCode::PeriodMismatch, "cannot add signals with different periods");
  }
  const Index lo = std::min(x.start(), y.start());
  const Index hi = std::max(x.end(), y.end());
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo));
  for (Index n = lo; n < hi; ++n) out[static_cast<std::size_t>(n - lo)] = x.at(n) + y.at(n);
  return Signal(std::move(out), lo, x.period());
}

}  // namespace lctfb
