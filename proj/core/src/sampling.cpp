#include "lctfb/sampling.hpp"

#include <cmath>

#include "lctfb/error.hpp"
#include "lctfb/transform.hpp"

namespace lctfb {

namespace {

Signal with_parity(const Signal& x, int parity) {
  std::vector<cplx> out(x.samples().begin(), x.samples().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index n = x.start() + static_cast<Index>(i);
    if (((n % 2) + 2) % 2 != parity) out[i] = {0.0, 0.0};
  }
  return Signal(std::move(out), x.start(), x.period());
}

}  // namespace

Signal upsample(const Signal& x, int factor) {
  if (factor < 1) throw Error(ErrorCode::InvalidArgument, "upsampling factor must be >= 1");
  const auto L = static_cast<std::size_t>(factor);
  std::vector<cplx> out((x.size() - 1) * L + 1);
  const auto s = x.samples();
  for (std::size_t i = 0; i < s.size(); ++i) out[i * L] = s[i];
  return Signal(std::move(out), x.start() * factor, x.period() / factor);
}

Signal downsample(const Signal& x, int factor) {
  if (factor < 1) throw Error(ErrorCode::InvalidArgument, "downsampling factor must be >= 1");
  const Index first = ceil_div(x.start(), factor);
  const Index last = floor_div(x.last(), factor);
  const double period = x.period() * factor;
  if (last < first) return Signal::zeros(1, first, period);
  std::vector<cplx> out(static_cast<std::size_t>(last - first + 1));
  for (Index m = first; m <= last; ++m) out[static_cast<std::size_t>(m - first)] = x.at(m * factor);
  return Signal(std::move(out), first, period);
}

Signal lct_convolve(const Signal& h, const Signal& x, const LctParams& p) {
  if (!same_period(h.period(), x.period())) {
    throw Error(ErrorCode::PeriodMismatch, "LCT convolution needs equal sample periods");
  }
  const double two_alpha = 2.0 * time_chirp_rate(p, x.period());
  const Index start = h.start() + x.start();
  std::vector<cplx> out(h.size() + x.size() - 1);
  const auto hs = h.samples();
  const auto xs = x.samples();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index n = start + static_cast<Index>(i);
    cplx acc{0.0, 0.0};
    for (std::size_t kh = 0; kh < hs.size(); ++kh) {
      const Index k = h.start() + static_cast<Index>(kh);
      const Index m = n - k;
      if (m < x.start() || m >= x.end()) continue;
      const double cross = static_cast<double>(k * m);
      acc += hs[kh] * xs[static_cast<std::size_t>(m - x.start())] *
             std::polar(1.0, -two_alpha * cross);
    }
    out[i] = acc;
  }
  return Signal(std::move(out), start, x.period());
}

Signal delay_pow(const Signal& x, Index k, const LctParams& p) {
  const double alpha = time_chirp_rate(p, x.period());
  const Index start = x.start() + k;
  std::vector<cplx> out(x.samples().begin(), x.samples().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Index n = start + static_cast<Index>(i);
    out[i] *= std::polar(1.0, alpha * static_cast<double>(k * (k - 2 * n)));
  }
  return Signal(std::move(out), start, x.period());
}

PolyphasePair polyphase_split(const Signal& x, PolyphaseKind kind, const LctParams& p) {
  const Index shift = kind == PolyphaseKind::Type1 ? -1 : 1;
  Signal odd_bar = delay_pow(with_parity(x, 1), shift, p);
  return {downsample(with_parity(x, 0), 2), downsample(odd_bar, 2), kind};
}

Signal polyphase_merge(const PolyphasePair& pair, const LctParams& p) {
  if (!same_period(pair.comp0.period(), pair.comp1.period())) {
    throw Error(ErrorCode::InconsistentPair, "polyphase branches have different periods");
  }
  const Index shift = pair.kind == PolyphaseKind::Type1 ? 1 : -1;
  Signal even = upsample(pair.comp0, 2);
  Signal odd = delay_pow(upsample(pair.comp1, 2), shift, p);
  return add(even, odd);
}

}  // namespace lctfb
