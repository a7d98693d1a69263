#include "lctfb/transform.hpp"

#include <cmath>

#include "lctfb/error.hpp"

namespace lctfb {

namespace {

std::vector<cplx> chirped_samples(const Signal& x, const LctParams& p) {
  const double alpha = time_chirp_rate(p, x.period());
  std::vector<cplx> out(x.size());
  const auto s = x.samples();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double n = static_cast<double>(x.start() + static_cast<Index>(i));
    out[i] = s[i] * std::polar(1.0, alpha * n * n);
  }
  return out;
}

// sum_i v[i] exp(-j (start + i) w), accumulated in index order.
cplx fourier_sum(const std::vector<cplx>& v, Index start, double omega) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double n = static_cast<double>(start + static_cast<Index>(i));
    acc += v[i] * std::polar(1.0, -n * omega);
  }
  return acc;
}

}  // namespace

void FrequencyGrid::validate() const {
  if (count < 2) throw Error(ErrorCode::InvalidGrid, "grid needs at least 2 points");
  if (!std::isfinite(origin) || !std::isfinite(span) || !(span > 0.0)) {
    throw Error(ErrorCode::InvalidGrid, "grid span must be finite and positive");
  }
}

double time_chirp_rate(const LctParams& p, double period) noexcept {
  return p.a() * period * period / (2.0 * p.b());
}

double freq_chirp_rate(const LctParams& p, double period) noexcept {
  return p.d() * p.b() / (2.0 * period * period);
}

cplx time_chirp(Index n, const LctParams& p, double period) noexcept {
  const double nd = static_cast<double>(n);
  return std::polar(1.0, time_chirp_rate(p, period) * nd * nd);
}

cplx freq_chirp(double omega, const LctParams& p, double period) noexcept {
  return std::polar(1.0, freq_chirp_rate(p, period) * omega * omega);
}

cplx dtlct_prefactor(const LctParams& p) noexcept {
  return std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi * p.b()), -std::numbers::pi / 4.0);
}

cplx quasi_period_factor(double omega, const LctParams& p, double period) noexcept {
  return std::polar(1.0, p.d() * p.b() * 2.0 * std::numbers::pi * (omega + std::numbers::pi) /
                             (period * period));
}

cplx dtlct_at(const Signal& x, const LctParams& p, double omega) {
  const auto chirped = chirped_samples(x, p);
  return dtlct_prefactor(p) * freq_chirp(omega, p, x.period()) *
         fourier_sum(chirped, x.start(), omega);
}

Spectrum dtlct(const Signal& x, const LctParams& p, const FrequencyGrid& grid) {
  grid.validate();
  const auto chirped = chirped_samples(x, p);
  const cplx pre = dtlct_prefactor(p);
  Spectrum out{grid, std::vector<cplx>(grid.count), x.period()};
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double w = grid.omega(k);
    out.values[k] = pre * freq_chirp(w, p, x.period()) * fourier_sum(chirped, x.start(), w);
  }
  return out;
}

cplx dtft_at(const Signal& x, double omega) {
  cplx acc{0.0, 0.0};
  const auto s = x.samples();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double n = static_cast<double>(x.start() + static_cast<Index>(i));
    acc += s[i] * cplx(std::cos(n * omega), -std::sin(n * omega));
  }
  return acc;
}

}  // namespace lctfb
