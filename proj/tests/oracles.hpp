#pragma once

// Test-only reference implementations. Each one evaluates a defining formula
// directly and shares no code path with the library routine it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "lctfb/lct_params.hpp"
#include "lctfb/signal.hpp"

namespace lctfb::testing {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// X(w) = (1/sqrt(j 2 pi b)) sum_n x(n) exp[(j/2)((a/b) n^2 T^2 - 2 n w + (d b / T^2) w^2)],
/// one exponential per term, principal root written out as exp(-j pi/4)/sqrt(2 pi b).
inline cplx brute_dtlct(const Signal& x, const LctParams& p, double omega) {
  const double T = x.period();
  const cplx pre = std::exp(cplx(0.0, -kPi / 4.0)) / std::sqrt(2.0 * kPi * p.b());
  cplx acc{0.0, 0.0};
  for (Index n = x.start(); n < x.end(); ++n) {
    const double nd = static_cast<double>(n);
    const double arg = 0.5 * ((p.a() / p.b()) * nd * nd * T * T - 2.0 * nd * omega +
                              (p.d() * p.b() / (T * T)) * omega * omega);
    acc += x.at(n) * std::exp(cplx(0.0, arg));
  }
  return pre * acc;
}

inline cplx brute_dtft(const Signal& x, double omega) {
  cplx acc{0.0, 0.0};
  for (Index n = x.start(); n < x.end(); ++n) {
    acc += x.at(n) * std::exp(cplx(0.0, -static_cast<double>(n) * omega));
  }
  return acc;
}

/// Ordinary linear convolution with explicit supports.
inline Signal classical_convolve(const Signal& h, const Signal& x) {
  std::vector<cplx> out(h.size() + x.size() - 1);
  for (Index k = h.start(); k < h.end(); ++k) {
    for (Index m = x.start(); m < x.end(); ++m) {
      out[static_cast<std::size_t>(k + m - h.start() - x.start())] += h.at(k) * x.at(m);
    }
  }
  return Signal(std::move(out), h.start() + x.start(), x.period());
}

/// Classical QMF alternating flip h1(k) = (-1)^{N-k} conj(h0(N-k)).
inline Signal classical_alternating_flip(const Signal& h0, int N) {
  std::vector<cplx> out(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    out[static_cast<std::size_t>(k)] = ((N - k) % 2 == 0 ? 1.0 : -1.0) * std::conj(h0.at(N - k));
  }
  return Signal(std::move(out), 0, h0.period());
}

/// Classical time-reversed conjugate g(k) = conj(h(N-k)).
inline Signal classical_time_reverse(const Signal& h, int N) {
  std::vector<cplx> out(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) out[static_cast<std::size_t>(k)] = std::conj(h.at(N - k));
  return Signal(std::move(out), 0, h.period());
}

/// Classical two-channel bank x -> (h_i * x) down 2 -> up 2 -> g_i * . -> sum.
inline Signal classical_bank(const Signal& x, const Signal& h0, const Signal& h1, const Signal& g0,
                             const Signal& g1) {
  auto channel = [&](const Signal& h, const Signal& g) {
    Signal u = classical_convolve(h, x);
    Index first = u.start() % 2 == 0 ? u.start() : u.start() + 1;
    std::vector<cplx> v(static_cast<std::size_t>(u.end() - first), cplx{});
    for (Index n = first; n < u.end(); n += 2) v[static_cast<std::size_t>(n - first)] = u.at(n);
    return classical_convolve(g, Signal(std::move(v), first, x.period()));
  };
  Signal a = channel(h0, g0);
  Signal b = channel(h1, g1);
  Index lo = std::min(a.start(), b.start());
  Index hi = std::max(a.end(), b.end());
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo));
  for (Index n = lo; n < hi; ++n) out[static_cast<std::size_t>(n - lo)] = a.at(n) + b.at(n);
  return Signal(std::move(out), lo, x.period());
}

/// Seeded complex samples for property tests.
inline Signal random_complex(std::mt19937_64& rng, std::size_t length, double period, Index start = 0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> out(length);
  for (auto& v : out) {
    const double re = u(rng);
    v = {re, u(rng)};
  }
  return Signal(std::move(out), start, period);
}

/// Random unimodular parameters with b > 0 (FrFT or general LCT).
inline LctParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < 0.5) return LctParams::frft(0.15 + (kPi - 0.3) * u(rng));
  const double a = 0.3 + 1.5 * u(rng);
  const double b = 0.2 + 1.5 * u(rng);
  const double c = -1.0 + 2.0 * u(rng);
  return LctParams::validate(a, b, c, (1.0 + b * c) / a);
}

inline double max_relative(const std::vector<cplx>& got, const std::vector<cplx>& want) {
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    err = std::max(err, std::abs(got[i] - want[i]));
    scale = std::max(scale, std::abs(want[i]));
  }
  return scale > 0.0 ? err / scale : err;
}

}  // namespace lctfb::testing
