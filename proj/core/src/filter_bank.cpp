#include "lctfb/filter_bank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lctfb/error.hpp"

namespace lctfb {

namespace {

constexpr double kPi = std::numbers::pi;

void require_causal_support(const Signal& h, int order, const char* what) {
  if (h.start() < 0 || h.last() > order) {
    throw Error(ErrorCode::InvalidSupport,
                std::string(what) + " must be supported on 0.." + std::to_string(order));
  }
}

FrequencyGrid shifted(const FrequencyGrid& g, double by) {
  return {g.count, g.origin + by, g.span};
}

// Power-symmetry deviation given |H(w)|^2 + |H(w+pi)|^2 already scaled to the
// classical normalization.
double ps_deviation(double classical_sum, double level) {
  return std::abs(classical_sum / level - 1.0);
}

}  // namespace

Signal lift_prototype(const Signal& h, const LctParams& p) {
  const double alpha = time_chirp_rate(p, h.period());
  std::vector<cplx> out(h.samples().begin(), h.samples().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto n = static_cast<double>(h.start() + static_cast<Index>(i));
    out[i] *= std::polar(1.0, -alpha * n * n);
  }
  return Signal(std::move(out), h.start(), h.period());
}

Signal derive_h1(const Signal& h0, int order, const LctParams& p, std::optional<int> flip_offset) {
  if (order < 1 || order % 2 == 0) {
    throw Error(ErrorCode::EvenOrder, "filter order N must be odd, got " + std::to_string(order));
  }
  require_causal_support(h0, order, "h0");
  const Index M = flip_offset.value_or(order);
  if (M % 2 == 0) throw Error(ErrorCode::EvenOrder, "flip offset must be odd");

  const double alpha = time_chirp_rate(p, h0.period());
  // The constant -(db/2T^2) pi^2 can be thousands of radians; folding it into
  // each tap's argument would round differently per tap and break the exact
  // alternation, so it is applied as one shared factor.
  const cplx common = std::polar(1.0, -freq_chirp_rate(p, h0.period()) * kPi * kPi);
  const Index first = M - order;
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1);
  for (Index k = first; k <= M; ++k) {
    const Index r = M - k;
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    const double phase = -alpha * static_cast<double>(r * r + k * k);
    out[static_cast<std::size_t>(k - first)] =
        sign * std::conj(h0.at(r)) * std::polar(1.0, phase) * common;
  }
  return Signal(std::move(out), first, h0.period());
}

Signal derive_synthesis(const Signal& h, int order, const LctParams& p) {
  require_causal_support(h, order, "analysis filter");
  const double alpha = time_chirp_rate(p, h.period());
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1);
  for (Index k = 0; k <= order; ++k) {
    const Index r = order - k;
    out[static_cast<std::size_t>(k)] =
        std::conj(h.at(r)) * std::polar(1.0, -alpha * static_cast<double>(r * r + k * k));
  }
  return Signal(std::move(out), 0, h.period());
}

FilterBank make_filter_bank(const Signal& h0, int order, const LctParams& p) {
  if (order < 1 || order % 2 == 0) {
    throw Error(ErrorCode::EvenOrder, "filter order N must be odd, got " + std::to_string(order));
  }
  require_causal_support(h0, order, "h0");
  std::vector<cplx> padded(static_cast<std::size_t>(order) + 1);
  for (Index n = 0; n <= order; ++n) padded[static_cast<std::size_t>(n)] = h0.at(n);
  Signal h0_full(std::move(padded), 0, h0.period());

  Signal h1 = derive_h1(h0_full, order, p);
  Signal g0 = derive_synthesis(h0_full, order, p);
  Signal g1 = derive_synthesis(h1, order, p);
  return FilterBank{std::move(h0_full), std::move(h1), std::move(g0), std::move(g1), order, p};
}

FilterBank bank_from_prototype(const Signal& h, const LctParams& p) {
  if (h.start() != 0) throw Error(ErrorCode::InvalidSupport, "prototype must start at n = 0");
  return make_filter_bank(lift_prototype(h, p), static_cast<int>(h.last()), p);
}

double power_symmetry_check(const Signal& h0, const LctParams& p, const FrequencyGrid& grid,
                            double level) {
  grid.validate();
  if (grid.span < kPi * (1.0 - 1e-12)) {
    throw Error(ErrorCode::InvalidGrid, "power-symmetry grid must cover at least [0, pi)");
  }
  const Spectrum lo = dtlct(h0, p, grid);
  const Spectrum hi = dtlct(h0, p, shifted(grid, kPi));
  const double scale = 2.0 * kPi * p.b();
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double s = scale * (std::norm(lo.values[k]) + std::norm(hi.values[k]));
    worst = std::max(worst, ps_deviation(s, level));
  }
  return worst;
}

double ft_power_symmetry_error(const Signal& h, const FrequencyGrid& grid, double level) {
  grid.validate();
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double w = grid.omega(k);
    const double s = std::norm(dtft_at(h, w)) + std::norm(dtft_at(h, w + kPi));
    worst = std::max(worst, ps_deviation(s, level));
  }
  return worst;
}

Matrix2c modulation_matrix(const FilterBank& fb, double omega) {
  Matrix2c m;
  m << dtlct_at(fb.h0, fb.params, omega), dtlct_at(fb.h0, fb.params, omega + kPi),
      dtlct_at(fb.h1, fb.params, omega), dtlct_at(fb.h1, fb.params, omega + kPi);
  return m;
}

Matrix2c synthesis_modulation_matrix(const FilterBank& fb, double omega) {
  Matrix2c m;
  m << dtlct_at(fb.g0, fb.params, omega), dtlct_at(fb.g1, fb.params, omega),
      dtlct_at(fb.g0, fb.params, omega + kPi), dtlct_at(fb.g1, fb.params, omega + kPi);
  return m;
}

Matrix2c alias_phase_matrix(double omega, const LctParams& p, double period) {
  const double k = p.d() * p.b() / (period * period);
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = std::polar(1.0, -k * omega * omega);
  m(1, 1) = std::polar(1.0, -k * (omega + kPi) * (omega + kPi));
  return m;
}

Matrix2c polyphase_matrix(const FilterBank& fb, double omega, PolyphaseKind kind) {
  const PolyphasePair p0 = polyphase_split(fb.h0, kind, fb.params);
  const PolyphasePair p1 = polyphase_split(fb.h1, kind, fb.params);
  Matrix2c m;
  m << dtlct_at(p0.comp0, fb.params, omega), dtlct_at(p0.comp1, fb.params, omega),
      dtlct_at(p1.comp0, fb.params, omega), dtlct_at(p1.comp1, fb.params, omega);
  return m;
}

Matrix2c synthesis_polyphase_matrix(const FilterBank& fb, double omega, PolyphaseKind kind) {
  const PolyphasePair p0 = polyphase_split(fb.g0, kind, fb.params);
  const PolyphasePair p1 = polyphase_split(fb.g1, kind, fb.params);
  Matrix2c m;
  m << dtlct_at(p0.comp0, fb.params, omega), dtlct_at(p1.comp0, fb.params, omega),
      dtlct_at(p0.comp1, fb.params, omega), dtlct_at(p1.comp1, fb.params, omega);
  return m;
}

Matrix2c modulation_b_matrix(double omega, const LctParams& p, double branch_period) {
  Matrix2c m = Matrix2c::Identity();
  m(1, 1) = std::polar(1.0, 2.0 * kPi * p.d() * p.b() * (2.0 * omega + kPi) /
                                (branch_period * branch_period));
  return m;
}

Matrix2c modulation_c_matrix(double omega, PolyphaseKind kind) {
  const cplx e = std::polar(1.0, kind == PolyphaseKind::Type1 ? -omega : omega);
  Matrix2c m;
  m << 1.0, e, 1.0, -e;
  return m;
}

double paraunitary_check(const FilterBank& fb, const FrequencyGrid& grid, double level) {
  grid.validate();
  if (grid.span < 2.0 * kPi * (1.0 - 1e-12)) {
    throw Error(ErrorCode::InvalidGrid, "paraunitarity grid must span [0, 2 pi)");
  }
  if (grid.count < 4 * static_cast<std::size_t>(fb.order + 1)) {
    throw Error(ErrorCode::InvalidGrid, "paraunitarity grid needs at least 4(N + 1) points");
  }
  const Spectrum h0 = dtlct(fb.h0, fb.params, grid);
  const Spectrum h0s = dtlct(fb.h0, fb.params, shifted(grid, kPi));
  const Spectrum h1 = dtlct(fb.h1, fb.params, grid);
  const Spectrum h1s = dtlct(fb.h1, fb.params, shifted(grid, kPi));
  const double scale = 2.0 * kPi * fb.params.b() / level;
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.count; ++k) {
    Matrix2c m;
    m << h0.values[k], h0s.values[k], h1.values[k], h1s.values[k];
    const Matrix2c dev = scale * m * m.adjoint() - Matrix2c::Identity();
    worst = std::max(worst, dev.norm());
  }
  return worst;
}

RelationPhase h1_relation_phase(const FilterBank& fb, const FrequencyGrid& grid) {
  grid.validate();
  const double T = fb.period();
  const double db = fb.params.d() * fb.params.b();
  const Spectrum h1 = dtlct(fb.h1, fb.params, grid);
  const Spectrum h0s = dtlct(fb.h0, fb.params, shifted(grid, kPi));
  double peak = 0.0;
  for (const cplx& v : h0s.values) peak = std::max(peak, std::abs(v));

  std::vector<cplx> ratios;
  cplx mean{0.0, 0.0};
  for (std::size_t k = 0; k < grid.count; ++k) {
    if (std::abs(h0s.values[k]) < 1e-6 * peak) continue;
    const double w = grid.omega(k);
    const cplx predicted = std::polar(1.0, db * w * (w + kPi) / (T * T) - fb.order * w) *
                           std::conj(h0s.values[k]);
    const cplx r = h1.values[k] / predicted;
    ratios.push_back(r / std::abs(r));
    mean += ratios.back();
  }
  RelationPhase out;
  if (ratios.empty()) return out;
  const cplx unit_mean = mean / std::abs(mean);
  out.phase = std::arg(unit_mean);
  for (const cplx& r : ratios) out.spread = std::max(out.spread, std::abs(std::arg(r * std::conj(unit_mean))));
  return out;
}

void check_bank_consistency(const FilterBank& fb, double tolerance) {
  const FilterBank ref = make_filter_bank(fb.h0, fb.order, fb.params);
  const auto check = [&](const Signal& got, const Signal& want, const char* name) {
    if (!same_period(got.period(), want.period())) {
      throw Error(ErrorCode::BankMismatch, std::string(name) + " has a different period");
    }
    const double diff = max_abs_diff(got, want);
    if (diff > tolerance) {
      throw Error(ErrorCode::BankMismatch,
                  std::string(name) + " differs from the filter derived from h0 by " +
                      std::to_string(diff));
    }
  };
  check(fb.h1, ref.h1, "h1");
  check(fb.g0, ref.g0, "g0");
  check(fb.g1, ref.g1, "g1");
}

}  // namespace lctfb
