#include "lctfb/prototype.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "lctfb/error.hpp"

namespace lctfb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTapTolerance = 1e-12;
constexpr double kNegativeTolerance = 1e-10;
constexpr double kLiftMargin = 1e-12;
constexpr double kFactorTolerance = 1e-8;

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

double kaiser(int n, int half_order, double shape) {
  const double r = static_cast<double>(n) / static_cast<double>(half_order + 1);
  return std::cyl_bessel_i(0.0, shape * std::sqrt(1.0 - r * r)) / std::cyl_bessel_i(0.0, shape);
}

void require_valid_order(int order) {
  if (order < 2 || order % 2 != 0 || (order / 2) % 2 == 0) {
    throw Error(ErrorCode::InvalidOrder,
                "half-band order must be 2 (mod 4) so that N = order/2 is odd, got " +
                    std::to_string(order));
  }
}

// Golden-section minimisation of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min({f1, f2, f(lo), f(hi)});
}

// r_m = sum_k h_k h_{k+m} - f(m), m = 0..N.
Eigen::VectorXd factor_residual(const Eigen::VectorXd& h, const HalfBand& f) {
  const auto len = static_cast<int>(h.size());
  Eigen::VectorXd r(len);
  for (int m = 0; m < len; ++m) {
    double acc = 0.0;
    for (int k = 0; k + m < len; ++k) acc += h[k] * h[k + m];
    r[m] = acc - f.tap(m);
  }
  return r;
}

void newton_polish(Eigen::VectorXd& h, const HalfBand& f) {
  const auto len = static_cast<int>(h.size());
  Eigen::VectorXd r = factor_residual(h, f);
  double norm = r.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < 30 && norm > 0.0; ++it) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(len, len);
    for (int m = 0; m < len; ++m) {
      for (int j = 0; j < len; ++j) {
        if (j + m < len) jac(m, j) += h[j + m];
        if (j - m >= 0) jac(m, j) += h[j - m];
      }
    }
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-r);
    const Eigen::VectorXd trial = h + step;
    const Eigen::VectorXd trial_r = factor_residual(trial, f);
    const double trial_norm = trial_r.lpNorm<Eigen::Infinity>();
    if (!(trial_norm < norm)) break;
    h = trial;
    r = trial_r;
    norm = trial_norm;
  }
}

}  // namespace

HalfBand::HalfBand(std::vector<double> taps) : taps_(std::move(taps)) {
  if (taps_.size() % 2 == 0) {
    throw Error(ErrorCode::InvalidOrder, "half-band must have an odd number of taps");
  }
  require_valid_order(order());
  for (double v : taps_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite half-band tap");
  }
  const int n_half = half_order();
  if (std::abs(tap(0) - 0.5) > kTapTolerance) {
    throw Error(ErrorCode::InvalidArgument, "half-band centre tap must be 1/2");
  }
  for (int n = 1; n <= n_half; ++n) {
    if (std::abs(tap(n) - tap(-n)) > kTapTolerance) {
      throw Error(ErrorCode::InvalidArgument, "half-band must be symmetric");
    }
    if (n % 2 == 0 && std::abs(tap(n)) > kTapTolerance) {
      throw Error(ErrorCode::InvalidArgument, "half-band even taps must vanish");
    }
  }
}

double HalfBand::tap(int n) const noexcept {
  const int idx = n + half_order();
  if (idx < 0 || idx >= static_cast<int>(taps_.size())) return 0.0;
  return taps_[static_cast<std::size_t>(idx)];
}

double HalfBand::response(double omega) const noexcept {
  double acc = tap(0);
  for (int n = 1; n <= half_order(); ++n) acc += 2.0 * tap(n) * std::cos(n * omega);
  return acc;
}

double HalfBand::min_response() const {
  const int points = 64 * (half_order() + 1) + 1;
  const double step = kPi / (points - 1);
  std::vector<double> vals(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) vals[static_cast<std::size_t>(i)] = response(i * step);

  double best = *std::min_element(vals.begin(), vals.end());
  const auto resp = [this](double w) { return response(w); };
  for (int i = 0; i < points; ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    const bool left_ok = i == 0 || v <= vals[static_cast<std::size_t>(i - 1)];
    const bool right_ok = i == points - 1 || v <= vals[static_cast<std::size_t>(i + 1)];
    if (left_ok && right_ok) {
      const double lo = std::max(0.0, (i - 1) * step);
      const double hi = std::min(kPi, (i + 1) * step);
      best = std::min(best, golden_min(resp, lo, hi));
    }
  }
  return best;
}

HalfBand design_halfband(int order, double transition, double shape) {
  require_valid_order(order);
  if (!(transition > 0.0 && transition < kPi / 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "transition bandwidth must lie in (0, pi/2)");
  }
  if (!std::isfinite(shape) || shape < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "window shape must be finite and >= 0");
  }
  const int n_half = order / 2;
  std::vector<double> one_side(static_cast<std::size_t>(n_half) + 1, 0.0);
  double odd_sum = 0.0;
  for (int n = 1; n <= n_half; n += 2) {
    const double v = 0.5 * sinc(n / 2.0) * sinc(transition * n / (2.0 * kPi)) * kaiser(n, n_half, shape);
    one_side[static_cast<std::size_t>(n)] = v;
    odd_sum += v;
  }
  if (!(odd_sum > 0.0)) throw Error(ErrorCode::InvalidArgument, "degenerate half-band design");
  // Unit DC gain: F(0) = 1/2 + 2 * sum(odd taps) = 1, hence F(pi) = 0.
  for (double& v : one_side) v *= 0.25 / odd_sum;

  const auto assemble = [&] {
    std::vector<double> taps(static_cast<std::size_t>(order) + 1, 0.0);
    taps[static_cast<std::size_t>(n_half)] = 0.5;
    for (int n = 1; n <= n_half; ++n) {
      taps[static_cast<std::size_t>(n_half + n)] = one_side[static_cast<std::size_t>(n)];
      taps[static_cast<std::size_t>(n_half - n)] = one_side[static_cast<std::size_t>(n)];
    }
    return HalfBand(std::move(taps));
  };

  HalfBand hb = assemble();
  const double lowest = hb.min_response();
  if (lowest < 0.0) {
    // f(0) <- 1/2 + eps, then divide by 1 + 2 eps: the centre stays 1/2 exactly.
    const double eps = -lowest + kLiftMargin;
    for (double& v : one_side) v /= 1.0 + 2.0 * eps;
    hb = assemble();
  }
  return hb;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0.0) ++first;
  std::size_t last = coeffs.size();
  while (last > first && coeffs[last - 1] == 0.0) --last;
  if (first == last) throw Error(ErrorCode::RootFindingFailure, "zero polynomial");

  // Trailing zero coefficients of sum c_k z^{-k} are roots at the origin.
  std::vector<std::complex<double>> roots(coeffs.size() - last, {0.0, 0.0});
  const auto degree = static_cast<Eigen::Index>(last - first - 1);
  if (degree == 0) return roots;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  const double lead = coeffs[first];
  for (Eigen::Index i = 0; i < degree; ++i) {
    companion(0, i) = -coeffs[first + static_cast<std::size_t>(i) + 1] / lead;
    if (i + 1 < degree) companion(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::RootFindingFailure, "companion eigenvalue iteration did not converge");
  }
  for (Eigen::Index i = 0; i < degree; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

std::vector<double> spectral_factor(const HalfBand& f) {
  const double lowest = f.min_response();
  if (lowest < -kNegativeTolerance) {
    throw Error(ErrorCode::NegativeSpectrum,
                "half-band response is negative (min " + std::to_string(lowest) + ")");
  }
  const int n_half = f.half_order();
  std::vector<std::complex<double>> roots = polynomial_roots(f.taps());
  if (roots.size() < static_cast<std::size_t>(n_half)) {
    throw Error(ErrorCode::RootFindingFailure, "too few roots for a factor of length N + 1");
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& x, const auto& y) { return std::abs(x) < std::abs(y); });

  // prod (1 - r z^{-1}) over the N innermost roots.
  std::vector<std::complex<double>> q{1.0};
  for (int i = 0; i < n_half; ++i) {
    const std::complex<double> r = roots[static_cast<std::size_t>(i)];
    q.push_back(0.0);
    for (std::size_t k = q.size() - 1; k > 0; --k) q[k] -= r * q[k - 1];
  }
  Eigen::VectorXd h(n_half + 1);
  for (int k = 0; k <= n_half; ++k) h[k] = q[static_cast<std::size_t>(k)].real();
  h *= std::sqrt(f.tap(0) / h.squaredNorm());

  newton_polish(h, f);

  const double residual = factor_residual(h, f).lpNorm<Eigen::Infinity>();
  if (!(residual <= kFactorTolerance)) {
    throw Error(ErrorCode::RootFindingFailure,
                "spectral factor residual " + std::to_string(residual) + " exceeds 1e-8");
  }
  return {h.data(), h.data() + h.size()};
}

Signal orthonormal_prototype(const HalfBand& f, double period) {
  const std::vector<double> h = spectral_factor(f);
  std::vector<cplx> out(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) out[k] = std::sqrt(2.0) * h[k];
  return Signal(std::move(out), 0, period);
}

}  // namespace lctfb
