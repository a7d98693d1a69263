#include <gtest/gtest.h>

#include <cmath>

#include "lctfb/error.hpp"
#include "lctfb/filter_bank.hpp"
#include "lctfb/prototype.hpp"
#include "oracles.hpp"

namespace lctfb {
namespace {

using testing::kPi;

const LctParams kFrft45 = LctParams::frft(kPi / 4.0);
const LctParams kClassical = LctParams::validate(0.0, 1.0, -1.0, 0.0);
constexpr double kT = 0.05;

Signal haar(double T) {
  const double r = 1.0 / std::sqrt(2.0);
  return Signal({r, r}, 0, T);
}

Signal designed(double T) { return orthonormal_prototype(design_halfband(14, 0.6, 4.0), T); }

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lctfb::Error thrown";
  return ErrorCode::InvalidArgument;
}

// ||(1/2) M M^H - I||_F with M built from plain DTFTs; the classical PU check.
double classical_pu(const Signal& h0, const Signal& h1, std::size_t count) {
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double w = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
    Eigen::Matrix2cd m;
    m << testing::brute_dtft(h0, w), testing::brute_dtft(h0, w + kPi), testing::brute_dtft(h1, w),
        testing::brute_dtft(h1, w + kPi);
    worst = std::max(worst, (0.5 * m * m.adjoint() - Eigen::Matrix2cd::Identity()).norm());
  }
  return worst;
}

double classical_ps(const Signal& h, std::size_t count) {
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double w = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
    const double s = std::norm(testing::brute_dtft(h, w)) + std::norm(testing::brute_dtft(h, w + kPi));
    worst = std::max(worst, std::abs(s / 2.0 - 1.0));
  }
  return worst;
}

TEST(Lift, ZeroAIsIdentity) {
  std::mt19937_64 rng(1);
  const Signal h = testing::random_complex(rng, 6, 1.0);
  EXPECT_EQ(max_abs_diff(lift_prototype(h, kClassical), h), 0.0);
}

TEST(Lift, HaarChirpAtOne) {
  const Signal h0 = lift_prototype(haar(kT), kFrft45);
  // a T^2 / (2b) = 0.0025 / 2 for a = b
  const cplx want = std::exp(cplx(0.0, -0.00125)) / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(h0.at(1) - want), 0.0, 1e-15);
  EXPECT_EQ(h0.at(0), cplx(1.0 / std::sqrt(2.0)));
}

TEST(Lift, PreservesMagnitudes) {
  std::mt19937_64 rng(2);
  const Signal h = testing::random_complex(rng, 12, kT);
  const Signal h0 = lift_prototype(h, testing::random_params(rng));
  for (Index n = 0; n < 12; ++n) EXPECT_NEAR(std::abs(h0.at(n)), std::abs(h.at(n)), 1e-15);
}

TEST(DeriveH1, ClassicalAlternatingFlip) {
  std::mt19937_64 rng(3);
  for (int N : {1, 3, 7, 11}) {
    const Signal h0 = testing::random_complex(rng, N + 1, 1.0);
    const Signal h1 = derive_h1(h0, N, kClassical);
    EXPECT_LE(max_abs_diff(h1, testing::classical_alternating_flip(h0, N)), 1e-15) << N;
  }
}

TEST(DeriveH1, ClosedFormPhase) {
  std::mt19937_64 rng(4);
  const int N = 5;
  const Signal h0 = testing::random_complex(rng, N + 1, kT);
  const Signal h1 = derive_h1(h0, N, kFrft45);
  const double r = kFrft45.a() * kT * kT / (2.0 * kFrft45.b());
  const double q = kFrft45.d() * kFrft45.b() / (2.0 * kT * kT);
  for (int k = 0; k <= N; ++k) {
    const double phi = -r * ((N - k) * (N - k) + k * k) + (N - k) * kPi - q * kPi * kPi;
    const cplx want = std::conj(h0.at(N - k)) * std::exp(cplx(0.0, phi));
    EXPECT_NEAR(std::abs(h1.at(k) - want), 0.0, 1e-13) << k;
    EXPECT_NEAR(std::abs(h1.at(k)), std::abs(h0.at(N - k)), 1e-15);
  }
}

TEST(DeriveH1, Errors) {
  const Signal h0({1.0, 2.0, 3.0}, 0, kT);
  EXPECT_EQ(code_of([&] { derive_h1(h0, 2, kFrft45); }), ErrorCode::EvenOrder);
  EXPECT_EQ(code_of([&] { derive_h1(Signal({1.0, 1.0}, 1, kT), 1, kFrft45); }),
            ErrorCode::InvalidSupport);
  EXPECT_EQ(code_of([&] { derive_h1(haar(kT), 1, kFrft45, 2); }), ErrorCode::EvenOrder);
}

TEST(DeriveH1, OtherFlipOffsetStaysParaunitary) {
  const Signal h0 = lift_prototype(designed(kT), kFrft45);
  const int N = 7;
  FilterBank fb = make_filter_bank(h0, N, kFrft45);
  fb.h1 = derive_h1(h0, N, kFrft45, N + 4);
  EXPECT_EQ(fb.h1.start(), 4);
  EXPECT_LE(paraunitary_check(fb, FrequencyGrid{512}), 1e-10);
}

TEST(DeriveSynthesis, ClassicalTimeReverse) {
  std::mt19937_64 rng(5);
  const Signal h = testing::random_complex(rng, 8, 1.0);
  EXPECT_LE(max_abs_diff(derive_synthesis(h, 7, kClassical), testing::classical_time_reverse(h, 7)),
            1e-16);
}

TEST(DeriveSynthesis, ReversedMagnitudes) {
  std::mt19937_64 rng(6);
  const Signal h = testing::random_complex(rng, 8, kT);
  const Signal g = derive_synthesis(h, 7, kFrft45);
  for (int k = 0; k <= 7; ++k) EXPECT_NEAR(std::abs(g.at(k)), std::abs(h.at(7 - k)), 1e-15);
}

TEST(PowerSymmetry, LiftedHaar) {
  EXPECT_LE(power_symmetry_check(lift_prototype(haar(kT), kFrft45), kFrft45, FrequencyGrid{512}),
            1e-12);
}

TEST(PowerSymmetry, NormalizationExamples) {
  const FrequencyGrid grid{256};
  const Signal scaled_impulse = Signal::impulse(0, kT, 1.0 / std::sqrt(2.0));
  const Signal unit({1.0, 0.0}, 0, kT);
  // unit-level convention: |H|^2 measured against 1/(2 pi b)
  EXPECT_NEAR(power_symmetry_check(scaled_impulse, kFrft45, grid, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(power_symmetry_check(unit, kFrft45, grid, 1.0), 1.0, 1e-15);
  // orthonormal convention used everywhere else
  EXPECT_NEAR(power_symmetry_check(scaled_impulse, kFrft45, grid), 0.5, 1e-15);
  EXPECT_NEAR(power_symmetry_check(unit, kFrft45, grid), 0.0, 1e-15);
}

TEST(PowerSymmetry, RejectsShortGrid) {
  EXPECT_EQ(code_of([&] { power_symmetry_check(haar(kT), kFrft45, FrequencyGrid{64, 0.0, 1.0}); }),
            ErrorCode::InvalidGrid);
}

TEST(PowerSymmetry, LiftedErrorEqualsFourierError) {
  std::mt19937_64 rng(7);
  const FrequencyGrid grid{512};
  for (int trial = 0; trial < 10; ++trial) {
    const LctParams p = testing::random_params(rng);
    const Signal h = trial == 0 ? designed(0.3) : testing::random_complex(rng, 2 + trial, 0.3);
    const double lct = power_symmetry_check(lift_prototype(h, p), p, grid);
    EXPECT_NEAR(lct, ft_power_symmetry_error(h, grid), 1e-12) << trial;
    EXPECT_NEAR(lct, classical_ps(h, 512), 1e-12) << trial;
  }
}

TEST(Paraunitary, LiftedHaar) {
  const FilterBank fb = bank_from_prototype(haar(kT), kFrft45);
  EXPECT_EQ(fb.order, 1);
  EXPECT_LE(paraunitary_check(fb, FrequencyGrid{512}), 1e-12);
}

TEST(Paraunitary, ZeroH1IsRankDeficient) {
  FilterBank fb = bank_from_prototype(haar(kT), kFrft45);
  fb.h1 = Signal::zeros(2, 0, kT);
  EXPECT_GE(paraunitary_check(fb, FrequencyGrid{512}), 1.0);
}

TEST(Paraunitary, ClassicalCrossOracle) {
  // deliberately not power-symmetric so both checks report a sizeable error
  const Signal h({0.6, 0.5, 0.3, 0.1}, 0, 1.0);
  const FilterBank fb = bank_from_prototype(h, kClassical);
  const double ours = paraunitary_check(fb, FrequencyGrid{256});
  const double oracle = classical_pu(h, testing::classical_alternating_flip(h, 3), 256);
  EXPECT_GT(oracle, 0.1);
  EXPECT_NEAR(ours, oracle, 1e-12);

  const FilterBank good = bank_from_prototype(designed(1.0), kClassical);
  EXPECT_LE(paraunitary_check(good, FrequencyGrid{256}), 1e-12);
}

TEST(Paraunitary, GridRequirements) {
  const FilterBank fb = bank_from_prototype(designed(kT), kFrft45);
  EXPECT_EQ(code_of([&] { paraunitary_check(fb, FrequencyGrid{31}); }), ErrorCode::InvalidGrid);
  EXPECT_EQ(code_of([&] { paraunitary_check(fb, FrequencyGrid{512, 0.0, kPi}); }),
            ErrorCode::InvalidGrid);
}

TEST(Paraunitary, PowerSymmetryBoundsParaunitarity) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> noise(0.0, 1.0);
  const FrequencyGrid grid{512};
  for (double scale : {1e-8, 1e-6, 1e-4, 1e-2}) {
    Signal h = designed(kT);
    for (auto& v : h.samples()) v += scale * noise(rng);
    const FilterBank fb = bank_from_prototype(h, kFrft45);
    const double eps = power_symmetry_check(fb.h0, kFrft45, grid);
    EXPECT_GT(eps, 0.0);
    EXPECT_LE(paraunitary_check(fb, grid), 10.0 * eps) << scale;
  }
}

TEST(Matrices, LazyBankModulationMatrix) {
  const FilterBank fb{Signal::impulse(0, 1.0), Signal::impulse(1, 1.0), Signal::impulse(1, 1.0),
                      Signal::impulse(0, 1.0), 1, kClassical};
  const cplx pre = dtlct_prefactor(kClassical);
  for (double w = 0.0; w < 2.0 * kPi; w += 0.1) {
    const cplx e = std::exp(cplx(0.0, -w));
    Eigen::Matrix2cd want;
    want << 1.0, 1.0, e, -e;
    EXPECT_LE((modulation_matrix(fb, w) / pre - want).norm(), 1e-14);
  }
}

TEST(Matrices, ModulationEqualsBTimesCTimesPolyphase) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const LctParams p = trial == 0 ? kFrft45 : testing::random_params(rng);
    const double T = trial == 0 ? kT : 0.1 + 0.1 * trial;
    const FilterBank fb = bank_from_prototype(testing::random_complex(rng, 6, T), p);
    for (auto kind : {PolyphaseKind::Type1, PolyphaseKind::Type2}) {
      for (double w = 0.0; w < 2.0 * kPi; w += 0.1) {
        const Matrix2c lhs = modulation_matrix(fb, w).transpose();
        const Matrix2c rhs = modulation_b_matrix(w, p, 2.0 * T) * modulation_c_matrix(w, kind) *
                             polyphase_matrix(fb, 2.0 * w, kind).transpose();
        EXPECT_LE((lhs - rhs).norm(), 1e-10) << trial;
      }
    }
  }
}

TEST(Matrices, AliasPhaseIsUnitModulus) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const LctParams p = testing::random_params(rng);
    const double w = -10.0 + 0.4 * i;
    const Matrix2c a = alias_phase_matrix(w, p, 0.05 + 0.01 * i);
    EXPECT_NEAR(std::abs(a(0, 0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(a(1, 1)), 1.0, 1e-15);
    EXPECT_EQ(a(0, 1), cplx(0.0));
    EXPECT_EQ(a(1, 0), cplx(0.0));
  }
}

TEST(Properties, FiltersAreQuasiPeriodic) {
  const FilterBank fb = bank_from_prototype(designed(kT), kFrft45);
  for (const Signal* f : {&fb.h0, &fb.h1, &fb.g0, &fb.g1}) {
    for (double w = 0.0; w < 2.0 * kPi; w += 0.05) {
      const cplx lhs = dtlct_at(*f, kFrft45, w + 2.0 * kPi);
      const cplx rhs = quasi_period_factor(w, kFrft45, kT) * dtlct_at(*f, kFrft45, w);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10);
    }
  }
}

TEST(Properties, HighpassMirrorsLowpass) {
  const FilterBank fb = bank_from_prototype(designed(kT), kFrft45);
  for (double w = 0.0; w < 2.0 * kPi; w += 0.05) {
    EXPECT_NEAR(std::abs(dtlct_at(fb.h1, kFrft45, w)), std::abs(dtlct_at(fb.h0, kFrft45, w + kPi)),
                1e-12);
  }
}

TEST(Properties, RelationPhaseIsConstant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const LctParams p = trial == 0 ? kFrft45 : testing::random_params(rng);
    const FilterBank fb = bank_from_prototype(trial == 0 ? designed(kT) : haar(0.2), p);
    const RelationPhase rp = h1_relation_phase(fb, FrequencyGrid{512});
    EXPECT_NEAR(rp.phase, -kPi / 2.0, 1e-9) << trial;
    EXPECT_LE(rp.spread, 1e-9) << trial;
  }
}

TEST(Consistency, DetectsTamperedFilters) {
  const FilterBank fb = bank_from_prototype(designed(kT), kFrft45);
  EXPECT_NO_THROW(check_bank_consistency(fb));

  FilterBank bad = fb;
  bad.g1.samples()[3] += 1e-6;
  EXPECT_EQ(code_of([&] { check_bank_consistency(bad); }), ErrorCode::BankMismatch);

  FilterBank other_period = fb;
  other_period.g0 = Signal(std::vector<cplx>(fb.g0.samples().begin(), fb.g0.samples().end()), 0, 0.1);
  EXPECT_EQ(code_of([&] { check_bank_consistency(other_period); }), ErrorCode::BankMismatch);
}

}  // namespace
}  // namespace lctfb
