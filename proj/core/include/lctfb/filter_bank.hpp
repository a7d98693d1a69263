#pragma once

#include <optional>

#include <Eigen/Dense>

#include "lctfb/lct_params.hpp"
#include "lctfb/sampling.hpp"
#include "lctfb/signal.hpp"
#include "lctfb/transform.hpp"

namespace lctfb {

using Matrix2c = Eigen::Matrix2cd;

/// Power-symmetry level of an orthonormal two-channel bank in the classical
/// DTFT normalization: |H(e^{jw})|^2 + |H(e^{j(w+pi)})|^2 = 2 when sum |h|^2 = 1.
/// The LCT checks remove the |P|^2 = 1/(2 pi b) prefactor before comparing.
inline constexpr double kOrthonormalLevel = 2.0;

/// Analysis filters h0, h1 and synthesis filters g0, g1 of a two-channel
/// paraunitary LCT bank. All four share the period T and the support 0..N.
struct FilterBank {
  Signal h0;
  Signal h1;
  Signal g0;
  Signal g1;
  int order = 1;
  LctParams params = LctParams::fourier();

  double period() const noexcept { return h0.period(); }
};

/// h0(n) = h(n) exp(-j a n^2 T^2 / (2b)), T = h.period().
Signal lift_prototype(const Signal& h, const LctParams& p);

/// h1(k) = conj(h0(M - k)) exp(j phi(k)),
///   phi(k) = -(a T^2 / 2b)[(M - k)^2 + k^2] + (M - k) pi - (d b / 2 T^2) pi^2,
/// with flip offset M = N unless given. h0 must be supported on 0..N, N odd
/// (Error{EvenOrder}); M must be odd as well. The default M = N keeps h1 on 0..N.
Signal derive_h1(const Signal& h0, int order, const LctParams& p,
                 std::optional<int> flip_offset = std::nullopt);

/// g(k) = conj(h(N - k)) exp(-j (a T^2 / 2b)[(N - k)^2 + k^2]), k = 0..N.
Signal derive_synthesis(const Signal& h, int order, const LctParams& p);

/// Builds {h0, h1, g0, g1} from an already lifted h0 on 0..N.
FilterBank make_filter_bank(const Signal& h0, int order, const LctParams& p);

/// Lifts an FT-domain power-symmetric prototype h (support 0..N) and builds
/// the bank. order = h.size() - 1.
FilterBank bank_from_prototype(const Signal& h, const LctParams& p);

/// max_k | 2 pi b (|H0(w_k)|^2 + |H0(w_k + pi)|^2) / level - 1 |.
/// The grid must cover at least [origin, origin + pi).
double power_symmetry_check(const Signal& h0, const LctParams& p, const FrequencyGrid& grid,
                            double level = kOrthonormalLevel);

/// Classical counterpart evaluated with the plain DTFT of h.
double ft_power_symmetry_error(const Signal& h, const FrequencyGrid& grid,
                               double level = kOrthonormalLevel);

/// Analysis modulation matrix [[H0(w), H0(w+pi)], [H1(w), H1(w+pi)]].
Matrix2c modulation_matrix(const FilterBank& fb, double omega);

/// Synthesis modulation matrix [[G0(w), G1(w)], [G0(w+pi), G1(w+pi)]].
Matrix2c synthesis_modulation_matrix(const FilterBank& fb, double omega);

/// A(w) = diag(exp(-j d b w^2 / T^2), exp(-j d b (w+pi)^2 / T^2)).
Matrix2c alias_phase_matrix(double omega, const LctParams& p, double period);

/// Analysis polyphase matrix [[H00, H01], [H10, H11]] at w, where H_ij is the
/// DTLCT (period 2T) of branch j of h_i split with `kind`.
Matrix2c polyphase_matrix(const FilterBank& fb, double omega, PolyphaseKind kind);

/// Synthesis polyphase matrix [[G00, G10], [G01, G11]].
Matrix2c synthesis_polyphase_matrix(const FilterBank& fb, double omega, PolyphaseKind kind);

/// B(w) = diag(1, exp(j 2 pi d b (2w + pi) / Tp^2)), Tp the branch period.
Matrix2c modulation_b_matrix(double omega, const LctParams& p, double branch_period);

/// C(w) = [[1, e], [1, -e]] with e = exp(-j w) for Type1, exp(+j w) for Type2.
Matrix2c modulation_c_matrix(double omega, PolyphaseKind kind);

/// max_k || (2 pi b / level) H_m(w_k) H_m(w_k)^H - I ||_F. The grid must span
/// [origin, origin + 2 pi) and hold at least 4(N + 1) points.
double paraunitary_check(const FilterBank& fb, const FrequencyGrid& grid,
                         double level = kOrthonormalLevel);

/// Compares H1(w) against exp(j(d b w (w + pi) / T^2 - N w)) conj(H0(w + pi)).
/// `phase` is the constant residual phase (circular mean), `spread` the max
/// deviation of any grid point from it.
struct RelationPhase {
  double phase = 0.0;
  double spread = 0.0;
};
RelationPhase h1_relation_phase(const FilterBank& fb, const FrequencyGrid& grid);

/// Throws Error{BankMismatch} if the bank's filters disagree with those
/// re-derived from fb.h0 by more than `tolerance`.
void check_bank_consistency(const FilterBank& fb, double tolerance = 1e-12);

}  // namespace lctfb
