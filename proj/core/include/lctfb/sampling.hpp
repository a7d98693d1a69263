#pragma once

#include "lctfb/lct_params.hpp"
#include "lctfb/signal.hpp"

namespace lctfb {

/// y(L n) = x(n), zero elsewhere; period T / L. Y(w) = X(L w).
Signal upsample(const Signal& x, int factor);

/// y(n) = x(M n); period M T.
Signal downsample(const Signal& x, int factor);

/// LCT convolution
///   y(n) = sum_k h(k) x(n - k) exp(-j (a T^2 / b) k (n - k)),
/// so that Y(w) = H(w) X(w) exp(-j d b w^2 / (2 T^2)) / P.
/// Throws Error{PeriodMismatch} if the periods differ.
Signal lct_convolve(const Signal& h, const Signal& x, const LctParams& p);

/// Closed form of the k-th power of the LCT delay operator:
///   D^k[x](n) = x(n - k) exp(j a T^2 (-2 n k + k^2) / (2b)).
/// Negative k advances. Y(w) = exp(-j k w) X(w).
Signal delay_pow(const Signal& x, Index k, const LctParams& p);

enum class PolyphaseKind { Type1, Type2 };

/// Even branch x0 = x_e down 2 and odd branch x1 = xbar_o down 2, where
/// xbar_o = D^{-1}[x_o] (Type1) or D[x_o] (Type2). Both branches have period 2T.
///   Type1: X(w) = X0(2w) + exp(-j w) X1(2w)
///   Type2: X(w) = X0(2w) + exp(+j w) X1(2w)
struct PolyphasePair {
  Signal comp0;
  Signal comp1;
  PolyphaseKind kind;
};

PolyphasePair polyphase_split(const Signal& x, PolyphaseKind kind, const LctParams& p);

/// Inverse of polyphase_split. Throws Error{InconsistentPair} if the branch
/// periods differ.
Signal polyphase_merge(const PolyphasePair& pair, const LctParams& p);

}  // namespace lctfb
