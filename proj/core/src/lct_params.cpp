#include "lctfb/lct_params.hpp"

#include <cmath>
#include <sstream>

#include "lctfb/error.hpp"

namespace lctfb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::NonPositiveB: return "NonPositiveB";
    case ErrorCode::InvalidSignal: return "InvalidSignal";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::PeriodMismatch: return "PeriodMismatch";
    case ErrorCode::EvenOrder: return "EvenOrder";
    case ErrorCode::InvalidSupport: return "InvalidSupport";
    case ErrorCode::InconsistentPair: return "InconsistentPair";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NegativeSpectrum: return "NegativeSpectrum";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::BankMismatch: return "BankMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

LctParams LctParams::validate(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw Error(ErrorCode::NonUnimodular, "parameters must be finite");
  }
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > kUnimodularTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ad - bc = " << det << ", expected 1";
    throw Error(ErrorCode::NonUnimodular, msg.str());
  }
  if (!(b > 0.0)) {
    throw Error(ErrorCode::NonPositiveB, "b must be strictly positive");
  }
  return LctParams(a, b, c, d);
}

LctParams LctParams::frft(double angle) {
  const double s = std::sin(angle);
  const double c = std::cos(angle);
  return validate(c, s, -s, c);
}

LctParams LctParams::fourier() { return LctParams(0.0, 1.0, -1.0, 0.0); }

}  // namespace lctfb
