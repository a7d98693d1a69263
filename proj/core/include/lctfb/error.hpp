#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lctfb {

enum class ErrorCode {
  NonUnimodular,
  NonPositiveB,
  InvalidSignal,
  InvalidGrid,
  PeriodMismatch,
  EvenOrder,
  InvalidSupport,
  InconsistentPair,
  InvalidOrder,
  InvalidArgument,
  NegativeSpectrum,
  RootFindingFailure,
  BankMismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type; the code
// lets callers (and the CLI exit-code mapping) branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lctfb
