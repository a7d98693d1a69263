#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "lctfb/bank_run.hpp"
#include "lctfb/filter_bank.hpp"
#include "lctfb/signal.hpp"
#include "lctfb/transform.hpp"

namespace lctfb::io {

// Text formats. Every floating value is written with 17 significant digits so
// files round-trip exactly.
//
//   Signal CSV:     header "n,re,im", one row per consecutive index n.
//   Prototype CSV:  header "k,re,im", k = 0..N.
//   Spectrum CSV:   header "omega,re,im,abs".
//   FilterBank JSON {a,b,c,d,T,N,h0:[{re,im}...], h1?, g0?, g1?}.
//   Report JSON     {max_pr_error, max_pu_error, max_ps_error, n_grid, seed, ...}.
//
// Parse failures throw Error{ParseError} naming the offending line.

Signal read_signal_csv(std::istream& in, double period);
Signal read_signal_csv(const std::filesystem::path& path, double period);
void write_signal_csv(std::ostream& out, const Signal& x);
void write_signal_csv(const std::filesystem::path& path, const Signal& x);

Signal read_prototype_csv(std::istream& in, double period);
Signal read_prototype_csv(const std::filesystem::path& path, double period);
void write_prototype_csv(std::ostream& out, const Signal& h);

void write_spectrum_csv(std::ostream& out, const Spectrum& s);
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);

/// Period from a JSON sidecar "<file>.json" holding {"period": T} (or "T").
/// Returns 0 if no sidecar exists.
double read_period_sidecar(const std::filesystem::path& signal_path);

nlohmann::json bank_to_json(const FilterBank& fb);
/// Rebuilds h1, g0, g1 from h0; any of them present in the JSON must agree
/// with the rebuilt filter to `tolerance` (Error{BankMismatch} otherwise).
FilterBank bank_from_json(const nlohmann::json& j, double tolerance = 1e-12);

FilterBank read_bank(const std::filesystem::path& path);
void write_bank(const std::filesystem::path& path, const FilterBank& fb,
                const VerificationReport* report = nullptr);

nlohmann::json report_to_json(const VerificationReport& r);

/// Fixed 17-significant-digit formatting used by every writer.
std::string format_double(double v);

}  // namespace lctfb::io
