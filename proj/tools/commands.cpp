#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lctfb/bank_run.hpp"
#include "lctfb/error.hpp"
#include "lctfb/io.hpp"
#include "lctfb/prototype.hpp"

namespace lctfb::cli {

namespace {

namespace fs = std::filesystem;

struct ParamFlags {
  std::optional<double> angle;
  std::optional<double> a, b, c, d;

  void attach(CLI::App* cmd) {
    auto* angle_opt = cmd->add_option("--frft-angle", angle, "FrFT angle; expands to (cos, sin, -sin, cos)");
    auto* a_opt = cmd->add_option("--a", a, "LCT parameter a");
    auto* b_opt = cmd->add_option("--b", b, "LCT parameter b (> 0)");
    auto* c_opt = cmd->add_option("--c", c, "LCT parameter c");
    auto* d_opt = cmd->add_option("--d", d, "LCT parameter d");
    for (auto* o : {a_opt, b_opt, c_opt, d_opt}) o->excludes(angle_opt);
  }

  LctParams resolve() const {
    if (angle) return LctParams::frft(*angle);
    if (!a || !b || !c || !d) {
      throw Error(ErrorCode::InvalidArgument, "give either --frft-angle or all of --a --b --c --d");
    }
    return LctParams::validate(*a, *b, *c, *d);
  }
};

struct TolFlags {
  Tolerances tol;
  void attach(CLI::App* cmd) {
    cmd->add_option("--ps-tol", tol.ps, "power-symmetry tolerance")->capture_default_str();
    cmd->add_option("--pu-tol", tol.pu, "paraunitarity tolerance")->capture_default_str();
    cmd->add_option("--pr-tol", tol.pr, "perfect-reconstruction tolerance")->capture_default_str();
  }
};

void print_report(std::ostream& out, const VerificationReport& r) {
  out << io::report_to_json(r).dump(2) << '\n';
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  f << j.dump(2) << '\n';
}

double resolve_period(const std::optional<double>& flag, const fs::path& signal_path) {
  if (flag) return *flag;
  const double sidecar = io::read_period_sidecar(signal_path);
  if (sidecar > 0.0) return sidecar;
  throw Error(ErrorCode::InvalidArgument,
              "no sample period: pass --period or provide " + signal_path.string() + ".json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-channel paraunitary filter banks in the discrete-time LCT domain", "lctfb"};
  app.require_subcommand(1);

  // design
  auto* design = app.add_subcommand("design", "Design a prototype and build a paraunitary LCT bank");
  int order = 14;
  double transition = 0.6;
  double shape = 4.0;
  std::optional<std::string> prototype_path;
  double design_period = 0.0;
  std::string design_out;
  std::size_t design_grid = 512;
  std::uint64_t design_seed = 20260101;
  ParamFlags design_params;
  TolFlags design_tol;
  design->add_option("--order", order, "half-band order 2N, N odd (2 mod 4)")->capture_default_str();
  design->add_option("--transition", transition, "transition bandwidth in (0, pi/2)")->capture_default_str();
  design->add_option("--shape", shape, "Kaiser window shape")->capture_default_str();
  design->add_option("--prototype", prototype_path, "import FT-domain prototype CSV (k,re,im) instead of designing");
  design->add_option("--period", design_period, "sample period T")->required()->check(CLI::PositiveNumber);
  design->add_option("--out", design_out, "output bank JSON")->required();
  design->add_option("--grid", design_grid, "verification grid size")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  design->add_option("--seed", design_seed, "seed of the PR probe signal")->capture_default_str();
  design_params.attach(design);
  design_tol.attach(design);

  // run
  auto* run_cmd = app.add_subcommand("run", "Run analysis and synthesis on a signal CSV");
  std::string run_bank, run_input, run_prefix;
  std::optional<double> run_period;
  TolFlags run_tol;
  run_cmd->add_option("bank", run_bank, "bank JSON")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("input", run_input, "input signal CSV (n,re,im)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out-prefix", run_prefix, "prefix for y0.csv, y1.csv, xhat.csv, report.json")->required();
  run_cmd->add_option("--period", run_period, "input sample period (defaults to sidecar, then the bank's T)");
  run_tol.attach(run_cmd);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Evaluate the DTLCT of a signal on [0, 2 pi)");
  std::string spec_input, spec_out;
  std::optional<double> spec_period;
  std::size_t spec_grid = 1024;
  ParamFlags spec_params;
  spectrum->add_option("input", spec_input, "signal CSV (n,re,im)")->required()->check(CLI::ExistingFile);
  spectrum->add_option("--period", spec_period, "sample period T")->check(CLI::PositiveNumber);
  spectrum->add_option("--grid", spec_grid, "number of grid points K >= 2")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  spectrum->add_option("--out", spec_out, "output CSV (omega,re,im,abs)")->required();
  spec_params.attach(spectrum);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a chirped multitone whose DTLCT peaks at given frequencies");
  std::vector<double> gen_peaks;
  std::size_t gen_length = 512;
  double gen_period = 0.0;
  std::string gen_out;
  ParamFlags gen_params;
  gen->add_option("--peaks", gen_peaks, "peak locations in [0, 2 pi)")->required()->expected(1, -1);
  gen->add_option("--length", gen_length, "number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--period", gen_period, "sample period T")->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "output signal CSV")->required();
  gen_params.attach(gen);

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a bank JSON (consistency, PS, PU, PR)");
  std::string verify_bank_path;
  std::optional<std::string> verify_report;
  std::size_t verify_grid = 512;
  std::uint64_t verify_seed = 20260101;
  TolFlags verify_tol;
  verify->add_option("bank", verify_bank_path, "bank JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--grid", verify_grid, "verification grid size")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  verify->add_option("--seed", verify_seed, "seed of the PR probe signal")->capture_default_str();
  verify->add_option("--report", verify_report, "write the report JSON here");
  verify_tol.attach(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*design) {
      const LctParams p = design_params.resolve();
      Signal prototype = prototype_path
                             ? io::read_prototype_csv(fs::path(*prototype_path), design_period)
                             : orthonormal_prototype(design_halfband(order, transition, shape), design_period);
      const FilterBank fb = bank_from_prototype(prototype, p);
      const VerificationReport report =
          verify_bank(fb, FrequencyGrid{design_grid}, design_tol.tol, design_seed);
      io::write_bank(design_out, fb, &report);
      print_report(out, report);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    if (*run_cmd) {
      const FilterBank fb = io::read_bank(run_bank);
      double period = fb.period();
      if (run_period) {
        period = *run_period;
      } else if (const double sidecar = io::read_period_sidecar(run_input); sidecar > 0.0) {
        period = sidecar;
      }
      const Signal x = io::read_signal_csv(fs::path(run_input), period);
      const Subbands y = analysis(x, fb);
      const Signal xhat = synthesis(y, fb);
      VerificationReport report = run_pr_check(x, fb, run_tol.tol);
      io::write_signal_csv(fs::path(run_prefix + "y0.csv"), y.y0);
      io::write_signal_csv(fs::path(run_prefix + "y1.csv"), y.y1);
      io::write_signal_csv(fs::path(run_prefix + "xhat.csv"), xhat);
      write_json(run_prefix + "report.json", io::report_to_json(report));
      print_report(out, report);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    if (*spectrum) {
      const LctParams p = spec_params.resolve();
      const double period = resolve_period(spec_period, spec_input);
      const Signal x = io::read_signal_csv(fs::path(spec_input), period);
      io::write_spectrum_csv(fs::path(spec_out), dtlct(x, p, FrequencyGrid{spec_grid}));
      return kExitOk;
    }
    if (*gen) {
      const LctParams p = gen_params.resolve();
      io::write_signal_csv(fs::path(gen_out), generate_multitone(gen_peaks, gen_length, p, gen_period));
      return kExitOk;
    }
    if (*verify) {
      const FilterBank fb = io::read_bank(verify_bank_path);
      const VerificationReport report =
          verify_bank(fb, FrequencyGrid{verify_grid}, verify_tol.tol, verify_seed);
      if (verify_report) write_json(*verify_report, io::report_to_json(report));
      print_report(out, report);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace lctfb::cli
