#include "lctfb/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lctfb/error.hpp"

namespace lctfb::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const char* what) {
  T value{};
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    parse_fail(line, std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

// Shared reader for "<index>,re,im" tables with consecutive indices.
Signal read_indexed_csv(std::istream& in, double period, const char* index_name) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  Index first = 0;
  Index expected = 0;
  std::vector<cplx> samples;
  const std::string header = std::string(index_name) + ",re,im";

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!header_seen) {
      if (t != header) parse_fail(line_no, "expected header '" + header + "'");
      header_seen = true;
      continue;
    }
    const auto fields = split_fields(t);
    if (fields.size() != 3) {
      parse_fail(line_no, "expected 3 fields, found " + std::to_string(fields.size()));
    }
    const auto n = parse_number<Index>(fields[0], line_no, index_name);
    const auto re = parse_number<double>(fields[1], line_no, "real part");
    const auto im = parse_number<double>(fields[2], line_no, "imaginary part");
    if (samples.empty()) {
      first = n;
    } else if (n != expected) {
      parse_fail(line_no, "index " + std::to_string(n) + " is not consecutive (expected " +
                              std::to_string(expected) + ")");
    }
    expected = n + 1;
    samples.emplace_back(re, im);
  }
  if (!header_seen) parse_fail(line_no + 1, "missing header '" + header + "'");
  if (samples.empty()) parse_fail(line_no + 1, "no samples");
  return Signal(std::move(samples), first, period);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  return out;
}

json samples_to_json(const Signal& s) {
  json arr = json::array();
  for (const cplx& v : s.samples()) arr.push_back({{"re", v.real()}, {"im", v.imag()}});
  return arr;
}

Signal samples_from_json(const json& arr, double period, const char* name) {
  if (!arr.is_array() || arr.empty()) {
    throw Error(ErrorCode::ParseError, std::string(name) + " must be a non-empty array");
  }
  std::vector<cplx> out;
  out.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e["re"].is_number() ||
        !e["im"].is_number()) {
      throw Error(ErrorCode::ParseError, std::string(name) + " entries must be {re, im}");
    }
    out.emplace_back(e["re"].get<double>(), e["im"].get<double>());
  }
  return Signal(std::move(out), 0, period);
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw Error(ErrorCode::ParseError, std::string("missing numeric field '") + key + "'");
  }
  return j[key].get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Signal read_signal_csv(std::istream& in, double period) { return read_indexed_csv(in, period, "n"); }

Signal read_signal_csv(const std::filesystem::path& path, double period) {
  auto in = open_in(path);
  return read_signal_csv(in, period);
}

void write_signal_csv(std::ostream& out, const Signal& x) {
  out << "n,re,im\n";
  for (Index n = x.start(); n < x.end(); ++n) {
    const cplx v = x.at(n);
    out << n << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

void write_signal_csv(const std::filesystem::path& path, const Signal& x) {
  auto out = open_out(path);
  write_signal_csv(out, x);
}

Signal read_prototype_csv(std::istream& in, double period) {
  Signal h = read_indexed_csv(in, period, "k");
  if (h.start() != 0) throw Error(ErrorCode::ParseError, "prototype indices must start at k = 0");
  return h;
}

Signal read_prototype_csv(const std::filesystem::path& path, double period) {
  auto in = open_in(path);
  return read_prototype_csv(in, period);
}

void write_prototype_csv(std::ostream& out, const Signal& h) {
  out << "k,re,im\n";
  for (Index n = h.start(); n < h.end(); ++n) {
    const cplx v = h.at(n);
    out << n << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "omega,re,im,abs\n";
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    const cplx v = s.values[k];
    out << format_double(s.grid.omega(k)) << ',' << format_double(v.real()) << ','
        << format_double(v.imag()) << ',' << format_double(std::abs(v)) << '\n';
  }
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s) {
  auto out = open_out(path);
  write_spectrum_csv(out, s);
}

double read_period_sidecar(const std::filesystem::path& signal_path) {
  std::filesystem::path sidecar = signal_path;
  sidecar += ".json";
  if (!std::filesystem::exists(sidecar)) return 0.0;
  auto in = open_in(sidecar);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, sidecar.string() + ": " + e.what());
  }
  if (j.contains("period")) return number_field(j, "period");
  return number_field(j, "T");
}

json bank_to_json(const FilterBank& fb) {
  const LctParams& p = fb.params;
  return json{{"a", p.a()},
              {"b", p.b()},
              {"c", p.c()},
              {"d", p.d()},
              {"T", fb.period()},
              {"N", fb.order},
              {"h0", samples_to_json(fb.h0)},
              {"h1", samples_to_json(fb.h1)},
              {"g0", samples_to_json(fb.g0)},
              {"g1", samples_to_json(fb.g1)}};
}

FilterBank bank_from_json(const json& j, double tolerance) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "filter bank JSON must be an object");
  const LctParams p = LctParams::validate(number_field(j, "a"), number_field(j, "b"),
                                          number_field(j, "c"), number_field(j, "d"));
  const double period = number_field(j, "T");
  if (!j.contains("N") || !j["N"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "missing integer field 'N'");
  }
  const int order = j["N"].get<int>();
  if (!j.contains("h0")) throw Error(ErrorCode::ParseError, "missing field 'h0'");
  Signal h0 = samples_from_json(j["h0"], period, "h0");
  FilterBank fb = make_filter_bank(h0, order, p);

  FilterBank given = fb;
  if (j.contains("h1")) given.h1 = samples_from_json(j["h1"], period, "h1");
  if (j.contains("g0")) given.g0 = samples_from_json(j["g0"], period, "g0");
  if (j.contains("g1")) given.g1 = samples_from_json(j["g1"], period, "g1");
  check_bank_consistency(given, tolerance);
  return fb;
}

FilterBank read_bank(const std::filesystem::path& path) {
  auto in = open_in(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return bank_from_json(j);
}

void write_bank(const std::filesystem::path& path, const FilterBank& fb,
                const VerificationReport* report) {
  json j = bank_to_json(fb);
  if (report != nullptr) j["report"] = report_to_json(*report);
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

json report_to_json(const VerificationReport& r) {
  const auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  return json{{"max_pr_error", opt(r.max_pr_error)},
              {"max_pr_magnitude_error", opt(r.max_pr_magnitude_error)},
              {"max_pu_error", opt(r.max_pu_error)},
              {"max_ps_error", opt(r.max_ps_error)},
              {"n_grid", r.grid.count},
              {"seed", r.seed ? json(*r.seed) : json(nullptr)},
              {"tolerances", {{"ps", r.tolerances.ps}, {"pu", r.tolerances.pu}, {"pr", r.tolerances.pr}}},
              {"passed", r.passed()}};
}

}  // namespace lctfb::io
