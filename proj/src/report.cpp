#include "mathbench/report.hpp"

#include "mathbench/native.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace mathbench {

namespace {

constexpr const char* kDecimalHeader = "Function ULPs Input Output MPFR Tests";
constexpr const char* kHexHeader = "Function ULPs Input Output";

// Metadata keys whose values change between identical runs.
constexpr const char* kVolatileKeys[] = {"# generated:", "# workers:", "# timing "};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_metadata(std::ostringstream& out, const RunReport& r) {
  out << "# test: " << r.test_name << '\n';
  out << "# format: " << r.format.name << '\n';
  out << "# rounding: " << to_string(r.rounding);
  if (r.rounding != RoundingMode::RN) {
    out << " (placeholder: directed-rounding function testing not supported by platform; RN semantics used)";
  }
  out << '\n';
  out << "# fastmath: " << r.fastmath << " (recorded only; no fast-math variants are bound)\n";
  out << "# search: " << to_string(r.search);
  if (r.search != Strategy::exhaustive) {
    out << " (per-worker N = floor(budget / t) after a 1e5-point calibration; calibration time not counted)";
  }
  out << '\n';
  out << "# workers: " << r.workers << '\n';
  out << "# reference: " << r.reference_backend << '\n';
  out << "# native: " << r.native_convention << '\n';
  out << "# generated: " << r.timestamp << '\n';
  char buf[256];
  for (const auto& row : r.rows) {
    if (r.search != Strategy::exhaustive || row.planned_points > 0) {
      std::snprintf(buf, sizeof buf, "# timing %s: t_ns=%.1f planned=%llu special=%llu sweep_s=%.3f\n",
                    row.name.c_str(), row.calibration_ns, static_cast<unsigned long long>(row.planned_points),
                    static_cast<unsigned long long>(row.special_points), row.sweep_seconds);
      out << buf;
    }
  }
  for (const auto& row : r.rows) {
    if (!row.error.empty()) out << "# error " << row.name << ": " << row.error << '\n';
    for (const auto& w : row.warnings) out << "# note " << row.name << ": " << w << '\n';
  }
}

bool has_values(const FunctionResult& row) { return row.error.empty() && row.measured; }

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportError("cannot write report file " + file.string());
  out << text;
  out.flush();
  if (!out) throw ReportError("failed writing report file " + file.string());
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw ReportError("cannot create output directory " + dir.string() + (ec ? ": " + ec.message() : ""));
  }
}

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ReportError("cannot read report file " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

ParsedReport parse_report(const std::filesystem::path& file, const FloatFormat& fmt, bool decimal) {
  ParsedReport parsed;
  bool seen_header = false;
  const std::string header = decimal ? kDecimalHeader : kHexHeader;
  for (const auto& line : read_lines(file)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      parsed.metadata.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    if (!seen_header) {
      if (line != header) throw ReportError(file.string() + ": expected column header '" + header + "'");
      seen_header = true;
      continue;
    }
    std::istringstream fields(line);
    ParsedRow row;
    std::string input, output, tests;
    fields >> row.function >> row.ulps_text >> input >> output;
    if (decimal) fields >> row.reference >> tests;
    if (!fields || (decimal && tests.empty())) throw ReportError(file.string() + ": malformed row '" + line + "'");
    try {
      row.has_values = row.ulps_text != "-";
      if (row.has_values) {
        row.ulps = std::stod(row.ulps_text);
        row.input = decimal ? parse_decimal(input, fmt) : decode_hex(input, fmt);
        row.output = decimal ? parse_decimal(output, fmt) : decode_hex(output, fmt);
      }
      if (decimal) row.tests = std::stoull(tests);
    } catch (const std::exception& e) {
      throw ReportError(file.string() + ": malformed row '" + line + "': " + e.what());
    }
    parsed.rows.push_back(std::move(row));
  }
  if (!seen_header) throw ReportError(file.string() + ": missing column header");
  return parsed;
}

}  // namespace

RunReport make_report(const TestConfigEntry& entry, unsigned workers, std::vector<FunctionResult> rows) {
  RunReport r;
  r.test_name = entry.test_name;
  r.format = entry.format;
  r.rounding = entry.rounding;
  r.fastmath = entry.fastmath;
  r.search = entry.search;
  r.workers = workers;
  const int bits = ReferencePolicy::bits_for(entry.format);
  r.reference_backend = std::string("MPFR ") + mpfr_get_version() + ", " + std::to_string(bits) +
                        " bits, round to nearest; MPFR column is the reference value as the shortest decimal that "
                        "round-trips at " + std::to_string(bits) + " bits";
  r.native_convention = native_convention(entry.format);
  r.timestamp = utc_timestamp();
  r.rows = std::move(rows);
  return r;
}

std::string format_ulps(double ulps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", ulps);
  return buf;
}

std::string render_decimal_report(const RunReport& report) {
  std::ostringstream out;
  write_metadata(out, report);
  out << kDecimalHeader << '\n';
  for (const auto& row : report.rows) {
    out << row.name << ' ';
    if (has_values(row)) {
      out << format_ulps(row.max_err_ulps) << ' ' << to_shortest_decimal(row.argmax_input, report.format) << ' '
          << to_shortest_decimal(row.argmax_output, report.format) << ' ' << row.argmax_reference << ' ';
    } else {
      out << "- - - - ";
    }
    out << row.tests_run << '\n';
  }
  return out.str();
}

std::string render_hex_report(const RunReport& report) {
  std::ostringstream out;
  write_metadata(out, report);
  out << kHexHeader << '\n';
  for (const auto& row : report.rows) {
    out << row.name << ' ';
    if (has_values(row)) {
      out << format_ulps(row.max_err_ulps) << ' ' << encode_hex(row.argmax_input, report.format) << ' '
          << encode_hex(row.argmax_output, report.format) << '\n';
    } else {
      out << "- - -\n";
    }
  }
  return out.str();
}

std::filesystem::path write_decimal_report(const RunReport& report, const std::filesystem::path& dir) {
  ensure_dir(dir);
  const auto file = dir / (report.test_name + ".txt");
  write_text(file, render_decimal_report(report));
  return file;
}

std::filesystem::path write_hex_report(const RunReport& report, const std::filesystem::path& dir) {
  ensure_dir(dir);
  const auto file = dir / ("HEX_" + report.test_name + ".txt");
  write_text(file, render_hex_report(report));
  return file;
}

ParsedReport parse_decimal_report(const std::filesystem::path& file, const FloatFormat& fmt) {
  return parse_report(file, fmt, true);
}

ParsedReport parse_hex_report(const std::filesystem::path& file, const FloatFormat& fmt) {
  return parse_report(file, fmt, false);
}

std::string stable_content(const std::string& report_text) {
  std::istringstream in(report_text);
  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    bool skip = false;
    for (const char* key : kVolatileKeys) {
      if (line.rfind(key, 0) == 0) skip = true;
    }
    if (!skip) out += line + '\n';
  }
  return out;
}

}  // namespace mathbench
