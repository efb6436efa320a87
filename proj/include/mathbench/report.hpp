#pragma once

// Result files: `<dir>/<test_name>.txt` with columns
//   Function ULPs Input Output MPFR Tests
// and `<dir>/HEX_<test_name>.txt` with columns
//   Function ULPs Input Output
// Metadata precedes the table as '#'-prefixed lines. The "MPFR" column holds
// the reference value.

#include "mathbench/config.hpp"
#include "mathbench/runner.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mathbench {

struct RunReport {
  std::string test_name;
  FloatFormat format = kBinary16;
  RoundingMode rounding = RoundingMode::RN;
  int fastmath = 0;
  Strategy search = Strategy::exhaustive;
  unsigned workers = 1;
  std::string reference_backend;
  std::string native_convention;
  std::string timestamp;  // ISO 8601 UTC
  std::vector<FunctionResult> rows;
};

// Fills the metadata for an entry; the timestamp is the current time.
RunReport make_report(const TestConfigEntry& entry, unsigned workers, std::vector<FunctionResult> rows);

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_ulps(double ulps);  // 5 significant digits

std::string render_decimal_report(const RunReport& report);
std::string render_hex_report(const RunReport& report);

// Create `dir` if needed and write the file; throw ReportError on failure.
std::filesystem::path write_decimal_report(const RunReport& report, const std::filesystem::path& dir);
std::filesystem::path write_hex_report(const RunReport& report, const std::filesystem::path& dir);

struct ParsedRow {
  std::string function;
  std::string ulps_text;
  double ulps = 0.0;
  bool has_values = false;  // false for "-" placeholders
  double input = 0.0;
  double output = 0.0;
  std::string reference;    // verbatim
  std::uint64_t tests = 0;
};

struct ParsedReport {
  std::vector<std::string> metadata;  // '#' lines, prefix stripped
  std::vector<ParsedRow> rows;
};

// Parse a decimal (has_reference = true) or hex report back. Throws
// ReportError on malformed content.
ParsedReport parse_decimal_report(const std::filesystem::path& file, const FloatFormat& fmt);
ParsedReport parse_hex_report(const std::filesystem::path& file, const FloatFormat& fmt);

// Report text without the metadata lines that vary between otherwise
// identical runs (timestamp, worker count, timings).
std::string stable_content(const std::string& report_text);

}  // namespace mathbench
