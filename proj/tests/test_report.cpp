#include "mathbench/report.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace mathbench;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mathbench_report_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const Registry& registry() {
  static const Registry r = Registry::create();
  return r;
}

RunReport binary16_report(const std::vector<MathFunction>& functions) {
  TestConfigEntry entry;
  entry.test_name = "test-binary16RN-exhaustive-nofastmath";
  entry.format = kBinary16;
  RunOptions options;
  options.workers = 2;
  options.functions = functions;
  return make_report(entry, options.workers, run_config_entry(registry(), entry, options));
}

}  // namespace

TEST(Report, UlpsFormatting) {
  EXPECT_EQ(format_ulps(0.5), "0.5");
  EXPECT_EQ(format_ulps(0.4999312), "0.49993");
  EXPECT_EQ(format_ulps(0.50001234), "0.50001");
  EXPECT_EQ(format_ulps(2.4213), "2.4213");
  EXPECT_EQ(format_ulps(0.0), "0");
}

TEST(Report, DecimalFileParsesBackToTheResults) {
  const RunReport report = binary16_report({MathFunction::sqrt, MathFunction::exp, MathFunction::tanpi,
                                            MathFunction::asin});
  const auto dir = temp_dir("decimal");
  const auto file = write_decimal_report(report, dir);
  EXPECT_EQ(file, dir / "test-binary16RN-exhaustive-nofastmath.txt");

  const std::string text = slurp(file);
  EXPECT_NE(text.find("\nFunction ULPs Input Output MPFR Tests\n"), std::string::npos);

  const ParsedReport parsed = parse_decimal_report(file, kBinary16);
  ASSERT_EQ(parsed.rows.size(), report.rows.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const FunctionResult& want = report.rows[i];
    const ParsedRow& got = parsed.rows[i];
    EXPECT_EQ(got.function, want.name);
    ASSERT_TRUE(got.has_values);
    EXPECT_EQ(got.ulps_text, format_ulps(want.max_err_ulps));
    EXPECT_EQ(got.input, want.argmax_input);
    EXPECT_EQ(got.output, want.argmax_output);
    EXPECT_EQ(got.reference, want.argmax_reference);
    EXPECT_EQ(got.tests, want.tests_run);
    // The reference column is exact at the policy precision.
    EXPECT_NO_THROW(parse_bigfloat(got.reference, ReferencePolicy::bits_for(kBinary16)));
  }
  EXPECT_EQ(parsed.rows[2].function, "sqrt");
  EXPECT_EQ(parsed.rows[2].tests, 31744u);
  bool has_note = false;
  for (const auto& m : parsed.metadata) has_note |= m.rfind("note tanpi:", 0) == 0;
  EXPECT_TRUE(has_note);
}

TEST(Report, HexFileMatchesDecimalRows) {
  const RunReport report = binary16_report({MathFunction::log2, MathFunction::cos, MathFunction::atanh});
  const auto dir = temp_dir("hex");
  const auto dec = parse_decimal_report(write_decimal_report(report, dir), kBinary16);
  const auto hex_file = write_hex_report(report, dir);
  EXPECT_EQ(hex_file.filename(), "HEX_test-binary16RN-exhaustive-nofastmath.txt");
  const auto hex = parse_hex_report(hex_file, kBinary16);
  ASSERT_EQ(hex.rows.size(), dec.rows.size());
  for (std::size_t i = 0; i < hex.rows.size(); ++i) {
    EXPECT_EQ(hex.rows[i].function, dec.rows[i].function);
    EXPECT_EQ(hex.rows[i].ulps_text, dec.rows[i].ulps_text);
    EXPECT_EQ(hex.rows[i].input, dec.rows[i].input);
    EXPECT_EQ(hex.rows[i].output, dec.rows[i].output);
    const auto f = function_by_name(hex.rows[i].function);
    ASSERT_TRUE(f);
    EXPECT_TRUE(registry().domain_of(*f, kBinary16).contains(hex.rows[i].input));
  }
  EXPECT_NE(slurp(hex_file).find("\nFunction ULPs Input Output\n"), std::string::npos);
}

TEST(Report, HexEncodingOfOne) {
  RunReport report;
  report.test_name = "one";
  FunctionResult row;
  row.name = "sqrt";
  row.measured = true;
  row.max_err_ulps = 0.5;
  row.argmax_input = 1.0;
  row.argmax_output = 1.0;
  row.argmax_reference = "1";
  row.tests_run = 1;
  report.rows.push_back(row);
  const std::string hex = render_hex_report(report);
  EXPECT_NE(hex.find("\nsqrt 0.5 3C00 3C00\n"), std::string::npos) << hex;
  const std::string dec = render_decimal_report(report);
  EXPECT_NE(dec.find("\nsqrt 0.5 1 1 1 1\n"), std::string::npos) << dec;
}

TEST(Report, ErrorRowsUsePlaceholders) {
  RunReport report;
  report.test_name = "err";
  FunctionResult row;
  row.name = "exp";
  row.error = "something broke";
  report.rows.push_back(row);
  const auto dir = temp_dir("error");
  const auto parsed = parse_decimal_report(write_decimal_report(report, dir), kBinary16);
  ASSERT_EQ(parsed.rows.size(), 1u);
  EXPECT_FALSE(parsed.rows[0].has_values);
  EXPECT_NE(render_decimal_report(report).find("# error exp: something broke"), std::string::npos);
}

TEST(Report, NonNearestRoundingIsMarkedAsPlaceholder) {
  RunReport report;
  report.test_name = "rz";
  report.rounding = RoundingMode::RZ;
  EXPECT_NE(render_decimal_report(report).find("placeholder"), std::string::npos);
}

TEST(Report, IdenticalReportsGiveIdenticalBytes) {
  const RunReport report = binary16_report({MathFunction::cbrt});
  EXPECT_EQ(render_decimal_report(report), render_decimal_report(report));
  RunReport other = report;
  other.workers = 7;
  other.timestamp = "later";
  other.rows[0].sweep_seconds += 1.0;
  EXPECT_NE(render_decimal_report(report), render_decimal_report(other));
  EXPECT_EQ(stable_content(render_decimal_report(report)), stable_content(render_decimal_report(other)));
}

TEST(Report, UnwritableDirectoryThrows) {
  const auto blocker = temp_dir("blocker");
  { std::ofstream(blocker) << "x"; }
  RunReport report;
  report.test_name = "x";
  EXPECT_THROW(write_decimal_report(report, blocker / "sub"), ReportError);
  std::filesystem::remove(blocker);
}
