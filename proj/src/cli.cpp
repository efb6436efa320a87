#include "mathbench/cli.hpp"

#include "mathbench/config.hpp"
#include "mathbench/report.hpp"
#include "mathbench/runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <thread>

#ifndef MATHBENCH_WORSTCASE_DIR
#define MATHBENCH_WORSTCASE_DIR "worstcases"
#endif

namespace mathbench {

namespace {

std::optional<unsigned> parse_workers(const std::string& text) {
  if (text == "auto") return std::max(1u, std::thread::hardware_concurrency());
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) return std::nullopt;
  return value;
}

std::optional<std::vector<MathFunction>> parse_functions(const std::string& csv, std::string& bad) {
  std::vector<MathFunction> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string name = csv.substr(pos, comma - pos);
    if (!name.empty()) {
      const auto f = function_by_name(name);
      if (!f) {
        bad = name;
        return std::nullopt;
      }
      out.push_back(*f);
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::filesystem::path default_worstcase_dir() { return MATHBENCH_WORSTCASE_DIR; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ULP error bench for univariate math library functions"};
  std::string threads = "1";
  std::string config_path = "config.json";
  std::string outputs = "outputs";
  std::string functions_csv;
  std::string worstcases = default_worstcase_dir().string();
  app.add_option("-t,--threads", threads, "Worker count, or 'auto' for the hardware core count");
  app.add_option("--config", config_path, "Test descriptor file");
  app.add_option("--outputs", outputs, "Directory for result files");
  app.add_option("--functions", functions_csv, "Comma-separated subset of functions to test");
  app.add_option("--worstcases", worstcases, "Directory of special-point files (empty to disable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  const auto workers = parse_workers(threads);
  if (!workers) {
    err << "error: -t expects a positive integer or 'auto', got '" << threads << "'\n";
    return kExitConfigError;
  }
  RunOptions options;
  options.workers = *workers;
  options.progress = &err;
  std::string bad;
  const auto selected = parse_functions(functions_csv, bad);
  if (!selected) {
    err << "error: unknown function '" << bad << "' in --functions\n";
    return kExitConfigError;
  }
  options.functions = *selected;

  std::vector<TestConfigEntry> entries;
  try {
    entries = parse_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (entries.empty()) {
    out << "nothing to do\n";
    return kExitOk;
  }

  std::optional<Registry> registry;
  try {
    registry.emplace(Registry::create(worstcases));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }

  int status = kExitOk;
  for (const auto& entry : entries) {
    if (entry.rounding != RoundingMode::RN) {
      err << "warning: test '" << entry.test_name << "': rounding " << to_string(entry.rounding)
          << " is a placeholder; RN semantics used\n";
    }
    try {
      auto rows = run_config_entry(*registry, entry, options);
      const bool complete = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.error.empty(); });
      const RunReport report = make_report(entry, options.workers, std::move(rows));
      out << write_decimal_report(report, outputs).string() << '\n';
      out << write_hex_report(report, outputs).string() << '\n';
      if (!complete) {
        err << "error: test '" << entry.test_name << "': some functions could not be run\n";
        status = kExitRuntimeError;
      }
    } catch (const std::exception& e) {
      err << "error: test '" << entry.test_name << "': " << e.what() << '\n';
      status = kExitRuntimeError;
    }
  }
  return status;
}

}  // namespace mathbench
