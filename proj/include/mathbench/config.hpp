#pragma once

#include "mathbench/fpcore.hpp"
#include "mathbench/search.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mathbench {

// One named test from the JSON descriptor:
//   "<test_name>": {"format": "binary16", "rounding": "RN", "fastmath": 0, "search": "exhaustive"}
struct TestConfigEntry {
  std::string test_name;
  FloatFormat format = kBinary16;
  RoundingMode rounding = RoundingMode::RN;
  int fastmath = 0;
  Strategy search = Strategy::exhaustive;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Entries in file order. Throws ConfigError naming the entry key and field on
// the first problem.
std::vector<TestConfigEntry> parse_config(const std::filesystem::path& path);
std::vector<TestConfigEntry> parse_config_text(const std::string& json_text);

}  // namespace mathbench
