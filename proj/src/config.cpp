#include "mathbench/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace mathbench {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kFields{"format", "rounding", "fastmath", "search"};

std::string field_error(const std::string& key, const std::string& field, const std::string& what) {
  return "config entry '" + key + "', field '" + field + "': " + what;
}

std::string string_field(const Json& obj, const std::string& key, const std::string& field) {
  const auto it = obj.find(field);
  if (it == obj.end()) throw ConfigError(field_error(key, field, "missing"));
  if (!it->is_string()) throw ConfigError(field_error(key, field, "expected a string"));
  return it->get<std::string>();
}

TestConfigEntry parse_entry(const std::string& key, const Json& obj) {
  if (!obj.is_object()) throw ConfigError("config entry '" + key + "': expected an object");
  for (const auto& item : obj.items()) {
    if (!kFields.count(item.key())) throw ConfigError(field_error(key, item.key(), "unknown field"));
  }

  TestConfigEntry entry;
  entry.test_name = key;

  const std::string format = string_field(obj, key, "format");
  if (format != "binary16" && format != "binary32" && format != "binary64") {
    throw ConfigError(field_error(key, "format", "unknown format '" + format + "' (binary16, binary32, binary64)"));
  }
  entry.format = *format_by_name(format);

  const std::string rounding = string_field(obj, key, "rounding");
  const auto mode = rounding_mode_by_name(rounding);
  if (!mode) throw ConfigError(field_error(key, "rounding", "unknown rounding mode '" + rounding + "' (RN, RU, RD, RZ)"));
  entry.rounding = *mode;

  const auto fm = obj.find("fastmath");
  if (fm == obj.end()) throw ConfigError(field_error(key, "fastmath", "missing"));
  if (!fm->is_number_integer() || (fm->get<long long>() != 0 && fm->get<long long>() != 1)) {
    throw ConfigError(field_error(key, "fastmath", "expected 0 or 1"));
  }
  entry.fastmath = fm->get<int>();

  const std::string search = string_field(obj, key, "search");
  const auto strategy = strategy_by_name(search);
  if (!strategy) {
    throw ConfigError(
        field_error(key, "search", "unknown strategy '" + search + "' (seconds, minutes, hours, days, exhaustive)"));
  }
  entry.search = *strategy;
  return entry;
}

}  // namespace

std::vector<TestConfigEntry> parse_config_text(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object of named tests");
  std::vector<TestConfigEntry> entries;
  for (const auto& item : doc.items()) entries.push_back(parse_entry(item.key(), item.value()));
  return entries;
}

std::vector<TestConfigEntry> parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace mathbench
