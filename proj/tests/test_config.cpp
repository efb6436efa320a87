#include "mathbench/config.hpp"

#include <gtest/gtest.h>

using namespace mathbench;

namespace {

const char* kExample = R"({
  "test-binary16RN-exhaustive-nofastmath" : {
    "format" : "binary16",
    "rounding" : "RN",
    "fastmath" : 0,
    "search" : "exhaustive"
  },
  "test-binary32RN-exhaustive-nofastmath" : {
    "format" : "binary32",
    "rounding" : "RN",
    "fastmath" : 0,
    "search" : "exhaustive"
  },
  "test-binary64RN-hours-nofastmath" : {
    "format" : "binary64",
    "rounding" : "RN",
    "fastmath" : 0,
    "search" : "hours"
  }
})";

std::string error_of(const std::string& json) {
  try {
    parse_config_text(json);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, ExampleFileGivesThreeEntriesInOrder) {
  const auto entries = parse_config_text(kExample);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].test_name, "test-binary16RN-exhaustive-nofastmath");
  EXPECT_EQ(entries[0].format, kBinary16);
  EXPECT_EQ(entries[0].search, Strategy::exhaustive);
  EXPECT_EQ(entries[1].format, kBinary32);
  EXPECT_EQ(entries[2].format, kBinary64);
  EXPECT_EQ(entries[2].search, Strategy::hours);
  for (const auto& e : entries) {
    EXPECT_EQ(e.rounding, RoundingMode::RN);
    EXPECT_EQ(e.fastmath, 0);
  }
}

TEST(Config, RepositoryExampleParses) {
  EXPECT_EQ(parse_config(std::filesystem::path(MATHBENCH_SOURCE_DIR) / "config.json").size(), 3u);
}

TEST(Config, EmptyObject) { EXPECT_TRUE(parse_config_text("{}").empty()); }

TEST(Config, ErrorsNameTheEntryAndField) {
  const std::string weeks = error_of(R"({"t1": {"format": "binary16", "rounding": "RN", "fastmath": 0, "search": "weeks"}})");
  EXPECT_NE(weeks.find("'t1'"), std::string::npos) << weeks;
  EXPECT_NE(weeks.find("'search'"), std::string::npos) << weeks;

  const std::string missing = error_of(R"({"t2": {"format": "binary16", "rounding": "RN", "search": "hours"}})");
  EXPECT_NE(missing.find("'t2'"), std::string::npos);
  EXPECT_NE(missing.find("'fastmath'"), std::string::npos);

  const std::string fmt = error_of(R"({"t3": {"format": "binary128", "rounding": "RN", "fastmath": 0, "search": "hours"}})");
  EXPECT_NE(fmt.find("'format'"), std::string::npos);

  const std::string extra =
      error_of(R"({"t4": {"format": "binary16", "rounding": "RN", "fastmath": 0, "search": "hours", "x": 1}})");
  EXPECT_NE(extra.find("'x'"), std::string::npos);

  EXPECT_NE(error_of(R"({"t5": {"format": "binary16", "rounding": "RA", "fastmath": 0, "search": "hours"}})").find("'rounding'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"t6": {"format": "binary16", "rounding": "RN", "fastmath": 2, "search": "hours"}})").find("'fastmath'"),
            std::string::npos);
  EXPECT_NE(error_of("{ not json").find("malformed JSON"), std::string::npos);
  EXPECT_FALSE(error_of("[1, 2]").empty());
}

TEST(Config, FirstBadEntryFailsTheWholeFile) {
  EXPECT_THROW(parse_config_text(R"({
    "good": {"format": "binary16", "rounding": "RN", "fastmath": 0, "search": "exhaustive"},
    "bad": {"format": "binary16", "rounding": "RN", "fastmath": 0, "search": "weeks"}
  })"),
               ConfigError);
}

TEST(Config, MissingFileNamesThePath) {
  try {
    parse_config("/nonexistent/dir/config.json");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/config.json"), std::string::npos);
  }
}
