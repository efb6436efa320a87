#pragma once

#include "mathbench/config.hpp"
#include "mathbench/refeval.hpp"
#include "mathbench/registry.hpp"
#include "mathbench/search.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mathbench {

struct FunctionResult {
  std::string name;
  bool measured = false;  // false: every point was skipped or failed
  double max_err_ulps = 0.0;
  double argmax_input = 0.0;
  double argmax_output = 0.0;
  std::string argmax_reference;  // shortest round-trip decimal at policy precision
  std::uint64_t tests_run = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;  // NaN results for defined references
  std::vector<std::string> warnings;
  std::string error;  // set when the function could not be run at all

  // Timing metadata, excluded from result comparisons.
  double calibration_ns = 0.0;
  std::uint64_t planned_points = 0;
  std::uint64_t special_points = 0;
  double sweep_seconds = 0.0;
};

// Evaluates one input: native value, reference at ctx.bits(), error in ULPs.
void test_point(MathFunction f, NativeFn native, double x, const FloatFormat& fmt, ReferenceContext& ctx,
                BigFloat& scratch, ErrorRecord& out);

// Convenience form at the policy precision. Throws std::invalid_argument if x
// is not in the function's domain.
ErrorRecord test_point(const Registry& registry, MathFunction f, double x, const FloatFormat& fmt);

// Running maximum with the tie rule "smallest rank wins" (then -0 before +0),
// plus per-status tallies. merge() is associative and commutative.
class MaxErrorAccumulator {
 public:
  explicit MaxErrorAccumulator(int bits);

  void add(const ErrorRecord& record, std::int64_t input_rank);
  void merge(const MaxErrorAccumulator& other);
  std::uint64_t tests() const { return tests_; }

  FunctionResult finish(std::string_view name, const FloatFormat& fmt) const;

 private:
  struct Tally {
    std::uint64_t count = 0;
    std::int64_t first_rank = 0;
    double first_input = 0.0;
  };
  static constexpr std::size_t kStatusCount = 6;

  bool better(double err, std::int64_t r, double x) const;

  bool has_max_ = false;
  double max_err_ = 0.0;
  std::int64_t max_rank_ = 0;
  double max_input_ = 0.0;
  double max_output_ = 0.0;
  BigFloat max_ref_;
  std::uint64_t tests_ = 0;
  std::array<Tally, kStatusCount> tallies_{};
};

FunctionResult reduce_max(std::span<const ErrorRecord> records, std::string_view name, const FloatFormat& fmt);

// Calibrates (budgeted strategies only), plans, sweeps the domain on the pool,
// adds the registry's special points and reduces.
FunctionResult run_function(const Registry& registry, MathFunction f, const FloatFormat& fmt, Strategy strategy,
                            const WorkerPool& pool);

struct RunOptions {
  unsigned workers = 1;
  std::vector<MathFunction> functions;  // empty: all, in registry order
  std::ostream* progress = nullptr;     // one line per completed function
};

// Results in registry order. A function that throws gets a result with
// `error` set; the remaining functions still run.
std::vector<FunctionResult> run_config_entry(const Registry& registry, const TestConfigEntry& entry,
                                             const RunOptions& options);

}  // namespace mathbench
