#include "mathbench/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace mathbench {

void test_point(MathFunction f, NativeFn native, double x, const FloatFormat& fmt, ReferenceContext& ctx,
                BigFloat& scratch, ErrorRecord& out) {
  out.input = x;
  out.native_out = native(x);
  out.err_ulps = 0.0;
  switch (ctx.evaluate(f, x, out.reference)) {
    case ReferenceStatus::domain_error:
      out.status = RecordStatus::domain_error;
      return;
    case ReferenceStatus::infinite:
      out.status = RecordStatus::reference_infinite;
      return;
    case ReferenceStatus::ok:
      break;
  }
  const UlpError e = ulp_error(out.native_out, out.reference, fmt, scratch);
  switch (e.status) {
    case UlpError::Status::ok:
      out.status = RecordStatus::measured;
      out.err_ulps = e.ulps;
      break;
    case UlpError::Status::overflow:
      out.status = RecordStatus::reference_overflow;
      break;
    case UlpError::Status::native_nan:
      out.status = RecordStatus::native_nan;
      break;
    case UlpError::Status::native_infinite:
      out.status = RecordStatus::native_infinite;
      break;
  }
}

ErrorRecord test_point(const Registry& registry, MathFunction f, double x, const FloatFormat& fmt) {
  if (!registry.domain_of(f, fmt).contains(x) || !is_representable(x, fmt)) {
    throw std::invalid_argument(to_shortest_decimal(x, kBinary64) + " is not in the " + std::string(fmt.name) +
                                " domain of " + std::string(name_of(f)));
  }
  const int bits = ReferencePolicy::bits_for(fmt);
  ReferenceContext ctx(bits);
  BigFloat scratch(bits);
  ErrorRecord rec(bits);
  test_point(f, registry.spec(f).native(fmt), x, fmt, ctx, scratch, rec);
  return rec;
}

MaxErrorAccumulator::MaxErrorAccumulator(int bits) : max_ref_(bits) {}

bool MaxErrorAccumulator::better(double err, std::int64_t r, double x) const {
  if (!has_max_) return true;
  if (err != max_err_) return err > max_err_;
  if (r != max_rank_) return r < max_rank_;
  return std::signbit(x) && !std::signbit(max_input_);
}

void MaxErrorAccumulator::add(const ErrorRecord& record, std::int64_t input_rank) {
  ++tests_;
  if (!record.measured()) {
    Tally& t = tallies_[static_cast<std::size_t>(record.status)];
    if (t.count == 0 || input_rank < t.first_rank) {
      t.first_rank = input_rank;
      t.first_input = record.input;
    }
    ++t.count;
    return;
  }
  if (better(record.err_ulps, input_rank, record.input)) {
    has_max_ = true;
    max_err_ = record.err_ulps;
    max_rank_ = input_rank;
    max_input_ = record.input;
    max_output_ = record.native_out;
    max_ref_ = record.reference;
  }
}

void MaxErrorAccumulator::merge(const MaxErrorAccumulator& other) {
  tests_ += other.tests_;
  for (std::size_t i = 0; i < kStatusCount; ++i) {
    const Tally& o = other.tallies_[i];
    if (o.count == 0) continue;
    Tally& t = tallies_[i];
    if (t.count == 0 || o.first_rank < t.first_rank) {
      t.first_rank = o.first_rank;
      t.first_input = o.first_input;
    }
    t.count += o.count;
  }
  if (other.has_max_ && better(other.max_err_, other.max_rank_, other.max_input_)) {
    has_max_ = true;
    max_err_ = other.max_err_;
    max_rank_ = other.max_rank_;
    max_input_ = other.max_input_;
    max_output_ = other.max_output_;
    max_ref_ = other.max_ref_;
  }
}

FunctionResult MaxErrorAccumulator::finish(std::string_view name, const FloatFormat& fmt) const {
  FunctionResult r;
  r.name = std::string(name);
  r.tests_run = tests_;
  r.measured = has_max_;
  if (has_max_) {
    r.max_err_ulps = max_err_;
    r.argmax_input = max_input_;
    r.argmax_output = max_output_;
    r.argmax_reference = to_shortest_decimal(max_ref_);
  } else {
    r.warnings.push_back("no measurable points");
  }
  for (std::size_t i = 1; i < kStatusCount; ++i) {
    const Tally& t = tallies_[i];
    if (t.count == 0) continue;
    const auto status = static_cast<RecordStatus>(i);
    if (status == RecordStatus::native_nan) {
      r.failures += t.count;
    } else {
      r.skipped += t.count;
    }
    r.warnings.push_back(std::to_string(t.count) + (status == RecordStatus::native_nan ? " failed: " : " skipped: ") +
                         std::string(to_string(status)) + "; first at " + to_shortest_decimal(t.first_input, fmt));
  }
  return r;
}

FunctionResult reduce_max(std::span<const ErrorRecord> records, std::string_view name, const FloatFormat& fmt) {
  const int bits = records.empty() ? ReferencePolicy::bits_for(fmt) : static_cast<int>(records[0].reference.precision());
  MaxErrorAccumulator acc(bits);
  for (const auto& rec : records) acc.add(rec, rank(rec.input, fmt));
  return acc.finish(name, fmt);
}

namespace {

struct WorkerState {
  explicit WorkerState(int bits) : ctx(bits), scratch(bits), record(bits), acc(bits) {}
  ReferenceContext ctx;
  BigFloat scratch;
  ErrorRecord record;
  MaxErrorAccumulator acc;
};

std::vector<std::unique_ptr<WorkerState>> make_states(unsigned workers, int bits) {
  std::vector<std::unique_ptr<WorkerState>> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(std::make_unique<WorkerState>(bits));
  return states;
}

ChunkRunner sweep_chunks(std::vector<std::unique_ptr<WorkerState>>& states, MathFunction f, NativeFn native,
                         const FloatFormat& fmt) {
  return [&states, f, native, fmt](const Chunk& chunk, unsigned w) -> std::uint64_t {
    WorkerState& s = *states[w];
    for (std::uint64_t i = 0; i < chunk.count; ++i) {
      const std::int64_t r = chunk.rank_at(i);
      test_point(f, native, unrank(r, fmt), fmt, s.ctx, s.scratch, s.record);
      s.acc.add(s.record, r);
    }
    return chunk.count;
  };
}

}  // namespace

FunctionResult run_function(const Registry& registry, MathFunction f, const FloatFormat& fmt, Strategy strategy,
                            const WorkerPool& pool) {
  const Interval domain = registry.domain_of(f, fmt);
  const NativeFn native = registry.spec(f).native(fmt);
  const int bits = ReferencePolicy::bits_for(fmt);
  const unsigned workers = pool.size();

  double t_ns = 0.0;
  if (strategy != Strategy::exhaustive) {
    auto scratch_states = make_states(workers, bits);
    t_ns = calibrate(pool, domain, fmt, sweep_chunks(scratch_states, f, native, fmt)).t_ns;
  }

  const std::uint64_t n = budget_to_count(strategy, t_ns, rank_span(domain, fmt), workers);
  SearchPlan p = plan(domain, fmt, n, workers);
  p.t_ns = t_ns;

  auto states = make_states(workers, bits);
  const auto start = std::chrono::steady_clock::now();
  execute(p, pool, sweep_chunks(states, f, native, fmt));
  const auto stop = std::chrono::steady_clock::now();

  MaxErrorAccumulator total(bits);
  for (const auto& s : states) total.merge(s->acc);

  WorkerState& s0 = *states[0];
  MaxErrorAccumulator special(bits);
  const auto& points = registry.special_points(f, fmt);
  for (double x : points) {
    test_point(f, native, x, fmt, s0.ctx, s0.scratch, s0.record);
    special.add(s0.record, rank(x, fmt));
  }
  total.merge(special);

  FunctionResult result = total.finish(name_of(f), fmt);
  for (auto& w : registry.load_warnings_for(f, fmt)) result.warnings.push_back(std::move(w));
  result.calibration_ns = t_ns;
  result.planned_points = p.total_points();
  result.special_points = points.size();
  result.sweep_seconds = std::chrono::duration<double>(stop - start).count();
  return result;
}

std::vector<FunctionResult> run_config_entry(const Registry& registry, const TestConfigEntry& entry,
                                             const RunOptions& options) {
  const WorkerPool pool(options.workers);
  std::vector<MathFunction> selected = options.functions;
  if (selected.empty()) selected.assign(kAllFunctions.begin(), kAllFunctions.end());

  std::vector<FunctionResult> results;
  for (MathFunction f : kAllFunctions) {
    if (std::find(selected.begin(), selected.end(), f) == selected.end()) continue;
    FunctionResult r;
    try {
      r = run_function(registry, f, entry.format, entry.search, pool);
    } catch (const std::exception& e) {
      r = FunctionResult{};
      r.name = std::string(name_of(f));
      r.error = e.what();
    }
    if (options.progress) {
      char line[256];
      if (!r.error.empty()) {
        std::snprintf(line, sizeof line, "%s %s: error: %s\n", entry.test_name.c_str(), r.name.c_str(),
                      r.error.c_str());
      } else {
        std::snprintf(line, sizeof line, "%s %s: max %.5g ulp, %llu tests, %.2f s\n", entry.test_name.c_str(),
                      r.name.c_str(), r.max_err_ulps, static_cast<unsigned long long>(r.tests_run), r.sweep_seconds);
      }
      *options.progress << line << std::flush;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace mathbench
