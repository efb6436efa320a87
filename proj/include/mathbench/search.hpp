#pragma once

// Input-space search: strategies, budgets and fixed-stride plans over the
// rank space of a domain.

#include "mathbench/fpcore.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace mathbench {

enum class Strategy { seconds, minutes, hours, days, exhaustive };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_by_name(std::string_view name);

// Contiguous rank range [rank_lo, rank_hi] visited at rank_lo + i*stride for
// i < count.
struct Chunk {
  std::int64_t rank_lo = 0;
  std::int64_t rank_hi = 0;
  std::uint64_t stride = 1;
  std::uint64_t count = 0;

  std::uint64_t size() const { return static_cast<std::uint64_t>(rank_hi) - static_cast<std::uint64_t>(rank_lo) + 1; }
  std::int64_t rank_at(std::uint64_t i) const {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(rank_lo) + i * stride);
  }
};

struct SearchPlan {
  double t_ns = 0.0;             // calibrated cost of one point; 0 when not calibrated
  std::uint64_t per_worker = 0;  // N
  unsigned workers = 1;          // P
  std::vector<Chunk> chunks;     // one per worker; trailing chunks may be empty

  std::uint64_t total_points() const;
};

inline constexpr std::uint64_t kCalibrationSamples = 100000;

// N for one worker: floor(seconds * 1e9 / t) for the budgeted strategies,
// ceil(domain_size / workers) for exhaustive.
std::uint64_t budget_to_count(Strategy s, double t_ns, std::uint64_t domain_size, unsigned workers);

// Splits the domain's ranks into `workers` contiguous chunks whose sizes
// differ by at most one; each visits min(N, chunk size) points at stride
// max(1, floor(chunk size / N)) starting from its first rank.
// Throws std::invalid_argument for N = 0, workers = 0 or lo > hi.
SearchPlan plan(const Interval& domain, const FloatFormat& fmt, std::uint64_t per_worker, unsigned workers);

// Like plan(), but spreads exactly min(total, domain size) visits over the
// chunks.
SearchPlan plan_total(const Interval& domain, const FloatFormat& fmt, std::uint64_t total, unsigned workers);

// Fixed-size set of workers; run() executes task(w) for every worker w
// concurrently and rethrows the first exception.
class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers);

  unsigned size() const { return workers_; }
  void run(const std::function<void(unsigned worker)>& task) const;

 private:
  unsigned workers_;
};

// Visits the chunk's points with the given worker; returns points visited.
using ChunkRunner = std::function<std::uint64_t(const Chunk&, unsigned worker)>;

// Runs chunk i of the plan on worker i. Returns the points visited.
std::uint64_t execute(const SearchPlan& p, const WorkerPool& pool, const ChunkRunner& run_chunk);

struct Calibration {
  double t_ns = 0.0;
  std::uint64_t visited = 0;
  double wall_seconds = 0.0;
};

// Runs the per-point pipeline on min(samples, domain size) points spread over
// the pool and returns wall time * workers / visited. Retries with 10x the
// samples when the clock does not advance.
Calibration calibrate(const WorkerPool& pool, const Interval& domain, const FloatFormat& fmt,
                      const ChunkRunner& run_chunk, std::uint64_t samples = kCalibrationSamples);

}  // namespace mathbench
