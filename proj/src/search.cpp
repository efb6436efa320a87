#include "mathbench/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace mathbench {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::seconds:
      return "seconds";
    case Strategy::minutes:
      return "minutes";
    case Strategy::hours:
      return "hours";
    case Strategy::days:
      return "days";
    case Strategy::exhaustive:
      return "exhaustive";
  }
  return "exhaustive";
}

std::optional<Strategy> strategy_by_name(std::string_view name) {
  for (auto s : {Strategy::seconds, Strategy::minutes, Strategy::hours, Strategy::days, Strategy::exhaustive}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::uint64_t SearchPlan::total_points() const {
  std::uint64_t n = 0;
  for (const auto& c : chunks) n += c.count;
  return n;
}

std::uint64_t budget_to_count(Strategy s, double t_ns, std::uint64_t domain_size, unsigned workers) {
  if (s == Strategy::exhaustive) {
    const std::uint64_t p = std::max(workers, 1u);
    return domain_size / p + (domain_size % p != 0 ? 1 : 0);
  }
  if (!(t_ns > 0.0)) throw std::invalid_argument("per-point cost must be positive");
  double seconds = 1.0;
  switch (s) {
    case Strategy::seconds:
      seconds = 1.0;
      break;
    case Strategy::minutes:
      seconds = 60.0;
      break;
    case Strategy::hours:
      seconds = 3600.0;
      break;
    case Strategy::days:
      seconds = 24.0 * 3600.0;
      break;
    case Strategy::exhaustive:
      break;
  }
  const double n = std::floor(seconds * 1e9 / t_ns);
  if (n >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

namespace {

std::vector<Chunk> split(const Interval& domain, const FloatFormat& fmt, unsigned workers) {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  if (!(domain.lo <= domain.hi)) throw std::invalid_argument("empty domain");
  const std::int64_t first = rank(domain.lo, fmt);
  const std::uint64_t size = rank_span(domain, fmt);
  const std::uint64_t base = size / workers;
  const std::uint64_t extra = size % workers;
  std::vector<Chunk> chunks(workers);
  std::uint64_t offset = 0;
  for (unsigned i = 0; i < workers; ++i) {
    const std::uint64_t n = base + (i < extra ? 1 : 0);
    Chunk& c = chunks[i];
    c.rank_lo = static_cast<std::int64_t>(static_cast<std::uint64_t>(first) + offset);
    // An empty chunk has rank_hi = rank_lo - 1.
    c.rank_hi = static_cast<std::int64_t>(static_cast<std::uint64_t>(c.rank_lo) + n - 1);
    c.stride = 1;
    c.count = n;
    offset += n;
  }
  return chunks;
}

void set_visits(Chunk& c, std::uint64_t wanted) {
  if (c.count == 0) return;  // empty chunk
  const std::uint64_t size = c.size();
  c.count = std::min(wanted, size);
  c.stride = c.count == 0 ? 1 : std::max<std::uint64_t>(1, size / c.count);
}

}  // namespace

SearchPlan plan(const Interval& domain, const FloatFormat& fmt, std::uint64_t per_worker, unsigned workers) {
  if (per_worker == 0) throw std::invalid_argument("per-worker budget must be at least 1");
  SearchPlan p;
  p.per_worker = per_worker;
  p.workers = workers;
  p.chunks = split(domain, fmt, workers);
  for (auto& c : p.chunks) set_visits(c, per_worker);
  return p;
}

SearchPlan plan_total(const Interval& domain, const FloatFormat& fmt, std::uint64_t total, unsigned workers) {
  if (total == 0) throw std::invalid_argument("total budget must be at least 1");
  SearchPlan p;
  p.workers = workers;
  p.chunks = split(domain, fmt, workers);
  const std::uint64_t base = total / workers;
  const std::uint64_t extra = total % workers;
  p.per_worker = base + (extra != 0 ? 1 : 0);
  for (unsigned i = 0; i < workers; ++i) set_visits(p.chunks[i], base + (i < extra ? 1 : 0));
  return p;
}

WorkerPool::WorkerPool(unsigned workers) : workers_(workers) {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
}

void WorkerPool::run(const std::function<void(unsigned worker)>& task) const {
  std::vector<std::exception_ptr> errors(workers_);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers_ - 1);
    for (unsigned w = 1; w < workers_; ++w) {
      threads.emplace_back([&task, &errors, w] {
        try {
          task(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    try {
      task(0);
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::uint64_t execute(const SearchPlan& p, const WorkerPool& pool, const ChunkRunner& run_chunk) {
  if (p.chunks.size() != pool.size()) throw std::invalid_argument("plan and pool disagree on the worker count");
  std::vector<std::uint64_t> visited(pool.size(), 0);
  pool.run([&](unsigned w) {
    if (p.chunks[w].count > 0) visited[w] = run_chunk(p.chunks[w], w);
  });
  std::uint64_t total = 0;
  for (auto v : visited) total += v;
  return total;
}

Calibration calibrate(const WorkerPool& pool, const Interval& domain, const FloatFormat& fmt,
                      const ChunkRunner& run_chunk, std::uint64_t samples) {
  const std::uint64_t size = rank_span(domain, fmt);
  Calibration result;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::uint64_t n = std::min(samples, size);
    const SearchPlan p = plan_total(domain, fmt, n, pool.size());
    const auto start = std::chrono::steady_clock::now();
    result.visited = execute(p, pool, run_chunk);
    const auto stop = std::chrono::steady_clock::now();
    const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
    result.wall_seconds = ns * 1e-9;
    if (ns > 0.0 && result.visited > 0) {
      result.t_ns = ns * pool.size() / static_cast<double>(result.visited);
      return result;
    }
    if (n == size) break;
    samples *= 10;
  }
  result.t_ns = 1.0;
  return result;
}

}  // namespace mathbench
