// Generates worstcases/<function>.<format>.txt: the inputs whose exact
// function values lie closest to a rounding breakpoint (a format value or a
// midpoint between two), found by exhaustive scan for the 16-bit formats and
// by stride sampling for the wider ones.

#include "mathbench/refeval.hpp"
#include "mathbench/registry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

using namespace mathbench;

namespace {

struct Candidate {
  double x;
  double distance;  // to the nearest breakpoint, in ulps of RZ(f(x)); in (0, 0.25]
};

// Distance from f(x) to the nearest value or midpoint of fmt, or nullopt when
// f(x) is exact, undefined or out of range.
std::optional<double> breakpoint_distance(const BigFloat& ref, const FloatFormat& fmt, BigFloat& diff) {
  const auto k = ulp_rz_exponent(ref, fmt);
  if (!k || ref.is_zero()) return std::nullopt;
  const double rz = round_to_format(ref, fmt, RoundingMode::RZ);
  mpfr_sub_d(diff.get(), ref.get(), rz, MPFR_RNDN);
  if (mpfr_zero_p(diff.get())) return std::nullopt;
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  mpfr_div_2si(diff.get(), diff.get(), *k, MPFR_RNDN);
  const double t = mpfr_get_d(diff.get(), MPFR_RNDN);  // in (0, 1)
  return std::min({t, std::fabs(t - 0.5), 1.0 - t});
}

std::vector<Candidate> scan(const Registry& registry, MathFunction f, const FloatFormat& fmt, std::uint64_t samples,
                            std::size_t keep) {
  const Interval d = registry.domain_of(f, fmt);
  const std::int64_t lo = rank(d.lo, fmt);
  const std::uint64_t span = rank_span(d, fmt);
  const std::uint64_t count = samples == 0 ? span : std::min(samples, span);
  const std::uint64_t stride = std::max<std::uint64_t>(1, span / count);

  const int bits = 2 * fmt.precision + 40;
  ReferenceContext ctx(bits);
  BigFloat ref(bits);
  BigFloat diff(bits + 64);
  std::vector<Candidate> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = unrank(lo + static_cast<std::int64_t>(i * stride), fmt);
    if (ctx.evaluate(f, x, ref) != ReferenceStatus::ok) continue;
    if (const auto dist = breakpoint_distance(ref, fmt, diff)) out.push_back({x, *dist});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

  // Skip flat stretches (exp near 0, atan for large x, sin x ~ x, ...), where
  // the output is x itself or shared with both neighbours; every decent
  // implementation gets those right.
  auto rn = [&](double v) -> std::optional<double> {
    if (!d.contains(v) || ctx.evaluate(f, v, ref) != ReferenceStatus::ok) return std::nullopt;
    return round_to_format(ref, fmt, RoundingMode::RN);
  };
  std::vector<Candidate> kept;
  for (const auto& c : out) {
    if (kept.size() == keep) break;
    const auto y = rn(c.x);
    if (!y || *y == c.x) continue;
    const double up = next_up(c.x, fmt);
    const double down = next_down(c.x, fmt);
    if (rn(up) == y && rn(down) == y) continue;
    kept.push_back(c);
  }
  out = std::move(kept);
  std::sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) { return rank(a.x, fmt) < rank(b.x, fmt); });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for hard-to-round inputs and write special-point files"};
  std::string out_dir = "worstcases";
  std::size_t keep = 16;
  std::uint64_t samples32 = 200000;
  std::uint64_t samples64 = 50000;
  std::vector<std::string> extras;
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--keep", keep, "Points kept per function and format");
  app.add_option("--samples32", samples32, "Stride samples per binary32 function");
  app.add_option("--samples64", samples64, "Stride samples per binary64 function");
  app.add_option("--extra", extras, "Additional point, as function.format=HEX");
  CLI11_PARSE(app, argc, argv);

  std::map<std::string, std::vector<std::string>> forced;
  for (const auto& e : extras) {
    const auto eq = e.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad --extra '" << e << "'\n";
      return 1;
    }
    forced[e.substr(0, eq)].push_back(e.substr(eq + 1));
  }

  const Registry registry = Registry::create();
  std::filesystem::create_directories(out_dir);
  for (const auto& fmt : Registry::formats()) {
    const bool exhaustive = fmt.width <= 16;
    const std::uint64_t samples = exhaustive ? 0 : (fmt.width == 32 ? samples32 : samples64);
    for (MathFunction f : kAllFunctions) {
      const std::string key = std::string(name_of(f)) + "." + std::string(fmt.name);
      const auto found = scan(registry, f, fmt, samples, keep);
      std::ofstream file(std::filesystem::path(out_dir) / (key + ".txt"));
      file << "# " << key << ": inputs whose exact value is closest to a rounding breakpoint\n";
      file << "# " << (exhaustive ? "exhaustive scan" : "stride sample of " + std::to_string(samples) + " inputs")
           << " with a " << 2 * fmt.precision + 40 << "-bit reference\n";
      for (const auto& c : found) {
        char dist[32];
        std::snprintf(dist, sizeof dist, "%.3e", c.distance);
        file << encode_hex(c.x, fmt) << "  # " << to_shortest_decimal(c.x, fmt) << ", distance " << dist << " ulp\n";
      }
      if (const auto it = forced.find(key); it != forced.end()) {
        for (const auto& hex : it->second) {
          const double x = decode_hex(hex, fmt);
          file << encode_hex(x, fmt) << "  # " << to_shortest_decimal(x, fmt) << ", listed explicitly\n";
        }
      }
      std::cerr << key << ": " << found.size() << " points\n";
    }
  }
  return 0;
}
