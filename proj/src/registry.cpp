#include "mathbench/registry.hpp"

#include "mathbench/refeval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mathbench {

namespace {

constexpr mpfr_prec_t kDerivationBits = 256;

Interval full_range(const FloatFormat& fmt) { return {-fmt.f_max(), fmt.f_max()}; }

std::string describe(const Interval& d, const FloatFormat& fmt) {
  return "[" + to_shortest_decimal(d.lo, fmt) + ", " + to_shortest_decimal(d.hi, fmt) + "]";
}

}  // namespace

Interval derive_exp_like_domain(const FloatFormat& fmt, ExpBase base) {
  BigFloat bottom(fmt.s_min(), kDerivationBits);
  BigFloat top(fmt.f_max(), kDerivationBits);
  switch (base) {
    case ExpBase::e:
      mpfr_log(bottom.get(), bottom.get(), MPFR_RNDN);
      mpfr_log(top.get(), top.get(), MPFR_RNDN);
      break;
    case ExpBase::two:
      mpfr_log2(bottom.get(), bottom.get(), MPFR_RNDN);
      mpfr_log2(top.get(), top.get(), MPFR_RNDN);
      break;
    case ExpBase::ten:
      mpfr_log10(bottom.get(), bottom.get(), MPFR_RNDN);
      mpfr_log10(top.get(), top.get(), MPFR_RNDN);
      break;
  }
  return {round_to_format(bottom, fmt, RoundingMode::RU), round_to_format(top, fmt, RoundingMode::RD)};
}

Interval derive_tanh_domain(const FloatFormat& fmt) {
  // (4 - u) / u with u = 2^-p is the integer 2^(p+2) - 1.
  BigFloat v(kDerivationBits);
  mpfr_set_ui_2exp(v.get(), 1, fmt.precision + 2, MPFR_RNDN);
  mpfr_sub_ui(v.get(), v.get(), 1, MPFR_RNDN);
  mpfr_log(v.get(), v.get(), MPFR_RNDN);
  mpfr_div_2ui(v.get(), v.get(), 1, MPFR_RNDN);
  double hi = round_to_format(v, fmt, RoundingMode::RZ);
  if (mpfr_cmp_d(v.get(), hi) == 0) hi = next_down(hi, fmt);
  return {-hi, hi};
}

Interval derive_cosh_domain(const FloatFormat& fmt) {
  BigFloat v(fmt.f_max(), kDerivationBits);
  mpfr_acosh(v.get(), v.get(), MPFR_RNDN);
  const double hi = round_to_format(v, fmt, RoundingMode::RD);
  return {-hi, hi};
}

Interval derive_domain(MathFunction f, const FloatFormat& fmt) {
  const double big = fmt.f_max();
  switch (f) {
    case MathFunction::acos:
    case MathFunction::asin:
      return {-1.0, 1.0};
    case MathFunction::acosh:
      return {1.0, big};
    case MathFunction::atanh:
      return {next_up(-1.0, fmt), next_down(1.0, fmt)};
    case MathFunction::cosh:
    case MathFunction::sinh:
      return derive_cosh_domain(fmt);
    case MathFunction::exp:
      return derive_exp_like_domain(fmt, ExpBase::e);
    case MathFunction::exp10:
      return derive_exp_like_domain(fmt, ExpBase::ten);
    case MathFunction::exp2:
      return derive_exp_like_domain(fmt, ExpBase::two);
    case MathFunction::log:
    case MathFunction::log10:
    case MathFunction::log2:
      return {fmt.s_min(), big};
    case MathFunction::log1p:
      return {next_up(-1.0, fmt), big};
    case MathFunction::sqrt:
      return {0.0, big};
    case MathFunction::tanh:
      return derive_tanh_domain(fmt);
    case MathFunction::asinh:
    case MathFunction::atan:
    case MathFunction::cbrt:
    case MathFunction::cos:
    case MathFunction::sin:
    case MathFunction::tan:
    case MathFunction::cospi:
    case MathFunction::sinpi:
    case MathFunction::tanpi:
      return full_range(fmt);
  }
  throw std::invalid_argument("unknown function");
}

Interval tabulated_domain(MathFunction f, const FloatFormat& fmt) {
  const bool half = fmt == kBinary16;
  if (!half && !(fmt == kBinary32)) {
    throw std::invalid_argument("no tabulated domains for " + std::string(fmt.name));
  }
  switch (f) {
    case MathFunction::cosh:
    case MathFunction::sinh:
      return half ? Interval{-11.78125, 11.78125} : Interval{-89.415985107421875, 89.415985107421875};
    case MathFunction::exp:
      return half ? Interval{-16.625, 11.0859375} : Interval{-103.27892303466796875, 88.72283172607421875};
    case MathFunction::exp10:
      // binary32 hi: the nearest float to log10(f_max), 38.531841278076171875,
      // is above it and 10^x overflows there; the next float down is used.
      return half ? Interval{-7.22265625, 4.8125} : Interval{-44.853466033935546875, 38.5318374633789062500};
    case MathFunction::exp2:
      return half ? Interval{-24.0, 15.9921875} : Interval{-149.0, 127.99999237060546875};
    case MathFunction::tanh:
      return half ? Interval{-4.50390625, 4.50390625} : Interval{-9.01091289520263671875, 9.01091289520263671875};
    default:
      // The remaining rows are structural ([-1, 1], [s_min, f_max], ...).
      return derive_domain(f, fmt);
  }
}

const std::vector<FloatFormat>& Registry::formats() {
  static const std::vector<FloatFormat> all{kBinary16, kBfloat16, kBinary32, kBinary64};
  return all;
}

Registry Registry::create(const std::filesystem::path& worstcase_dir) {
  Registry reg;
  reg.functions_.reserve(kFunctionCount);
  for (MathFunction f : kAllFunctions) {
    FunctionSpec spec{f, name_of(f), {}, {}};
    for (const auto& fmt : formats()) {
      const bool tabulated = fmt == kBinary16 || fmt == kBinary32;
      spec.domains.emplace(fmt.name, tabulated ? tabulated_domain(f, fmt) : derive_domain(f, fmt));
      spec.special.emplace(fmt.name, std::vector<double>{});
    }
    reg.functions_.push_back(std::move(spec));
  }

  for (MathFunction f : kAllFunctions) {
    for (const auto& fmt : formats()) {
      if (is_odd(f)) reg.add_special(f, fmt, {-0.0, 0.0});
      if (worstcase_dir.empty()) continue;
      const auto file = worstcase_dir / (std::string(name_of(f)) + "." + std::string(fmt.name) + ".txt");
      if (std::filesystem::exists(file)) reg.load_special_file(f, fmt, file);
    }
  }

  const auto problems = reg.verify_endpoints();
  if (!problems.empty()) {
    std::string msg = "domain endpoint check failed:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw std::runtime_error(msg);
  }
  return reg;
}

Interval Registry::domain_of(MathFunction f, const FloatFormat& fmt) const {
  const auto& domains = spec(f).domains;
  const auto it = domains.find(fmt.name);
  if (it == domains.end() || !(format_by_name(fmt.name) == fmt)) {
    throw std::invalid_argument("no domain for format " + std::string(fmt.name));
  }
  return it->second;
}

const std::vector<double>& Registry::special_points(MathFunction f, const FloatFormat& fmt) const {
  const auto& special = spec(f).special;
  const auto it = special.find(fmt.name);
  if (it == special.end()) throw std::invalid_argument("no special points for format " + std::string(fmt.name));
  return it->second;
}

std::vector<std::string> Registry::load_warnings_for(MathFunction f, const FloatFormat& fmt) const {
  std::vector<std::string> out;
  for (const auto& w : warnings_) {
    if (w.function == f && w.format == fmt.name) out.push_back(w.message);
  }
  return out;
}

void Registry::add_special(MathFunction f, const FloatFormat& fmt, std::vector<double> points) {
  auto& list = functions_[static_cast<std::size_t>(f)].special.at(fmt.name);
  list.insert(list.end(), points.begin(), points.end());
  auto key = [&fmt](double x) { return std::pair{rank(x, fmt), !std::signbit(x)}; };
  std::sort(list.begin(), list.end(), [&](double a, double b) { return key(a) < key(b); });
  list.erase(std::unique(list.begin(), list.end(), [&](double a, double b) { return key(a) == key(b); }),
             list.end());
}

std::size_t Registry::load_special_file(MathFunction f, const FloatFormat& fmt, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read special-point file " + file.string());
  const Interval domain = domain_of(f, fmt);
  std::vector<double> points;
  std::size_t dropped = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    double x = 0;
    try {
      x = decode_hex(token, fmt);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!std::isfinite(x) || !domain.contains(x)) {
      ++dropped;
      warnings_.push_back({f, std::string(fmt.name),
                           "special point " + token + " from " + file.filename().string() + " dropped: outside " +
                               describe(domain, fmt)});
      continue;
    }
    points.push_back(x);
  }
  add_special(f, fmt, std::move(points));
  return dropped;
}

std::vector<std::string> Registry::verify_endpoints() const {
  std::vector<std::string> problems;
  for (const auto& fmt : formats()) {
    ReferenceContext ctx(ReferencePolicy::bits_for(fmt));
    BigFloat ref(ctx.bits());
    for (const auto& spec : functions_) {
      const Interval d = spec.domains.at(fmt.name);
      const std::string where = std::string(spec.name) + " " + std::string(fmt.name) + " " + describe(d, fmt);
      if (!(d.lo <= d.hi) || !is_representable(d.lo, fmt) || !is_representable(d.hi, fmt)) {
        problems.push_back(where + ": endpoints not ordered or not representable");
        continue;
      }
      for (double x : {d.lo, d.hi}) {
        const auto status = ctx.evaluate(spec.id, x, ref);
        if (status != ReferenceStatus::ok || check_no_overflow(ref, fmt) != OverflowCheck::ok) {
          problems.push_back(where + ": reference at " + to_shortest_decimal(x, fmt) + " overflows or is undefined");
        }
      }
    }
  }
  return problems;
}

}  // namespace mathbench
