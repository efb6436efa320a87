#include "mathbench/fpcore.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace mathbench {

namespace {

constexpr std::array<FloatFormat, 4> kKnownFormats{kBinary16, kBfloat16, kBinary32, kBinary64};

double overflow_result(bool negative, const FloatFormat& fmt, RoundingMode mode) {
  const double inf = std::numeric_limits<double>::infinity();
  const double big = fmt.f_max();
  switch (mode) {
    case RoundingMode::RN:
      return negative ? -inf : inf;
    case RoundingMode::RZ:
      return negative ? -big : big;
    case RoundingMode::RU:
      return negative ? -big : inf;
    case RoundingMode::RD:
      return negative ? -inf : big;
  }
  return negative ? -inf : inf;
}

double round_integral(double s, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::RN: {
      const double fl = std::floor(s);
      const double frac = s - fl;
      if (frac > 0.5) return fl + 1.0;
      if (frac < 0.5) return fl;
      return std::fmod(fl, 2.0) == 0.0 ? fl : fl + 1.0;
    }
    case RoundingMode::RU:
      return std::ceil(s);
    case RoundingMode::RD:
      return std::floor(s);
    case RoundingMode::RZ:
      return std::trunc(s);
  }
  return s;
}

mpfr_rnd_t to_mpfr(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::RN:
      return MPFR_RNDN;
    case RoundingMode::RU:
      return MPFR_RNDU;
    case RoundingMode::RD:
      return MPFR_RNDD;
    case RoundingMode::RZ:
      return MPFR_RNDZ;
  }
  return MPFR_RNDN;
}

// Per-thread scratch for the BigFloat rounding path; at most 53 bits are kept
// so one limb always suffices and set_prec never reallocates.
mpfr_ptr rounding_scratch() {
  thread_local BigFloat scratch(64);
  return scratch.get();
}

bool same_value(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return a == b && std::signbit(a) == std::signbit(b);
}

}  // namespace

double FloatFormat::s_min() const { return std::ldexp(1.0, emin - precision + 1); }
double FloatFormat::f_min() const { return std::ldexp(1.0, emin); }
double FloatFormat::f_max() const { return std::ldexp(2.0 - std::ldexp(1.0, 1 - precision), emax); }
double FloatFormat::unit_roundoff() const { return std::ldexp(1.0, -precision); }

std::uint64_t FloatFormat::finite_count() const {
  // 2^width - 2^p, written to stay in range for width = 64.
  const std::uint64_t non_finite = std::uint64_t{1} << precision;
  if (width == 64) return (~std::uint64_t{0} - non_finite) + 1;
  return (std::uint64_t{1} << width) - non_finite;
}

std::int64_t FloatFormat::max_rank() const {
  // Encoding of f_max without the sign bit: 2^(width-1) - 2^(p-1) - 1.
  return static_cast<std::int64_t>((std::uint64_t{1} << (width - 1)) - (std::uint64_t{1} << (precision - 1)) - 1);
}

std::optional<FloatFormat> format_by_name(std::string_view name) {
  for (const auto& f : kKnownFormats) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

void validate(const FloatFormat& fmt) {
  if (fmt.precision < 2) throw std::invalid_argument("format precision must be at least 2");
  if (fmt.emin != 1 - fmt.emax) throw std::invalid_argument("format must satisfy emin = 1 - emax");
  const int ebits = fmt.exponent_bits();
  if (ebits < 2 || fmt.width > 64 || (1 << (ebits - 1)) - 1 != fmt.emax) {
    throw std::invalid_argument("format width, precision and emax are inconsistent");
  }
  if (fmt.precision > 53 || fmt.emax > 1023) {
    throw std::invalid_argument("format does not embed into binary64");
  }
}

std::string_view to_string(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::RN:
      return "RN";
    case RoundingMode::RU:
      return "RU";
    case RoundingMode::RD:
      return "RD";
    case RoundingMode::RZ:
      return "RZ";
  }
  return "RN";
}

std::optional<RoundingMode> rounding_mode_by_name(std::string_view name) {
  for (auto m : {RoundingMode::RN, RoundingMode::RU, RoundingMode::RD, RoundingMode::RZ}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

double round_to_format(double x, const FloatFormat& fmt, RoundingMode mode) {
  if (!std::isfinite(x) || x == 0.0) return x;
  const int e = std::max(std::ilogb(x), fmt.emin);
  if (e > fmt.emax) return overflow_result(x < 0, fmt, mode);
  const int q = e - fmt.precision + 1;
  // Exact: |scaled| < 2^p and only the exponent changes.
  const double scaled = std::ldexp(x, -q);
  const double result = std::copysign(std::ldexp(round_integral(scaled, mode), q), x);
  if (std::fabs(result) > fmt.f_max()) return std::copysign(std::numeric_limits<double>::infinity(), x);
  return result;
}

double round_to_format(mpfr_srcptr x, const FloatFormat& fmt, RoundingMode mode) {
  if (mpfr_nan_p(x)) return std::numeric_limits<double>::quiet_NaN();
  const bool negative = mpfr_signbit(x) != 0;
  if (mpfr_inf_p(x)) return negative ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  if (mpfr_zero_p(x)) return negative ? -0.0 : 0.0;

  const long e = static_cast<long>(mpfr_get_exp(x)) - 1;  // floor(log2|x|)
  if (e > fmt.emax) return overflow_result(negative, fmt, mode);
  const long keep = e >= fmt.emin ? fmt.precision : fmt.precision - (fmt.emin - e);

  if (keep <= 0) {
    // |x| < s_min: the result is 0 or s_min.
    const double tiny = fmt.s_min();
    double magnitude = 0.0;
    switch (mode) {
      case RoundingMode::RZ:
        break;
      case RoundingMode::RU:
        magnitude = negative ? 0.0 : tiny;
        break;
      case RoundingMode::RD:
        magnitude = negative ? tiny : 0.0;
        break;
      case RoundingMode::RN:
        // Above s_min/2 rounds up; exactly s_min/2 ties to the even zero.
        if (e == fmt.emin - fmt.precision && mpfr_cmp_si_2exp(x, negative ? -1 : 1, e) != 0) magnitude = tiny;
        break;
    }
    return negative ? -magnitude : magnitude;
  }

  mpfr_ptr scratch = rounding_scratch();
  mpfr_set_prec(scratch, keep);
  mpfr_set(scratch, x, to_mpfr(mode));
  const double result = mpfr_get_d(scratch, MPFR_RNDN);
  if (std::fabs(result) > fmt.f_max()) return std::copysign(std::numeric_limits<double>::infinity(), result);
  return result;
}

bool is_representable(double x, const FloatFormat& fmt) {
  if (!std::isfinite(x)) return false;
  return round_to_format(x, fmt, RoundingMode::RN) == x;
}

int ulp_exponent(double x, const FloatFormat& fmt) {
  if (x == 0.0) return fmt.emin - fmt.precision + 1;
  return std::max(std::ilogb(x), fmt.emin) - fmt.precision + 1;
}

double ulp(double x, const FloatFormat& fmt) {
  if (std::isnan(x)) return x;
  if (std::isinf(x)) return std::numeric_limits<double>::infinity();
  return std::ldexp(1.0, ulp_exponent(x, fmt));
}

double ulp(mpfr_srcptr x, const FloatFormat& fmt) {
  if (mpfr_nan_p(x)) return std::numeric_limits<double>::quiet_NaN();
  if (mpfr_inf_p(x)) return std::numeric_limits<double>::infinity();
  if (mpfr_zero_p(x)) return fmt.s_min();
  const long e = static_cast<long>(mpfr_get_exp(x)) - 1;
  const long k = std::max<long>(e, fmt.emin) - fmt.precision + 1;
  if (k > std::numeric_limits<int>::max()) return std::numeric_limits<double>::infinity();
  return std::ldexp(1.0, static_cast<int>(k));
}

std::uint64_t encode(double x, const FloatFormat& fmt) {
  const int fbits = fmt.fraction_bits();
  const std::uint64_t sign = std::uint64_t{std::signbit(x) ? 1u : 0u} << (fmt.width - 1);
  const std::uint64_t exp_all_ones = (std::uint64_t{1} << fmt.exponent_bits()) - 1;
  if (std::isnan(x)) return (exp_all_ones << fbits) | (std::uint64_t{1} << (fbits - 1));
  if (fmt == kBinary64) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &x, sizeof bits);
    return bits;
  }
  const double a = std::fabs(x);
  if (std::isinf(a)) return sign | (exp_all_ones << fbits);
  if (a < fmt.f_min()) {
    const auto frac = static_cast<std::uint64_t>(std::ldexp(a, fmt.precision - 1 - fmt.emin));
    return sign | frac;
  }
  const int e = std::ilogb(a);
  const auto significand = static_cast<std::uint64_t>(std::ldexp(a, fbits - e));
  const auto biased = static_cast<std::uint64_t>(e + fmt.emax);
  return sign | (biased << fbits) | (significand - (std::uint64_t{1} << fbits));
}

double decode(std::uint64_t bits, const FloatFormat& fmt) {
  if (fmt == kBinary64) {
    double x = 0;
    std::memcpy(&x, &bits, sizeof x);
    return x;
  }
  const int fbits = fmt.fraction_bits();
  const bool negative = ((bits >> (fmt.width - 1)) & 1u) != 0;
  const std::uint64_t exp_all_ones = (std::uint64_t{1} << fmt.exponent_bits()) - 1;
  const std::uint64_t biased = (bits >> fbits) & exp_all_ones;
  const std::uint64_t frac = bits & ((std::uint64_t{1} << fbits) - 1);
  double magnitude = 0;
  if (biased == exp_all_ones) {
    magnitude = frac == 0 ? std::numeric_limits<double>::infinity() : std::numeric_limits<double>::quiet_NaN();
  } else if (biased == 0) {
    magnitude = std::ldexp(static_cast<double>(frac), fmt.emin - fbits);
  } else {
    magnitude = std::ldexp(static_cast<double>(frac | (std::uint64_t{1} << fbits)),
                           static_cast<int>(biased) - fmt.emax - fbits);
  }
  return negative ? -magnitude : magnitude;
}

std::int64_t rank(double x, const FloatFormat& fmt) {
  if (!std::isfinite(x)) throw std::invalid_argument("rank of a non-finite value");
  const std::uint64_t sign_mask = std::uint64_t{1} << (fmt.width - 1);
  const auto magnitude = static_cast<std::int64_t>(encode(x, fmt) & ~sign_mask);
  return std::signbit(x) ? -magnitude : magnitude;
}

double unrank(std::int64_t r, const FloatFormat& fmt) {
  const std::int64_t limit = fmt.max_rank();
  if (r > limit || r < -limit) throw std::out_of_range("rank outside the finite range of " + std::string(fmt.name));
  if (r >= 0) return decode(static_cast<std::uint64_t>(r), fmt);
  return -decode(static_cast<std::uint64_t>(-r), fmt);
}

std::uint64_t rank_span(const Interval& domain, const FloatFormat& fmt) {
  return static_cast<std::uint64_t>(rank(domain.hi, fmt)) - static_cast<std::uint64_t>(rank(domain.lo, fmt)) + 1;
}

double next_up(double x, const FloatFormat& fmt) {
  if (x == fmt.f_max()) return std::numeric_limits<double>::infinity();
  if (x == -std::numeric_limits<double>::infinity()) return -fmt.f_max();
  return unrank(rank(x, fmt) + 1, fmt);
}

double next_down(double x, const FloatFormat& fmt) {
  if (x == -fmt.f_max()) return -std::numeric_limits<double>::infinity();
  if (x == std::numeric_limits<double>::infinity()) return fmt.f_max();
  return unrank(rank(x, fmt) - 1, fmt);
}

std::string encode_hex(double x, const FloatFormat& fmt) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%0*llX", fmt.width / 4, static_cast<unsigned long long>(encode(x, fmt)));
  return buf;
}

double decode_hex(std::string_view text, const FloatFormat& fmt) {
  const auto digits = static_cast<std::size_t>(fmt.width / 4);
  if (text.size() != digits) {
    throw std::invalid_argument("expected " + std::to_string(digits) + " hex digits, got '" + std::string(text) + "'");
  }
  std::uint64_t bits = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), bits, 16);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("malformed hex encoding '" + std::string(text) + "'");
  }
  return decode(bits, fmt);
}

double parse_decimal(const std::string& text, const FloatFormat& fmt) {
  if (fmt == kBinary64 || fmt == kBinary32) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    if (fmt == kBinary64) {
      double v = 0;
      const auto [end, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || end != last) throw std::invalid_argument("malformed decimal '" + text + "'");
      return v;
    }
    float v = 0;
    const auto [end, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || end != last) throw std::invalid_argument("malformed decimal '" + text + "'");
    return v;
  }
  const BigFloat value = parse_bigfloat(text, 256);
  return round_to_format(value, fmt, RoundingMode::RN);
}

std::string to_shortest_decimal(double x, const FloatFormat& fmt) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  if (fmt == kBinary64) {
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
  }
  if (fmt == kBinary32) {
    const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<float>(x));
    return std::string(buf, res.ptr);
  }
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    if (same_value(parse_decimal(buf, fmt), x)) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace mathbench
