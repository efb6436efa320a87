#pragma once

// Binary floating-point format descriptors and the bit-level operations the
// bench needs: rounding into a format, ULPs, neighbours, ordered ranks and
// interchange encodings.
//
// Format values are carried as `double`. Every supported format (binary16,
// bfloat16, binary32, binary64) embeds exactly into binary64, so a double
// holds any value of any of them without loss.

#include "mathbench/bigfloat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mathbench {

struct FloatFormat {
  std::string_view name;
  int emin;
  int emax;
  int precision;  // p, including the implicit bit
  int width;      // encoding width in bits

  constexpr int exponent_bits() const { return width - precision; }
  constexpr int fraction_bits() const { return precision - 1; }

  double s_min() const;           // 2^(emin-p+1)
  double f_min() const;           // 2^emin
  double f_max() const;           // (2 - 2^(1-p)) * 2^emax
  double unit_roundoff() const;   // u = 2^-p

  // Number of finite encodings, both zeros included (2^width - 2^p).
  std::uint64_t finite_count() const;
  // Largest rank; ranks of finite values span [-max_rank, max_rank].
  std::int64_t max_rank() const;
  // Number of ranks, i.e. finite values with -0 and +0 collapsed.
  std::uint64_t rank_count() const { return 2 * static_cast<std::uint64_t>(max_rank()) + 1; }

  friend constexpr bool operator==(const FloatFormat& a, const FloatFormat& b) {
    return a.emin == b.emin && a.emax == b.emax && a.precision == b.precision && a.width == b.width;
  }
};

inline constexpr FloatFormat kBinary16{"binary16", -14, 15, 11, 16};
inline constexpr FloatFormat kBfloat16{"bfloat16", -126, 127, 8, 16};
inline constexpr FloatFormat kBinary32{"binary32", -126, 127, 24, 32};
inline constexpr FloatFormat kBinary64{"binary64", -1022, 1023, 53, 64};

std::optional<FloatFormat> format_by_name(std::string_view name);

// Throws std::invalid_argument when the IEEE relationships do not hold or the
// format does not embed into binary64.
void validate(const FloatFormat& fmt);

enum class RoundingMode { RN, RU, RD, RZ };

std::string_view to_string(RoundingMode mode);
std::optional<RoundingMode> rounding_mode_by_name(std::string_view name);

// Closed interval of format values.
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Rounds to the format under `mode`, with gradual underflow and IEEE overflow
// semantics (RN overflows to infinity, RZ saturates at f_max, RU/RD depend on
// the sign). The BigFloat overload is exact for any input precision; inputs
// carrying only a few bits beyond p are rounded relative to that input.
double round_to_format(double x, const FloatFormat& fmt, RoundingMode mode);
double round_to_format(mpfr_srcptr x, const FloatFormat& fmt, RoundingMode mode);
inline double round_to_format(const BigFloat& x, const FloatFormat& fmt, RoundingMode mode) {
  return round_to_format(x.get(), fmt, mode);
}

bool is_representable(double x, const FloatFormat& fmt);

// ulp(x) = 2^(max(emin, floor(log2|x|)) - p + 1), and s_min for x = 0.
double ulp(double x, const FloatFormat& fmt);
double ulp(mpfr_srcptr x, const FloatFormat& fmt);
inline double ulp(const BigFloat& x, const FloatFormat& fmt) { return ulp(x.get(), fmt); }
// The exponent k with ulp(x) = 2^k.
int ulp_exponent(double x, const FloatFormat& fmt);

// Neighbours in the format. Stepping past ±f_max yields ±infinity.
double next_up(double x, const FloatFormat& fmt);
double next_down(double x, const FloatFormat& fmt);

// Order-preserving bijection between the finite values of the format and
// [-max_rank, max_rank]. -0 and +0 share rank 0; unrank(0) is +0.
std::int64_t rank(double x, const FloatFormat& fmt);
double unrank(std::int64_t r, const FloatFormat& fmt);  // throws std::out_of_range

// Number of ranks in [lo, hi].
std::uint64_t rank_span(const Interval& domain, const FloatFormat& fmt);

// IEEE interchange encoding. NaNs encode as the default quiet NaN.
std::uint64_t encode(double x, const FloatFormat& fmt);
double decode(std::uint64_t bits, const FloatFormat& fmt);

// Fixed-width uppercase hex (width/4 digits). decode_hex accepts either case
// and throws std::invalid_argument on anything else.
std::string encode_hex(double x, const FloatFormat& fmt);
double decode_hex(std::string_view text, const FloatFormat& fmt);

// Shortest decimal string that parses back (RN) to exactly x in the format.
std::string to_shortest_decimal(double x, const FloatFormat& fmt);
// Parses a decimal string and rounds it to nearest in the format.
double parse_decimal(const std::string& text, const FloatFormat& fmt);

}  // namespace mathbench
