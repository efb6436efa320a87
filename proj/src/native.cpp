#include "mathbench/native.hpp"

#include <gnu/libc-version.h>
#include <math.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mathbench {

namespace {

template <typename Wide>
constexpr Wide kPi = static_cast<Wide>(3.14159265358979323846264338327950288L);

// Reduction mirrors the reference: all subtractions are exact.
template <typename Narrow, typename Wide>
Narrow sinpi_impl(Narrow x) {
  if (!std::isfinite(x)) return std::numeric_limits<Narrow>::quiet_NaN();
  Narrow sign = std::signbit(x) ? Narrow(-1) : Narrow(1);
  Narrow r = std::fmod(std::fabs(x), Narrow(2));
  if (r >= Narrow(1)) {
    r -= Narrow(1);
    sign = -sign;
  }
  if (r > Narrow(0.5)) r = Narrow(1) - r;
  if (r == Narrow(0)) return std::copysign(Narrow(0), sign);
  return static_cast<Narrow>(static_cast<Wide>(sign) * std::sin(kPi<Wide> * static_cast<Wide>(r)));
}

template <typename Narrow, typename Wide>
Narrow cospi_impl(Narrow x) {
  if (!std::isfinite(x)) return std::numeric_limits<Narrow>::quiet_NaN();
  Narrow sign = 1;
  Narrow r = std::fmod(std::fabs(x), Narrow(2));
  if (r > Narrow(1)) r = Narrow(2) - r;
  if (r > Narrow(0.5)) {
    r = Narrow(1) - r;
    sign = -1;
  }
  if (r == Narrow(0.5)) return Narrow(0);
  Wide v = 0;
  if (r >= Narrow(0.25)) {
    v = std::sin(kPi<Wide> * static_cast<Wide>(Narrow(0.5) - r));
  } else {
    v = std::cos(kPi<Wide> * static_cast<Wide>(r));
  }
  return static_cast<Narrow>(static_cast<Wide>(sign) * v);
}

template <typename Narrow, typename Wide>
Narrow tanpi_impl(Narrow x) {
  if (!std::isfinite(x)) return std::numeric_limits<Narrow>::quiet_NaN();
  Narrow sign = std::signbit(x) ? Narrow(-1) : Narrow(1);
  Narrow r = std::fmod(std::fabs(x), Narrow(1));
  if (r > Narrow(0.5)) {
    r = Narrow(1) - r;
    sign = -sign;
  }
  if (r == Narrow(0)) return std::copysign(Narrow(0), sign);
  if (r == Narrow(0.5)) return std::copysign(std::numeric_limits<Narrow>::infinity(), sign);
  Wide v = 0;
  if (r > Narrow(0.25)) {
    v = Wide(1) / std::tan(kPi<Wide> * static_cast<Wide>(Narrow(0.5) - r));
  } else {
    v = std::tan(kPi<Wide> * static_cast<Wide>(r));
  }
  return static_cast<Narrow>(static_cast<Wide>(sign) * v);
}

using Fn32 = float (*)(float);
using Fn64 = double (*)(double);

struct Binding {
  Fn32 f32;
  Fn64 f64;
};

float sinpi32(float x) { return sinpi_fallback(x); }
float cospi32(float x) { return cospi_fallback(x); }
float tanpi32(float x) { return tanpi_fallback(x); }
double sinpi64(double x) { return sinpi_fallback(x); }
double cospi64(double x) { return cospi_fallback(x); }
double tanpi64(double x) { return tanpi_fallback(x); }

// Indexed by MathFunction.
const Binding kBindings[kFunctionCount] = {
    {::acosf, ::acos},   {::acoshf, ::acosh}, {::asinf, ::asin},   {::asinhf, ::asinh}, {::atanf, ::atan},
    {::atanhf, ::atanh}, {::cbrtf, ::cbrt},   {::cosf, ::cos},     {::coshf, ::cosh},   {::expf, ::exp},
    {::exp10f, ::exp10}, {::exp2f, ::exp2},   {::logf, ::log},     {::log10f, ::log10}, {::log1pf, ::log1p},
    {::log2f, ::log2},   {::sinf, ::sin},     {::sinhf, ::sinh},   {::sqrtf, ::sqrt},   {::tanf, ::tan},
    {::tanhf, ::tanh},   {cospi32, cospi64},  {sinpi32, sinpi64},  {tanpi32, tanpi64},
};

template <MathFunction F>
double call64(double x) {
  return kBindings[static_cast<std::size_t>(F)].f64(x);
}

template <MathFunction F>
double call32(double x) {
  return static_cast<double>(kBindings[static_cast<std::size_t>(F)].f32(static_cast<float>(x)));
}

template <MathFunction F, const FloatFormat* Fmt>
double call_narrow(double x) {
  const float y = kBindings[static_cast<std::size_t>(F)].f32(static_cast<float>(x));
  return round_to_format(static_cast<double>(y), *Fmt, RoundingMode::RN);
}

template <std::size_t... I>
constexpr auto make_table(std::index_sequence<I...>) {
  struct Table {
    NativeFn b64[kFunctionCount];
    NativeFn b32[kFunctionCount];
    NativeFn b16[kFunctionCount];
    NativeFn bf16[kFunctionCount];
  };
  return Table{{&call64<kAllFunctions[I]>...},
               {&call32<kAllFunctions[I]>...},
               {&call_narrow<kAllFunctions[I], &kBinary16>...},
               {&call_narrow<kAllFunctions[I], &kBfloat16>...}};
}

const auto kTable = make_table(std::make_index_sequence<kFunctionCount>{});

}  // namespace

float sinpi_fallback(float x) { return sinpi_impl<float, double>(x); }
float cospi_fallback(float x) { return cospi_impl<float, double>(x); }
float tanpi_fallback(float x) { return tanpi_impl<float, double>(x); }
double sinpi_fallback(double x) { return sinpi_impl<double, long double>(x); }
double cospi_fallback(double x) { return cospi_impl<double, long double>(x); }
double tanpi_fallback(double x) { return tanpi_impl<double, long double>(x); }

NativeFn native_evaluator(MathFunction f, const FloatFormat& fmt) {
  const auto i = static_cast<std::size_t>(f);
  if (fmt == kBinary64) return kTable.b64[i];
  if (fmt == kBinary32) return kTable.b32[i];
  if (fmt == kBinary16) return kTable.b16[i];
  if (fmt == kBfloat16) return kTable.bf16[i];
  throw std::invalid_argument("no native evaluator for format " + std::string(fmt.name));
}

bool uses_fallback(MathFunction f) {
  return f == MathFunction::sinpi || f == MathFunction::cospi || f == MathFunction::tanpi;
}

std::string native_convention(const FloatFormat& fmt) {
  std::string text = "glibc ";
  text += gnu_get_libc_version();
  text += " libm";
  if (fmt == kBinary16 || fmt == kBfloat16) {
    text += "; ";
    text += fmt.name;
    text += " promoted to binary32, evaluated, rounded to nearest back";
  }
  text += "; sinpi/cospi/tanpi: bench fallback (exact reduction, wider-precision sin/cos/tan)";
  return text;
}

}  // namespace mathbench
