#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mathbench {

// The univariate functions under test, in report order.
enum class MathFunction : std::uint8_t {
  acos,
  acosh,
  asin,
  asinh,
  atan,
  atanh,
  cbrt,
  cos,
  cosh,
  exp,
  exp10,
  exp2,
  log,
  log10,
  log1p,
  log2,
  sin,
  sinh,
  sqrt,
  tan,
  tanh,
  cospi,
  sinpi,
  tanpi,
};

inline constexpr std::size_t kFunctionCount = 24;

inline constexpr std::array<MathFunction, kFunctionCount> kAllFunctions{
    MathFunction::acos,  MathFunction::acosh, MathFunction::asin,  MathFunction::asinh, MathFunction::atan,
    MathFunction::atanh, MathFunction::cbrt,  MathFunction::cos,   MathFunction::cosh,  MathFunction::exp,
    MathFunction::exp10, MathFunction::exp2,  MathFunction::log,   MathFunction::log10, MathFunction::log1p,
    MathFunction::log2,  MathFunction::sin,   MathFunction::sinh,  MathFunction::sqrt,  MathFunction::tan,
    MathFunction::tanh,  MathFunction::cospi, MathFunction::sinpi, MathFunction::tanpi,
};

inline constexpr std::array<std::string_view, kFunctionCount> kFunctionNames{
    "acos", "acosh", "asin", "asinh", "atan", "atanh", "cbrt",  "cos",   "cosh",  "exp",   "exp10", "exp2",
    "log",  "log10", "log1p", "log2", "sin",  "sinh",  "sqrt",  "tan",   "tanh",  "cospi", "sinpi", "tanpi",
};

constexpr std::string_view name_of(MathFunction f) { return kFunctionNames[static_cast<std::size_t>(f)]; }

constexpr std::optional<MathFunction> function_by_name(std::string_view name) {
  for (std::size_t i = 0; i < kFunctionCount; ++i) {
    if (kFunctionNames[i] == name) return kAllFunctions[i];
  }
  return std::nullopt;
}

// f(-x) = -f(x)
constexpr bool is_odd(MathFunction f) {
  switch (f) {
    case MathFunction::asin:
    case MathFunction::asinh:
    case MathFunction::atan:
    case MathFunction::atanh:
    case MathFunction::cbrt:
    case MathFunction::sin:
    case MathFunction::sinh:
    case MathFunction::tan:
    case MathFunction::tanh:
    case MathFunction::sinpi:
    case MathFunction::tanpi:
      return true;
    default:
      return false;
  }
}

}  // namespace mathbench
