#pragma once

// Bindings to the platform's implementations of the functions under test.

#include "mathbench/fpcore.hpp"
#include "mathbench/functions.hpp"

#include <string>

namespace mathbench {

// Takes and returns a format value carried in a double.
using NativeFn = double (*)(double);

// Supported formats: binary64 and binary32 call libm directly; binary16 and
// bfloat16 promote to binary32, call the binary32 function and round the
// result to nearest in the narrow format. Throws std::invalid_argument for
// other formats.
NativeFn native_evaluator(MathFunction f, const FloatFormat& fmt);

// True when the platform libm has no implementation and the bench's own
// fallback is bound instead (sinpi, cospi, tanpi on glibc).
bool uses_fallback(MathFunction f);

// Human-readable description of what "native" means for this format.
std::string native_convention(const FloatFormat& fmt);

// Fallback implementations: exact argument reduction, then sin/cos/tan of
// pi*r evaluated in the next wider hardware type.
float sinpi_fallback(float x);
float cospi_fallback(float x);
float tanpi_fallback(float x);
double sinpi_fallback(double x);
double cospi_fallback(double x);
double tanpi_fallback(double x);

}  // namespace mathbench
