#pragma once

// High-precision reference values and the ULP error measure
//
//   err(x) = |native(x) - f(x)| / ulp(RZ(f(x)))
//
// f(x) is computed with MPFR, correctly rounded to nearest at the policy
// precision. The RZ in the denominator is obtained from the RN rounding (see
// ulp_rz_exponent) so no rounding state is ever switched.

#include "mathbench/bigfloat.hpp"
#include "mathbench/fpcore.hpp"
#include "mathbench/functions.hpp"

#include <optional>

namespace mathbench {

// Working precision for the reference value and the error numerator:
// 31 bits for binary16, 44 for binary32, 73 for binary64, p+20 otherwise.
struct ReferencePolicy {
  static int bits_for(const FloatFormat& fmt);
};

enum class ReferenceStatus {
  ok,
  domain_error,  // input outside the mathematical domain (MPFR returned NaN)
  infinite,      // pole: the exact value is infinite
};

// Per-worker evaluation state. Not shareable across threads.
class ReferenceContext {
 public:
  explicit ReferenceContext(int bits);

  int bits() const { return bits_; }

  // Sets `out` to f(x) correctly rounded to nearest at bits() precision.
  ReferenceStatus evaluate(MathFunction f, double x, BigFloat& out);

 private:
  ReferenceStatus evaluate_pi_function(MathFunction f, double x, mpfr_ptr out);

  int bits_;
  BigFloat arg_;
  BigFloat pi_;
  BigFloat work_;
};

ReferenceStatus reference_eval(MathFunction f, double x, int bits, BigFloat& out);

enum class OverflowCheck { ok, overflow };

// ok iff |RZ(ref)| <= f_max, i.e. |ref| < 2^(emax+1).
OverflowCheck check_no_overflow(const BigFloat& ref, const FloatFormat& fmt);

// Exponent k with ulp(RZ(ref)) = 2^k, computed from RN(ref): halve when RN
// rounded away from zero onto a power of two 2^j, emin+1 <= j <= emax.
// nullopt when RZ(ref) would exceed f_max.
std::optional<int> ulp_rz_exponent(const BigFloat& ref, const FloatFormat& fmt);
std::optional<double> ulp_rz_of_reference(const BigFloat& ref, const FloatFormat& fmt);

struct UlpError {
  enum class Status { ok, overflow, native_nan, native_infinite };
  Status status = Status::ok;
  double ulps = 0.0;
};

// |native_out - ref| / ulp(RZ(ref)). The numerator is formed at the precision
// of `ref` (native_out enters exactly); the division is by a power of two.
UlpError ulp_error(double native_out, const BigFloat& ref, const FloatFormat& fmt);
// Same, reusing `scratch` for the numerator.
UlpError ulp_error(double native_out, const BigFloat& ref, const FloatFormat& fmt, BigFloat& scratch);

enum class RecordStatus {
  measured,
  reference_infinite,   // pole; skipped with a warning
  reference_overflow,   // RZ(f(x)) > f_max; skipped, flags a domain-table problem
  native_infinite,      // native returned ±inf for a finite reference; skipped
  domain_error,         // reference undefined at x; skipped
  native_nan,           // native returned NaN for a defined reference; a failure
};

std::string_view to_string(RecordStatus status);

struct ErrorRecord {
  explicit ErrorRecord(int bits) : reference(bits) {}

  double input = 0.0;
  double native_out = 0.0;
  BigFloat reference;
  double err_ulps = 0.0;
  RecordStatus status = RecordStatus::measured;

  bool measured() const { return status == RecordStatus::measured; }
  bool failed() const { return status == RecordStatus::native_nan; }
  bool skipped() const { return !measured() && !failed(); }
};

}  // namespace mathbench
