#include "mathbench/refeval.hpp"

#include <cmath>

namespace mathbench {

int ReferencePolicy::bits_for(const FloatFormat& fmt) {
  if (fmt == kBinary16) return 31;
  if (fmt == kBinary32) return 44;
  if (fmt == kBinary64) return 73;
  return fmt.precision + 20;
}

ReferenceContext::ReferenceContext(int bits) : bits_(bits), arg_(53), pi_(bits + 32), work_(bits + 32) {}

ReferenceStatus ReferenceContext::evaluate(MathFunction f, double x, BigFloat& out) {
  if (out.precision() != bits_) mpfr_set_prec(out.get(), bits_);
  mpfr_ptr y = out.get();
  mpfr_set_d(arg_.get(), x, MPFR_RNDN);
  mpfr_srcptr a = arg_.get();
  constexpr mpfr_rnd_t rn = MPFR_RNDN;

  switch (f) {
    case MathFunction::acos: mpfr_acos(y, a, rn); break;
    case MathFunction::acosh: mpfr_acosh(y, a, rn); break;
    case MathFunction::asin: mpfr_asin(y, a, rn); break;
    case MathFunction::asinh: mpfr_asinh(y, a, rn); break;
    case MathFunction::atan: mpfr_atan(y, a, rn); break;
    case MathFunction::atanh: mpfr_atanh(y, a, rn); break;
    case MathFunction::cbrt: mpfr_cbrt(y, a, rn); break;
    case MathFunction::cos: mpfr_cos(y, a, rn); break;
    case MathFunction::cosh: mpfr_cosh(y, a, rn); break;
    case MathFunction::exp: mpfr_exp(y, a, rn); break;
    case MathFunction::exp10: mpfr_exp10(y, a, rn); break;
    case MathFunction::exp2: mpfr_exp2(y, a, rn); break;
    case MathFunction::log: mpfr_log(y, a, rn); break;
    case MathFunction::log10: mpfr_log10(y, a, rn); break;
    case MathFunction::log1p: mpfr_log1p(y, a, rn); break;
    case MathFunction::log2: mpfr_log2(y, a, rn); break;
    case MathFunction::sin: mpfr_sin(y, a, rn); break;
    case MathFunction::sinh: mpfr_sinh(y, a, rn); break;
    case MathFunction::sqrt: mpfr_sqrt(y, a, rn); break;
    case MathFunction::tan: mpfr_tan(y, a, rn); break;
    case MathFunction::tanh: mpfr_tanh(y, a, rn); break;
    case MathFunction::cospi:
    case MathFunction::sinpi:
    case MathFunction::tanpi:
      return evaluate_pi_function(f, x, y);
  }
  if (mpfr_nan_p(y)) return ReferenceStatus::domain_error;
  if (mpfr_inf_p(y)) return ReferenceStatus::infinite;
  return ReferenceStatus::ok;
}

// sin(pi x), cos(pi x), tan(pi x). The argument is reduced exactly in binary64
// (fmod and the Sterbenz-exact subtractions below) to r in [0, 1/2] or
// [0, 1/4], then a Ziv loop raises the working precision until the
// approximation of sin/cos/tan(pi r) rounds unambiguously.
ReferenceStatus ReferenceContext::evaluate_pi_function(MathFunction f, double x, mpfr_ptr out) {
  if (std::isnan(x)) {
    mpfr_set_nan(out);
    return ReferenceStatus::domain_error;
  }
  if (std::isinf(x)) {
    mpfr_set_nan(out);
    return ReferenceStatus::domain_error;
  }

  enum class Kernel { sin, cos, tan, cot };
  double sign = std::signbit(x) ? -1.0 : 1.0;
  double r = 0.0;
  Kernel kernel = Kernel::sin;

  if (f == MathFunction::sinpi) {
    r = std::fmod(std::fabs(x), 2.0);
    if (r >= 1.0) {
      r -= 1.0;
      sign = -sign;
    }
    if (r > 0.5) r = 1.0 - r;
    if (r == 0.0) {
      mpfr_set_zero(out, sign < 0 ? -1 : 1);
      return ReferenceStatus::ok;
    }
    if (r == 0.5) {
      mpfr_set_d(out, sign, MPFR_RNDN);
      return ReferenceStatus::ok;
    }
    kernel = Kernel::sin;
  } else if (f == MathFunction::cospi) {
    sign = 1.0;
    r = std::fmod(std::fabs(x), 2.0);
    if (r > 1.0) r = 2.0 - r;
    if (r > 0.5) {
      r = 1.0 - r;
      sign = -1.0;
    }
    if (r == 0.5) {
      mpfr_set_zero(out, 1);
      return ReferenceStatus::ok;
    }
    if (r == 0.0) {
      mpfr_set_d(out, sign, MPFR_RNDN);
      return ReferenceStatus::ok;
    }
    if (r >= 0.25) {
      r = 0.5 - r;
      kernel = Kernel::sin;
    } else {
      kernel = Kernel::cos;
    }
  } else {
    r = std::fmod(std::fabs(x), 1.0);
    if (r > 0.5) {
      r = 1.0 - r;
      sign = -sign;
    }
    if (r == 0.0) {
      mpfr_set_zero(out, sign < 0 ? -1 : 1);
      return ReferenceStatus::ok;
    }
    if (r == 0.5) {
      mpfr_set_inf(out, sign < 0 ? -1 : 1);
      return ReferenceStatus::infinite;
    }
    if (r == 0.25) {
      mpfr_set_d(out, sign, MPFR_RNDN);
      return ReferenceStatus::ok;
    }
    if (r > 0.25) {
      r = 0.5 - r;
      kernel = Kernel::cot;
    } else {
      kernel = Kernel::tan;
    }
  }

  mpfr_prec_t working = bits_ + 32;
  mpfr_ptr pi = pi_.get();
  mpfr_ptr t = work_.get();
  for (;;) {
    mpfr_set_prec(pi, working);
    mpfr_set_prec(t, working);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_d(t, pi, r, MPFR_RNDN);
    // pi*r carries relative error below 2 ulps; sin/cos/tan of an argument in
    // [0, pi/2] amplify it by at most pi/2, plus one rounding each step.
    mpfr_exp_t lost_bits = 4;
    switch (kernel) {
      case Kernel::sin:
        mpfr_sin(t, t, MPFR_RNDN);
        break;
      case Kernel::cos:
        mpfr_cos(t, t, MPFR_RNDN);
        break;
      case Kernel::tan:
        mpfr_tan(t, t, MPFR_RNDN);
        break;
      case Kernel::cot:
        mpfr_tan(t, t, MPFR_RNDN);
        mpfr_ui_div(t, 1, t, MPFR_RNDN);
        lost_bits = 5;
        break;
    }
    if (mpfr_can_round(t, working - lost_bits, MPFR_RNDN, MPFR_RNDZ, bits_ + 1)) {
      mpfr_set(out, t, MPFR_RNDN);
      if (sign < 0) mpfr_neg(out, out, MPFR_RNDN);
      return ReferenceStatus::ok;
    }
    working += working / 2;
  }
}

ReferenceStatus reference_eval(MathFunction f, double x, int bits, BigFloat& out) {
  ReferenceContext ctx(bits);
  return ctx.evaluate(f, x, out);
}

OverflowCheck check_no_overflow(const BigFloat& ref, const FloatFormat& fmt) {
  if (ref.is_nan() || ref.is_inf()) return OverflowCheck::overflow;
  if (ref.is_zero()) return OverflowCheck::ok;
  // |ref| < 2^(emax+1)  <=>  floor(log2|ref|) <= emax
  const long e = static_cast<long>(mpfr_get_exp(ref.get())) - 1;
  return e <= fmt.emax ? OverflowCheck::ok : OverflowCheck::overflow;
}

std::optional<int> ulp_rz_exponent(const BigFloat& ref, const FloatFormat& fmt) {
  if (check_no_overflow(ref, fmt) == OverflowCheck::overflow) return std::nullopt;
  const double rn = round_to_format(ref, fmt, RoundingMode::RN);
  // RN overflowed while RZ did not: RZ(ref) = ±f_max.
  if (std::isinf(rn)) return ulp_exponent(fmt.f_max(), fmt);
  int k = ulp_exponent(rn, fmt);
  const int cmp = mpfr_cmp_d(ref.get(), rn);
  const bool rounded_away = rn > 0 ? cmp < 0 : cmp > 0;
  if (rounded_away) {
    int e = 0;
    const double m = std::frexp(std::fabs(rn), &e);  // |rn| = m * 2^e, m in [0.5, 1)
    const int j = e - 1;
    if (m == 0.5 && j >= fmt.emin + 1 && j <= fmt.emax) --k;
  }
  return k;
}

std::optional<double> ulp_rz_of_reference(const BigFloat& ref, const FloatFormat& fmt) {
  const auto k = ulp_rz_exponent(ref, fmt);
  if (!k) return std::nullopt;
  return std::ldexp(1.0, *k);
}

UlpError ulp_error(double native_out, const BigFloat& ref, const FloatFormat& fmt, BigFloat& scratch) {
  if (std::isnan(native_out)) return {UlpError::Status::native_nan, 0.0};
  const auto k = ulp_rz_exponent(ref, fmt);
  if (!k) return {UlpError::Status::overflow, 0.0};
  if (std::isinf(native_out)) return {UlpError::Status::native_infinite, 0.0};
  if (scratch.precision() != ref.precision()) mpfr_set_prec(scratch.get(), ref.precision());
  mpfr_d_sub(scratch.get(), native_out, ref.get(), MPFR_RNDN);
  mpfr_abs(scratch.get(), scratch.get(), MPFR_RNDN);
  mpfr_div_2si(scratch.get(), scratch.get(), *k, MPFR_RNDN);
  return {UlpError::Status::ok, scratch.to_double()};
}

UlpError ulp_error(double native_out, const BigFloat& ref, const FloatFormat& fmt) {
  BigFloat scratch(ref.precision());
  return ulp_error(native_out, ref, fmt, scratch);
}

std::string_view to_string(RecordStatus status) {
  switch (status) {
    case RecordStatus::measured:
      return "measured";
    case RecordStatus::reference_infinite:
      return "reference infinite (pole)";
    case RecordStatus::reference_overflow:
      return "reference overflows the format";
    case RecordStatus::native_infinite:
      return "native result infinite, reference finite";
    case RecordStatus::domain_error:
      return "input outside the mathematical domain";
    case RecordStatus::native_nan:
      return "native result NaN, reference defined";
  }
  return "unknown";
}

}  // namespace mathbench
