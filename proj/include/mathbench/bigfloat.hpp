#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace mathbench {

// Owning wrapper around an mpfr_t. The precision travels with the value:
// copies keep the source precision, assignment adopts it.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 53) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }

  BigFloat(double x, mpfr_prec_t precision) : BigFloat(precision) { mpfr_set_d(value_, x, MPFR_RNDN); }

  BigFloat(const BigFloat& other) : BigFloat(mpfr_get_prec(other.value_)) { mpfr_set(value_, other.value_, MPFR_RNDN); }

  BigFloat(BigFloat&& other) noexcept : BigFloat(MPFR_PREC_MIN) { mpfr_swap(value_, other.value_); }

  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      }
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  // Changes the precision and rounds the current value into it.
  void round_to_precision(mpfr_prec_t precision) { mpfr_prec_round(value_, precision, MPFR_RNDN); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_inf() const { return mpfr_inf_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

// Parses a decimal or hexadecimal string, correctly rounded to `precision`.
// Throws std::invalid_argument on malformed input.
BigFloat parse_bigfloat(const std::string& text, mpfr_prec_t precision);

// Shortest decimal (in significant digits) that parses back to exactly `x`
// at x's own precision.
std::string to_shortest_decimal(const BigFloat& x);

}  // namespace mathbench
