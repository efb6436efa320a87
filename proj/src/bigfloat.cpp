#include "mathbench/bigfloat.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace mathbench {

BigFloat parse_bigfloat(const std::string& text, mpfr_prec_t precision) {
  BigFloat value(precision);
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  if (start == text.size()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  mpfr_strtofr(value.get(), text.c_str() + start, &end, 0, MPFR_RNDN);
  if (end == text.c_str() + start) throw std::invalid_argument("malformed number '" + text + "'");
  while (*end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  if (*end != '\0') throw std::invalid_argument("malformed number '" + text + "'");
  return value;
}

std::string to_shortest_decimal(const BigFloat& x) {
  if (x.is_nan()) return "nan";
  if (x.is_inf()) return mpfr_signbit(x.get()) ? "-inf" : "inf";
  if (x.is_zero()) return mpfr_signbit(x.get()) ? "-0" : "0";

  const mpfr_prec_t prec = x.precision();
  // Enough digits always exist at ceil(prec*log10(2)) + 2.
  const int max_digits = static_cast<int>(prec * 0.30103) + 3;
  std::vector<char> buf(static_cast<std::size_t>(max_digits) + 32);
  BigFloat back(prec);
  for (int digits = 1; digits <= max_digits; ++digits) {
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x.get());
    mpfr_strtofr(back.get(), buf.data(), nullptr, 10, MPFR_RNDN);
    if (back == x) return buf.data();
  }
  return buf.data();
}

}  // namespace mathbench
