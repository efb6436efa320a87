#pragma once

// Catalogue of the functions under test: native bindings, exact input
// domains per format and the always-tested special inputs.

#include "mathbench/fpcore.hpp"
#include "mathbench/functions.hpp"
#include "mathbench/native.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mathbench {

enum class ExpBase { e, two, ten };

// [RU(log_b(s_min)), RD(log_b(f_max))]: b^lo does not underflow below s_min
// and b^hi does not exceed f_max.
Interval derive_exp_like_domain(const FloatFormat& fmt, ExpBase base);

// hi = RZ(log((4-u)/u) / 2), u = 2^-p, stepped down once if that expression is
// exactly representable; the interval is [-hi, hi]. Beyond hi, tanh rounds to
// ±1 under RN.
Interval derive_tanh_domain(const FloatFormat& fmt);

// [-RD(acosh(f_max)), RD(acosh(f_max))]; shared by cosh and sinh.
Interval derive_cosh_domain(const FloatFormat& fmt);

// Domain derived from the formulas above (or the structural ones: [-1, 1],
// [s_min, f_max], ...), valid for any supported format.
Interval derive_domain(MathFunction f, const FloatFormat& fmt);

// Hardcoded published domains for binary16 and binary32.
Interval tabulated_domain(MathFunction f, const FloatFormat& fmt);

struct FunctionSpec {
  MathFunction id;
  std::string_view name;
  std::map<std::string_view, Interval> domains;                // by format name
  std::map<std::string_view, std::vector<double>> special;     // sorted by rank, unique

  NativeFn native(const FloatFormat& fmt) const { return native_evaluator(id, fmt); }
};

struct LoadWarning {
  MathFunction function;
  std::string format;
  std::string message;
};

// Immutable after construction; safe for concurrent reads.
class Registry {
 public:
  // Formats with domains and special points: binary16, bfloat16, binary32,
  // binary64.
  static const std::vector<FloatFormat>& formats();

  // Builds the catalogue, loads `<dir>/<function>.<format>.txt` special-point
  // files when `worstcase_dir` is non-empty and runs the endpoint overflow
  // check. Throws std::runtime_error if an endpoint overflows or a file is
  // malformed.
  static Registry create(const std::filesystem::path& worstcase_dir = {});

  const std::vector<FunctionSpec>& functions() const { return functions_; }
  const FunctionSpec& spec(MathFunction f) const { return functions_[static_cast<std::size_t>(f)]; }

  Interval domain_of(MathFunction f, const FloatFormat& fmt) const;
  const std::vector<double>& special_points(MathFunction f, const FloatFormat& fmt) const;

  // Points dropped while loading (out of domain, non-finite).
  const std::vector<LoadWarning>& load_warnings() const { return warnings_; }
  std::vector<std::string> load_warnings_for(MathFunction f, const FloatFormat& fmt) const;

  // Reads one special-point file and appends its in-domain points; returns
  // the number of points dropped.
  std::size_t load_special_file(MathFunction f, const FloatFormat& fmt, const std::filesystem::path& file);

  // Reference values at both endpoints of every domain must satisfy
  // |RZ(f(x))| <= f_max. Returns a description of each violation.
  std::vector<std::string> verify_endpoints() const;

 private:
  Registry() = default;
  void add_special(MathFunction f, const FloatFormat& fmt, std::vector<double> points);

  std::vector<FunctionSpec> functions_;
  std::vector<LoadWarning> warnings_;
};

}  // namespace mathbench
