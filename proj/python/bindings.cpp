// Python bindings: formats, encodings, reference values, single points and
// whole-function runs.

#include "mathbench/cli.hpp"
#include "mathbench/fpcore.hpp"
#include "mathbench/refeval.hpp"
#include "mathbench/registry.hpp"
#include "mathbench/runner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

namespace py = pybind11;
using namespace mathbench;

namespace {

const FloatFormat& format_arg(const std::string& name) {
  for (const auto& fmt : Registry::formats()) {
    if (fmt.name == name) return fmt;
  }
  throw py::value_error("unknown format: " + name);
}

MathFunction function_arg(const std::string& name) {
  const auto f = function_by_name(name);
  if (!f) throw py::value_error("unknown function: " + name);
  return *f;
}

const Registry& default_registry() {
  static const Registry r = Registry::create(default_worstcase_dir());
  return r;
}

py::dict result_dict(const FunctionResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["measured"] = r.measured;
  d["max_err_ulps"] = r.max_err_ulps;
  d["input"] = r.argmax_input;
  d["output"] = r.argmax_output;
  d["reference"] = r.argmax_reference;
  d["tests"] = r.tests_run;
  d["skipped"] = r.skipped;
  d["failures"] = r.failures;
  d["warnings"] = r.warnings;
  d["error"] = r.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ULP-error test bench for univariate math functions";

  m.def("formats", [] {
    std::vector<std::string> names;
    for (const auto& fmt : Registry::formats()) names.emplace_back(fmt.name);
    return names;
  });
  m.def("functions", [] {
    std::vector<std::string> names;
    for (MathFunction f : kAllFunctions) names.emplace_back(name_of(f));
    return names;
  });
  m.def("finite_count", [](const std::string& fmt) { return format_arg(fmt).finite_count(); }, py::arg("fmt"));
  m.def("encode_hex", [](double x, const std::string& fmt) { return encode_hex(x, format_arg(fmt)); },
        py::arg("x"), py::arg("fmt"));
  m.def("decode_hex", [](const std::string& text, const std::string& fmt) { return decode_hex(text, format_arg(fmt)); },
        py::arg("text"), py::arg("fmt"));
  m.def("round", [](double x, const std::string& fmt) {
    return round_to_format(x, format_arg(fmt), RoundingMode::RN);
  }, py::arg("x"), py::arg("fmt"));
  m.def("ulp", [](double x, const std::string& fmt) { return ulp(x, format_arg(fmt)); }, py::arg("x"), py::arg("fmt"));
  m.def("next_up", [](double x, const std::string& fmt) { return next_up(x, format_arg(fmt)); },
        py::arg("x"), py::arg("fmt"));
  m.def("next_down", [](double x, const std::string& fmt) { return next_down(x, format_arg(fmt)); },
        py::arg("x"), py::arg("fmt"));
  m.def("rank", [](double x, const std::string& fmt) { return rank(x, format_arg(fmt)); },
        py::arg("x"), py::arg("fmt"));
  m.def("unrank", [](std::int64_t r, const std::string& fmt) { return unrank(r, format_arg(fmt)); },
        py::arg("r"), py::arg("fmt"));
  m.def("reference_bits", [](const std::string& fmt) { return ReferencePolicy::bits_for(format_arg(fmt)); },
        py::arg("fmt"));

  m.def("domain", [](const std::string& f, const std::string& fmt) {
    const Interval d = default_registry().domain_of(function_arg(f), format_arg(fmt));
    return py::make_tuple(d.lo, d.hi);
  }, py::arg("function"), py::arg("fmt"));
  m.def("special_points", [](const std::string& f, const std::string& fmt) {
    return default_registry().special_points(function_arg(f), format_arg(fmt));
  }, py::arg("function"), py::arg("fmt"));

  m.def("reference", [](const std::string& f, double x, const std::string& fmt) -> py::object {
    const FloatFormat& ff = format_arg(fmt);
    BigFloat out(ReferencePolicy::bits_for(ff));
    if (reference_eval(function_arg(f), x, out.precision(), out) != ReferenceStatus::ok) return py::none();
    return py::str(to_shortest_decimal(out));
  }, py::arg("function"), py::arg("x"), py::arg("fmt"), "f(x) at the policy precision as a decimal string");

  m.def("ulp_error", [](double native_out, const std::string& reference, const std::string& fmt) {
    const FloatFormat& ff = format_arg(fmt);
    const BigFloat ref = parse_bigfloat(reference, ReferencePolicy::bits_for(ff));
    const UlpError e = ulp_error(native_out, ref, ff);
    if (e.status != UlpError::Status::ok) throw py::value_error("error not measurable for this pair");
    return e.ulps;
  }, py::arg("native_out"), py::arg("reference"), py::arg("fmt"));

  m.def("test_point", [](const std::string& f, double x, const std::string& fmt) {
    const ErrorRecord r = test_point(default_registry(), function_arg(f), x, format_arg(fmt));
    py::dict d;
    d["input"] = r.input;
    d["output"] = r.native_out;
    d["reference"] = to_shortest_decimal(r.reference);
    d["err_ulps"] = r.err_ulps;
    d["status"] = std::string(to_string(r.status));
    return d;
  }, py::arg("function"), py::arg("x"), py::arg("fmt"));

  m.def("run_function", [](const std::string& f, const std::string& fmt, const std::string& strategy,
                           unsigned workers) {
    const auto s = strategy_by_name(strategy);
    if (!s) throw py::value_error("unknown strategy: " + strategy);
    if (workers == 0) throw py::value_error("workers must be positive");
    FunctionResult r;
    {
      py::gil_scoped_release release;
      const WorkerPool pool(workers);
      r = run_function(default_registry(), function_arg(f), format_arg(fmt), *s, pool);
    }
    return result_dict(r);
  }, py::arg("function"), py::arg("fmt"), py::arg("strategy") = "exhaustive", py::arg("workers") = 1);

  m.def("main", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mathbench"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line tool; returns (exit code, stdout, stderr)");
}
