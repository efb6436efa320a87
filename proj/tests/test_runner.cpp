#include "mathbench/runner.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace mathbench;

namespace {

const Registry& registry() {
  static const Registry r = Registry::create();
  return r;
}

ErrorRecord make_record(double x, double err, RecordStatus status = RecordStatus::measured) {
  ErrorRecord r(31);
  r.input = x;
  r.native_out = x;
  mpfr_set_d(r.reference.get(), x, MPFR_RNDN);
  r.err_ulps = err;
  r.status = status;
  return r;
}

bool same_result(const FunctionResult& a, const FunctionResult& b) {
  return a.name == b.name && a.measured == b.measured && a.max_err_ulps == b.max_err_ulps &&
         a.argmax_input == b.argmax_input && std::signbit(a.argmax_input) == std::signbit(b.argmax_input) &&
         a.argmax_output == b.argmax_output && a.argmax_reference == b.argmax_reference &&
         a.tests_run == b.tests_run && a.skipped == b.skipped && a.failures == b.failures && a.warnings == b.warnings;
}

}  // namespace

TEST(TestPoint, ExactSqrt) {
  const ErrorRecord r = test_point(registry(), MathFunction::sqrt, 4.0, kBinary16);
  EXPECT_EQ(r.status, RecordStatus::measured);
  EXPECT_EQ(r.native_out, 2.0);
  EXPECT_EQ(r.err_ulps, 0.0);
}

TEST(TestPoint, TanpiPoleIsSkipped) {
  const ErrorRecord r = test_point(registry(), MathFunction::tanpi, 0.5, kBinary16);
  EXPECT_EQ(r.status, RecordStatus::reference_infinite);
  EXPECT_TRUE(r.skipped());
}

TEST(TestPoint, RejectsInputsOutsideTheDomain) {
  EXPECT_THROW(test_point(registry(), MathFunction::exp, 12.0, kBinary16), std::invalid_argument);
  EXPECT_THROW(test_point(registry(), MathFunction::exp, 1.0 + 1e-9, kBinary16), std::invalid_argument);
}

TEST(TestPoint, MatchesIndependentRecomputation) {
  std::mt19937_64 rng(8);
  const Interval d = registry().domain_of(MathFunction::exp, kBinary32);
  std::uniform_int_distribution<std::int64_t> ranks(rank(d.lo, kBinary32), rank(d.hi, kBinary32));
  for (int i = 0; i < 100; ++i) {
    const double x = unrank(ranks(rng), kBinary32);
    const ErrorRecord r = test_point(registry(), MathFunction::exp, x, kBinary32);
    // Recompute by hand: expf, MPFR exp at 44 bits, |y - ref| / ulp(RZ(ref)).
    const double y = static_cast<double>(std::exp(static_cast<float>(x)));
    BigFloat ref(44);
    mpfr_set_d(ref.get(), x, MPFR_RNDN);
    mpfr_exp(ref.get(), ref.get(), MPFR_RNDN);
    const double u = ulp(round_to_format(ref, kBinary32, RoundingMode::RZ), kBinary32);
    BigFloat diff(44);
    mpfr_d_sub(diff.get(), y, ref.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    mpfr_div_d(diff.get(), diff.get(), u, MPFR_RNDN);
    ASSERT_EQ(r.native_out, y);
    ASSERT_EQ(r.err_ulps, mpfr_get_d(diff.get(), MPFR_RNDN)) << x;
  }
}

TEST(ReduceMax, SingleRecordAndTieRule) {
  const ErrorRecord one[] = {make_record(3.0, 0.25)};
  const FunctionResult r1 = reduce_max(one, "f", kBinary16);
  EXPECT_EQ(r1.max_err_ulps, 0.25);
  EXPECT_EQ(r1.argmax_input, 3.0);
  EXPECT_EQ(r1.tests_run, 1u);

  const ErrorRecord tie[] = {make_record(unrank(9, kBinary16), 0.5), make_record(unrank(5, kBinary16), 0.5),
                             make_record(unrank(7, kBinary16), 0.4)};
  EXPECT_EQ(reduce_max(tie, "f", kBinary16).argmax_input, unrank(5, kBinary16));

  const ErrorRecord zeros[] = {make_record(0.0, 0.1), make_record(-0.0, 0.1)};
  EXPECT_TRUE(std::signbit(reduce_max(zeros, "f", kBinary16).argmax_input));
}

TEST(ReduceMax, AllSkippedIsFlagged) {
  const ErrorRecord recs[] = {make_record(0.5, 0.0, RecordStatus::reference_infinite),
                              make_record(1.5, 0.0, RecordStatus::reference_infinite)};
  const FunctionResult r = reduce_max(recs, "tanpi", kBinary16);
  EXPECT_FALSE(r.measured);
  EXPECT_EQ(r.skipped, 2u);
  EXPECT_EQ(r.tests_run, 2u);
  ASSERT_EQ(r.warnings.size(), 2u);
  EXPECT_EQ(r.warnings[0], "no measurable points");
  EXPECT_NE(r.warnings[1].find("first at 0.5"), std::string::npos) << r.warnings[1];
}

TEST(ReduceMax, NanOutputsAreFailures) {
  const ErrorRecord recs[] = {make_record(1.0, 0.3), make_record(2.0, 0.0, RecordStatus::native_nan)};
  const FunctionResult r = reduce_max(recs, "f", kBinary16);
  EXPECT_EQ(r.failures, 1u);
  EXPECT_EQ(r.skipped, 0u);
  EXPECT_EQ(r.max_err_ulps, 0.3);
}

TEST(MaxErrorAccumulator, MergeOfRandomSplitsEqualsSequentialReduction) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> err(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ErrorRecord> recs;
    const int n = 1 + static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) {
      const double x = unrank(static_cast<std::int64_t>(rng() % 2001) - 1000, kBinary16);
      // Coarse errors so ties happen often.
      const double e = std::round(err(rng) * 4) / 4;
      const auto status = rng() % 7 == 0 ? RecordStatus::reference_infinite : RecordStatus::measured;
      recs.push_back(make_record(x, e, status));
    }
    const FunctionResult expected = reduce_max(recs, "f", kBinary16);

    std::shuffle(recs.begin(), recs.end(), rng);
    const unsigned parts = 1 + static_cast<unsigned>(rng() % 8);
    std::vector<MaxErrorAccumulator> accs(parts, MaxErrorAccumulator(31));
    for (const auto& r : recs) accs[rng() % parts].add(r, rank(r.input, kBinary16));
    MaxErrorAccumulator total(31);
    std::vector<unsigned> order(parts);
    for (unsigned i = 0; i < parts; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (unsigned i : order) total.merge(accs[i]);
    const FunctionResult got = total.finish("f", kBinary16);
    ASSERT_TRUE(same_result(got, expected)) << trial;
  }
}

TEST(RunFunction, ExhaustiveBinary16Sqrt) {
  const WorkerPool pool(2);
  const FunctionResult r = run_function(registry(), MathFunction::sqrt, kBinary16, Strategy::exhaustive, pool);
  EXPECT_TRUE(r.error.empty());
  EXPECT_EQ(r.tests_run, 31744u);
  EXPECT_LE(r.max_err_ulps, 0.5 + 1e-5);
  EXPECT_GT(r.max_err_ulps, 0.49);
  EXPECT_EQ(r.skipped, 0u);
}

TEST(RunFunction, WorkerCountDoesNotChangeResults) {
  for (MathFunction f : {MathFunction::tanpi, MathFunction::exp, MathFunction::sin}) {
    const FunctionResult one = run_function(registry(), f, kBinary16, Strategy::exhaustive, WorkerPool(1));
    for (unsigned p : {2u, 8u}) {
      const FunctionResult many = run_function(registry(), f, kBinary16, Strategy::exhaustive, WorkerPool(p));
      EXPECT_TRUE(same_result(one, many)) << name_of(f) << " P=" << p;
    }
  }
}

TEST(RunConfigEntry, ResultsInRegistryOrderWithProgress) {
  TestConfigEntry entry;
  entry.test_name = "t";
  entry.format = kBinary16;
  RunOptions options;
  options.functions = {MathFunction::sqrt, MathFunction::acos};
  std::ostringstream progress;
  options.progress = &progress;
  const auto rows = run_config_entry(registry(), entry, options);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].name, "acos");
  EXPECT_EQ(rows[1].name, "sqrt");
  const std::string lines = progress.str();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 2);
}
