#include "mathbench/refeval.hpp"
#include "mathbench/registry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

using namespace mathbench;

namespace {

const Registry& repo_registry() {
  static const Registry r = Registry::create(std::filesystem::path(MATHBENCH_SOURCE_DIR) / "worstcases");
  return r;
}

// f(x) at 300 bits.
BigFloat exact(MathFunction f, double x) {
  BigFloat out(300);
  EXPECT_EQ(reference_eval(f, x, 300, out), ReferenceStatus::ok);
  return out;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mathbench_registry_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Registry, DomainExamples) {
  const Registry r = Registry::create();
  EXPECT_EQ(r.domain_of(MathFunction::exp, kBinary16), (Interval{-16.625, 11.0859375}));
  EXPECT_EQ(r.domain_of(MathFunction::tanh, kBinary32), (Interval{-9.01091289520263671875, 9.01091289520263671875}));
  EXPECT_EQ(r.domain_of(MathFunction::atanh, kBinary16),
            (Interval{next_up(-1.0, kBinary16), next_down(1.0, kBinary16)}));
  EXPECT_EQ(r.domain_of(MathFunction::sqrt, kBinary16), (Interval{0.0, 65504.0}));
  EXPECT_EQ(r.domain_of(MathFunction::log, kBinary32).lo, kBinary32.s_min());
  EXPECT_EQ(r.domain_of(MathFunction::asin, kBinary64), (Interval{-1.0, 1.0}));
  EXPECT_EQ(r.functions().size(), 24u);
}

TEST(Registry, TablesMatchDerivations) {
  for (const auto& fmt : {kBinary16, kBinary32}) {
    for (MathFunction f : kAllFunctions) {
      EXPECT_EQ(tabulated_domain(f, fmt), derive_domain(f, fmt)) << name_of(f) << " " << fmt.name;
    }
  }
  EXPECT_EQ(derive_exp_like_domain(kBinary16, ExpBase::e), (Interval{-16.625, 11.0859375}));
  EXPECT_EQ(derive_exp_like_domain(kBinary32, ExpBase::e),
            (Interval{-103.27892303466796875, 88.72283172607421875}));
  EXPECT_EQ(derive_exp_like_domain(kBinary16, ExpBase::two), (Interval{-24.0, 15.9921875}));
  EXPECT_EQ(derive_tanh_domain(kBinary16), (Interval{-4.50390625, 4.50390625}));
}

TEST(Registry, PublishedBinary32Exp10UpperBoundOverflows) {
  // The bound usually quoted for binary32 exp10 is the float nearest to
  // log10(f_max), which lies above it; 10^x overflows there.
  const double quoted = 38.531841278076171875;
  BigFloat ref(44);
  ASSERT_EQ(reference_eval(MathFunction::exp10, quoted, 44, ref), ReferenceStatus::ok);
  EXPECT_EQ(check_no_overflow(ref, kBinary32), OverflowCheck::overflow);
  EXPECT_EQ(derive_exp_like_domain(kBinary32, ExpBase::ten).hi, next_down(quoted, kBinary32));
}

TEST(Registry, ExpLikeEndpointsAreTight) {
  for (const auto& fmt : Registry::formats()) {
    for (auto [f, base] : {std::pair{MathFunction::exp, ExpBase::e}, std::pair{MathFunction::exp2, ExpBase::two},
                           std::pair{MathFunction::exp10, ExpBase::ten}}) {
      const Interval d = derive_exp_like_domain(fmt, base);
      EXPECT_LE(mpfr_cmp_d(exact(f, d.hi).get(), fmt.f_max()), 0) << fmt.name;
      EXPECT_GT(mpfr_cmp_d(exact(f, next_up(d.hi, fmt)).get(), fmt.f_max()), 0) << fmt.name;
      EXPECT_GE(mpfr_cmp_d(exact(f, d.lo).get(), fmt.s_min()), 0) << fmt.name;
      EXPECT_LT(mpfr_cmp_d(exact(f, next_down(d.lo, fmt)).get(), fmt.s_min()), 0) << fmt.name;
    }
  }
}

TEST(Registry, TanhBoundaryOracle) {
  for (const auto& fmt : Registry::formats()) {
    const Interval d = derive_tanh_domain(fmt);
    EXPECT_EQ(d.lo, -d.hi);
    // 1 - u/2 is not a double when p = 53, so build it at full precision.
    BigFloat threshold(1.0, 300);
    mpfr_sub_d(threshold.get(), threshold.get(), fmt.unit_roundoff() / 2, MPFR_RNDN);
    EXPECT_LT(mpfr_cmp(exact(MathFunction::tanh, d.hi).get(), threshold.get()), 0) << fmt.name;
    EXPECT_GE(mpfr_cmp(exact(MathFunction::tanh, next_up(d.hi, fmt)).get(), threshold.get()), 0) << fmt.name;
  }
}

TEST(Registry, CoshBoundIsTight) {
  for (const auto& fmt : Registry::formats()) {
    const Interval d = derive_cosh_domain(fmt);
    EXPECT_LE(mpfr_cmp_d(exact(MathFunction::cosh, d.hi).get(), fmt.f_max()), 0) << fmt.name;
    EXPECT_GT(mpfr_cmp_d(exact(MathFunction::cosh, next_up(d.hi, fmt)).get(), fmt.f_max()), 0) << fmt.name;
  }
}

TEST(Registry, EndpointCheckPasses) {
  EXPECT_TRUE(Registry::create().verify_endpoints().empty());
}

TEST(Registry, SpecialPointsLieInDomain) {
  const Registry& r = repo_registry();
  for (const auto& fmt : Registry::formats()) {
    for (MathFunction f : kAllFunctions) {
      const Interval d = r.domain_of(f, fmt);
      for (double x : r.special_points(f, fmt)) {
        EXPECT_TRUE(d.contains(x)) << name_of(f) << " " << fmt.name << " " << x;
        EXPECT_TRUE(is_representable(x, fmt));
      }
    }
  }
  const auto& exp_bf16 = r.special_points(MathFunction::exp, kBfloat16);
  EXPECT_NE(std::find(exp_bf16.begin(), exp_bf16.end(), 1.46875), exp_bf16.end());
  EXPECT_TRUE(r.load_warnings().empty());
}

TEST(Registry, OddFunctionsCarrySignedZeros) {
  const Registry r = Registry::create();
  const auto& pts = r.special_points(MathFunction::sin, kBinary16);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_TRUE(std::signbit(pts[0]));
  EXPECT_FALSE(std::signbit(pts[1]));
  EXPECT_TRUE(r.special_points(MathFunction::cos, kBinary16).empty());
}

TEST(Registry, OutOfDomainSpecialPointIsDroppedWithWarning) {
  const auto dir = temp_dir("drop");
  {
    std::ofstream out(dir / "exp.binary16.txt");
    out << "# test file\n3C00\n4C00  # 16.0, beyond the domain\n\n";
  }
  const Registry r = Registry::create(dir);
  const auto& pts = r.special_points(MathFunction::exp, kBinary16);
  EXPECT_EQ(pts, std::vector<double>{1.0});
  ASSERT_EQ(r.load_warnings().size(), 1u);
  EXPECT_EQ(r.load_warnings()[0].function, MathFunction::exp);
  EXPECT_EQ(r.load_warnings_for(MathFunction::exp, kBinary16).size(), 1u);
}

TEST(Registry, MalformedSpecialFileNamesTheLine) {
  const auto dir = temp_dir("bad");
  {
    std::ofstream out(dir / "log.binary32.txt");
    out << "3F800000\nnot-hex\n";
  }
  try {
    Registry::create(dir);
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("log.binary32.txt:2"), std::string::npos) << e.what();
  }
}
