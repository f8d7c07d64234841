#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "pencil/analysis/locus.hpp"
#include "pencil/errors.hpp"

using namespace pencil;
using namespace pencil::analysis;
using corpus::q;
using corpus::X;
using corpus::Y;
using corpus::Z;

namespace {

std::set<std::string> point_strings(const std::vector<BasePoint>& pts) {
  std::set<std::string> out;
  for (const auto& bp : pts) out.insert(bp.point.to_string());
  return out;
}

}  // namespace

TEST(Pencil, RejectsSharedFactor) {
  EXPECT_THROW(Pencil(X() * Y(), X() * Z()), InputError);
  EXPECT_THROW(Pencil(X() * Y(), (X() * Y()).scaled(q(3))), InputError);
  EXPECT_THROW(Pencil(X().pow(2), Y().pow(3)), InputError);
  try {
    Pencil(X() * Y(), X() * Z());
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "generators share a factor");
  }
}

TEST(Pencil, Fibers) {
  const Pencil p = corpus::hesse();
  EXPECT_EQ(p.fiber(q(1), q(0)), p.f1());
  EXPECT_EQ(p.fiber(FiberParam::rational(1, -3)), p.f1() - p.f2().scaled(q(3)));
  const FiberParam t = root_param(forms::BinaryForm::from_rationals({1, -3, 9}));
  ASSERT_FALSE(t.is_rational());
  EXPECT_EQ(t.field()->min_poly_string(), "a^2-3*a+9");
  const Form f = p.fiber(t);
  EXPECT_EQ(f.field()->degree(), 2);
  EXPECT_TRUE(forms::hessian(f).divisible_by(f));
}

TEST(BaseLocus, Hesse) {
  const Pencil p = corpus::hesse();
  const auto pts = base_locus(p);
  EXPECT_EQ(distinct_count(pts), 9);
  EXPECT_EQ(intersection_total(pts), 9);
  EXPECT_EQ(point_strings(pts), (std::set<std::string>{"[0:1:-1]", "[1:-1:0]", "[1:0:-1]", "[0:1:a]", "[1:0:a]",
                                                        "[1:a:0]"}));
  for (const auto& bp : pts) {
    EXPECT_EQ(bp.mult, 1);
    EXPECT_EQ(bp.int_mult, 1);
    EXPECT_TRUE(p.f1().evaluate(bp.point.coords()).is_zero());
    EXPECT_TRUE(p.f2().evaluate(bp.point.coords()).is_zero());
    if (bp.orbit_size == 2) {
      EXPECT_EQ(bp.point.field()->min_poly_string(), "a^2-a+1");
    }
  }
}

TEST(BaseLocus, B3) {
  const Pencil p = corpus::b3();
  const auto pts = base_locus(p);
  EXPECT_EQ(distinct_count(pts), 7);
  EXPECT_EQ(intersection_total(pts), 16);
  EXPECT_EQ(point_strings(pts), (std::set<std::string>{"[0:0:1]", "[0:1:0]", "[1:0:0]", "[1:1:1]", "[1:-1:-1]",
                                                        "[1:1:-1]", "[1:-1:1]"}));
  for (const auto& bp : pts) {
    const auto& c = bp.point.coords();
    const int zeros = c[0].is_zero() + c[1].is_zero() + c[2].is_zero();
    EXPECT_EQ(bp.mult, zeros == 2 ? 2 : 1) << bp.point.to_string();
    EXPECT_EQ(bp.int_mult, zeros == 2 ? 4 : 1) << bp.point.to_string();
  }
}

TEST(BaseLocus, SeedIndependent) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Config cfg;
    cfg.seed = seed;
    EXPECT_EQ(point_strings(base_locus(corpus::hesse(), cfg)), point_strings(base_locus(corpus::hesse())));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_fiber(X().pow(3) + Y().pow(3) + Z().pow(3)).tag, FiberTag::kGeneric);
  const auto cr = classify_fiber(Z().pow(2) * (Y().pow(2) - X().pow(2)));
  EXPECT_EQ(cr.tag, FiberTag::kCompletelyReducible);
  EXPECT_EQ(cr.lines.size(), 3u);
  EXPECT_FALSE(cr.residual.has_value());
  const Form conic = Y().pow(2) - X() * Z();
  const Form f = X() * conic.pow(2);
  EXPECT_EQ(classify_fiber(f).tag, FiberTag::kSpecialNotCR);
  // The two divisibility tests behind that verdict, by direct division.
  const Form red = X() * conic;
  EXPECT_FALSE(forms::hessian(red).divisible_by(red));
  EXPECT_TRUE(forms::hessian(f).divisible_by(f));
  EXPECT_EQ(classify_fiber(X().pow(2) * Y()).tag, FiberTag::kConcurrentLines);
}

TEST(Classify, HessianQuotient) {
  EXPECT_EQ(hessian_quotient(X() * Y() * Z()), Form::constant(q(2)));
  EXPECT_EQ(hessian_quotient(X().pow(3) + Y().pow(3) + Z().pow(3) - (X() * Y() * Z()).scaled(q(3))),
            Form::constant(q(-54)));
  EXPECT_THROW(hessian_quotient(X().pow(3) + Y().pow(3) + Z().pow(3)), InputError);
}

TEST(Classify, RationalLines) {
  const Form f = (X() + Y().scaled(q(2)) - Z()) * (Y() - Z().scaled(q(3))) * Z() * (X() - Y());
  Form residual;
  const auto lines = rational_lines(f, &residual);
  EXPECT_EQ(lines.size(), 4u);
  EXPECT_EQ(residual.degree(), 0);
}

TEST(SpecialLocus, Hesse) {
  const auto locus = special_locus(corpus::hesse());
  EXPECT_EQ(locus.rho.to_string(), "27*lam^4+lam*mu^3");
  EXPECT_EQ(locus.special_count(), 4);
  EXPECT_EQ(locus.cr_count(), 4);
  for (const auto& f : locus.fibers) {
    EXPECT_EQ(f.cls.tag, FiberTag::kCompletelyReducible) << f.param.to_string();
    EXPECT_TRUE(forms::hessian(f.fiber).divisible_by(f.fiber));
  }
}

TEST(SpecialLocus, B3) {
  const auto locus = special_locus(corpus::b3());
  std::set<std::string> params;
  for (const auto& f : locus.fibers) {
    params.insert(f.param.to_string());
    EXPECT_EQ(f.cls.tag, FiberTag::kCompletelyReducible) << f.param.to_string();
  }
  EXPECT_EQ(params, (std::set<std::string>{"[1:0]", "[0:1]", "[1:-1]"}));
  EXPECT_EQ(locus.special_count(), 3);
}

TEST(SpecialLocus, GeneratorRootIffSpecial) {
  // f1 generic: [1:0] is not on the locus.
  const Pencil p(X().pow(3) + Y().pow(3) + Z().pow(3), X() * Y() * Z() + X().pow(2) * Y());
  const auto locus = special_locus(p);
  EXPECT_FALSE(locus.rho.evaluate(q(1), q(0)).is_zero());
  const Pencil swapped(p.f2(), p.f1());
  EXPECT_EQ(special_locus(swapped).rho.evaluate(q(1), q(0)).is_zero(),
            forms::hessian(p.f2()).divisible_by(p.f2()));
}
