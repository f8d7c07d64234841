#include <gtest/gtest.h>

#include <random>

#include "pencil/errors.hpp"
#include "pencil/forms/biform.hpp"
#include "pencil/forms/form.hpp"
#include "pencil/forms/projective.hpp"
#include "pencil/forms/resultant.hpp"

using namespace pencil;
using namespace pencil::forms;
using algebra::NumberField;

namespace {

const FieldPtr& Q() {
  static const FieldPtr q = NumberField::rationals();
  return q;
}

FieldElement c(long v) { return FieldElement(Q(), v); }

Form X() { return Form::variable(Q(), 0); }
Form Y() { return Form::variable(Q(), 1); }
Form Z() { return Form::variable(Q(), 2); }

Form hesse_f1() { return X().pow(3) + Y().pow(3) + Z().pow(3); }
Form hesse_f2() { return X() * Y() * Z(); }
Form b3_f1() { return X().pow(2) * (Y().pow(2) - Z().pow(2)); }
Form b3_f2() { return Y().pow(2) * (X().pow(2) - Z().pow(2)); }

Form random_form(int degree, std::mt19937_64& rng, int bound = 5) {
  Form f(Q(), degree);
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      const long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      if (v != 0) f.add_term({i, j, degree - i - j}, c(v));
    }
  }
  return f;
}

Form random_line(std::mt19937_64& rng) {
  while (true) {
    Form l = random_form(1, rng);
    if (!l.is_zero()) return l;
  }
}

FieldElement random_scalar(std::mt19937_64& rng) { return c(static_cast<long>(rng() % 21) - 10); }

ProjPoint point(long a, long b, long cc) { return ProjPoint({c(a), c(b), c(cc)}); }

}  // namespace

TEST(FormArith, ProductAndDivision) {
  EXPECT_EQ((X() + Y()) * (X() - Y()), X().pow(2) - Y().pow(2));
  const auto q = (X().pow(2) - Y().pow(2)).divide(X() + Y());
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, X() - Y());
  EXPECT_FALSE(hesse_f1().divisible_by(X() + Y() + Z()));
  // Witness for the negative case: the divisor vanishes at (1,1,-2), the dividend does not.
  EXPECT_EQ(hesse_f1().evaluate({c(1), c(1), c(-2)}), c(-6));
}

TEST(FormArith, DegreeMismatchThrows) { EXPECT_THROW(X().pow(2) + Y(), AlgebraError); }

TEST(FormArith, CanonicalText) {
  EXPECT_EQ((hesse_f1() - hesse_f2().scaled(c(6))).to_string(), "x^3-6*x*y*z+y^3+z^3");
  EXPECT_EQ(b3_f1().to_string(), "x^2*y^2-x^2*z^2");
}

TEST(Hessian, Examples) {
  EXPECT_EQ(hessian(hesse_f1()), hesse_f2().scaled(c(216)));
  EXPECT_TRUE(hessian(X().pow(2) * Y()).is_zero());
  EXPECT_EQ(hessian(hesse_f2()), hesse_f2().scaled(c(2)));
  EXPECT_EQ(hessian(hesse_f1()).degree(), 3);
  EXPECT_EQ(hessian(X().pow(2) * Y()).degree(), 3);
}

TEST(Hessian, B3ValueAtDiagonalPoint) {
  const Form f = b3_f1() + b3_f2();
  EXPECT_EQ(hessian(f).evaluate({c(1), c(1), c(1)}), c(432));
}

TEST(PencilHessian, Hesse) {
  const BiForm h = pencil_hessian(hesse_f1(), hesse_f2());
  EXPECT_EQ(h.lam_degree(), 3);
  EXPECT_EQ(h.xyz_degree(), 3);
  BiForm expected(Q(), 3, 3);
  const Form f1 = hesse_f1();
  for (const auto& [e, v] : f1.terms()) expected.add_term({1, 2, e[0], e[1], e[2]}, v * c(-6));
  expected.add_term({3, 0, 1, 1, 1}, c(216));
  expected.add_term({0, 3, 1, 1, 1}, c(2));
  EXPECT_EQ(h, expected);
  EXPECT_EQ(h.specialize(c(1), c(0)), hesse_f2().scaled(c(216)));
  EXPECT_TRUE(h.specialize(c(0), c(0)).is_zero());
  EXPECT_EQ(h.specialize(c(1), c(-3)), (hesse_f1() - hesse_f2().scaled(c(3))).scaled(c(-54)));
}

TEST(LocalExpansion, Examples) {
  const auto e1 = local_expansion(hesse_f2(), point(0, 0, 1));
  EXPECT_EQ(e1.mult, 2);
  EXPECT_EQ(e1.tangent_cone(), BinaryForm(Q(), 2, {c(0), c(1), c(0)}, kXY));

  const auto e2 = local_expansion(b3_f1(), point(0, 0, 1));
  EXPECT_EQ(e2.mult, 2);
  EXPECT_EQ(e2.tangent_cone(), BinaryForm(Q(), 2, {c(0), c(0), c(-1)}, kXY));

  const auto e3 = local_expansion(hesse_f1(), point(0, 1, -1));
  EXPECT_EQ(e3.mult, 1);
  EXPECT_FALSE(e3.is_cone_at_point());

  EXPECT_TRUE(local_expansion(X().pow(2) * Y(), point(0, 0, 1)).is_cone_at_point());
}

TEST(Resultant, Examples) {
  EXPECT_THROW(resultant_z(X(), Y()), ShearRequired);
  const BinaryForm r = resultant_z(X() + Z(), Y() - Z());
  EXPECT_EQ(r, BinaryForm(Q(), 1, {c(1), c(1)}, kXY));

  // (xy)^3 (x^3 + y^3), up to sign.
  const BinaryForm h = resultant_z(hesse_f1(), hesse_f2());
  EXPECT_EQ(h.degree(), 9);
  std::vector<FieldElement> coeffs(10, c(0));
  coeffs[6] = c(1);
  coeffs[3] = c(1);
  EXPECT_TRUE(h.proportional_to(BinaryForm(Q(), 9, coeffs, kXY)));
}

TEST(Resultant, VanishesOnCommonPoint) {
  // Both conics pass through [1:2:1], so the resultant vanishes at (1, 2).
  const Form f = X() * Z() - Y().pow(2) + X().pow(2).scaled(c(2)) + Z().pow(2);
  const Form g = Z().pow(2) - X() * Y() - X().pow(2) + Y() * Z();
  ASSERT_TRUE(f.evaluate({c(1), c(2), c(1)}).is_zero());
  ASSERT_TRUE(g.evaluate({c(1), c(2), c(1)}).is_zero());
  EXPECT_TRUE(resultant_z(f, g).evaluate(c(1), c(2)).is_zero());
  EXPECT_FALSE(resultant_z(f, g).evaluate(c(1), c(3)).is_zero());
}

TEST(Shear, Examples) {
  const Form f = X().pow(2) * Y();
  EXPECT_EQ(shear(f, identity_matrix(Q())), f);
  Mat3 swap = identity_matrix(Q());
  swap[0][0] = c(0);
  swap[2][2] = c(0);
  swap[0][2] = c(1);
  swap[2][0] = c(1);
  EXPECT_EQ(shear(f, swap), Z().pow(2) * Y());
  Mat3 singular = identity_matrix(Q());
  singular[1][1] = c(0);
  EXPECT_THROW(shear(f, singular), AlgebraError);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(X().pow(2) - Y().pow(2), X() * Z() + Y() * Z()), X() + Y());
  EXPECT_EQ(gcd(hesse_f1(), hesse_f2()).degree(), 0);
  EXPECT_EQ(reduced(X().pow(2) * Y().pow(3) * (X() + Z())), X() * Y() * (X() + Z()));
  EXPECT_EQ(gcd(b3_f1(), b3_f2()).degree(), 0);
}

TEST(Properties, EulerIdentity) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      const int d = 1 + static_cast<int>(rng() % 5);
      const Form f = random_form(d, rng);
      const Form lhs = X() * f.derivative(0) + Y() * f.derivative(1) + Z() * f.derivative(2);
      ASSERT_EQ(lhs, f.scaled(c(d))) << f.to_string();
    }
  }
}

TEST(Properties, PencilHessianSpecialization) {
  const std::vector<std::pair<Form, Form>> pencils = {{hesse_f1(), hesse_f2()}, {b3_f1(), b3_f2()}};
  for (const auto& [f1, f2] : pencils) {
    const BiForm h = pencil_hessian(f1, f2);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      std::mt19937_64 rng(seed);
      for (int n = 0; n < 20; ++n) {
        const FieldElement l = random_scalar(rng), m = random_scalar(rng);
        ASSERT_EQ(h.specialize(l, m), hessian(f1.scaled(l) + f2.scaled(m)));
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const Form f1 = random_form(d, rng), f2 = random_form(d, rng);
    const FieldElement l = random_scalar(rng), m = random_scalar(rng);
    ASSERT_EQ(pencil_hessian(f1, f2).specialize(l, m), hessian(f1.scaled(l) + f2.scaled(m)));
  }
}

TEST(Properties, ConcurrentLinesHaveZeroHessian) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      // Lines through a random point: combinations of two lines through it.
      const Form a = random_line(rng), b = random_line(rng);
      const int count = 2 + static_cast<int>(rng() % 3);
      Form f = Form::constant(c(1));
      for (int i = 0; i < count; ++i) f *= a.scaled(random_scalar(rng)) + b.scaled(random_scalar(rng));
      if (f.is_zero()) continue;
      ASSERT_TRUE(hessian(f).is_zero()) << f.to_string();
    }
  }
}

TEST(Properties, TriangleDividesItsHessian) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      const Form a = random_line(rng), b = random_line(rng), l = random_line(rng);
      Mat3 m;
      for (int j = 0; j < 3; ++j) {
        m[0][j] = a.coeff({j == 0, j == 1, j == 2});
        m[1][j] = b.coeff({j == 0, j == 1, j == 2});
        m[2][j] = l.coeff({j == 0, j == 1, j == 2});
      }
      if (determinant(m).is_zero()) continue;
      const Form f = a * b * l;
      ASSERT_TRUE(hessian(f).divisible_by(f)) << f.to_string();
    }
  }
}

TEST(Properties, RecomposeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      const int d = 1 + static_cast<int>(rng() % 4);
      const Form f = random_form(d, rng);
      if (f.is_zero()) continue;
      ProjPoint p = point(0, 0, 1);
      while (true) {
        const long a = static_cast<long>(rng() % 7) - 3, b = static_cast<long>(rng() % 7) - 3,
                   cc = static_cast<long>(rng() % 7) - 3;
        if (a != 0 || b != 0 || cc != 0) {
          p = point(a, b, cc);
          break;
        }
      }
      const LocalExpansion e = local_expansion(f, p);
      ASSERT_EQ(recompose(e, d), shear(f, e.chart));
      ASSERT_EQ(forms::apply(e.chart, point(0, 0, 1)), p);
      ASSERT_EQ(e.mult == 0, !f.evaluate(p.coords()).is_zero());
    }
  }
}

TEST(Properties, ShearRoundTrip) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      const Form f = random_form(1 + static_cast<int>(rng() % 4), rng);
      const Mat3 t = random_integer_matrix(rng);
      ASSERT_EQ(shear(shear(f, t), inverse(t)), f);
    }
  }
}

TEST(Properties, PseudoDivisionIdentity) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      const int d = 2 + static_cast<int>(rng() % 2);
      Form f1 = random_form(d, rng), f2 = random_form(d, rng);
      f1.add_term({0, 0, d}, c(1 + static_cast<long>(rng() % 3)));
      const BiForm f = BiForm::pencil(f1, f2);
      const BiForm h = pencil_hessian(f1, f2);
      const PseudoDivision pd = pseudo_divide_z(h, f);
      ASSERT_LT(pd.remainder.z_degree(), d);
      if (pd.lead_power == 0) {
        ASSERT_EQ(pd.remainder, h);
        continue;
      }
      const BiForm lhs = BiForm::from_binary(pd.lead.pow(static_cast<unsigned>(pd.lead_power))) * h;
      ASSERT_EQ(lhs, pd.quotient * f + pd.remainder);
    }
  }
}

TEST(PseudoDivision, TrivialCases) {
  const BiForm f = BiForm::pencil(hesse_f1(), hesse_f2());
  const PseudoDivision self = pseudo_divide_z(f, f);
  EXPECT_TRUE(self.remainder.is_zero());
  const BiForm low = BiForm::from_form(X().pow(2) * Y());
  const PseudoDivision small = pseudo_divide_z(low, f);
  EXPECT_EQ(small.lead_power, 0);
  EXPECT_TRUE(small.quotient.is_zero());
  EXPECT_EQ(small.remainder, low);
}

TEST(Properties, HessianMultiplicityAtSingularBasePoints) {
  // Fibers of the B3 pencil at its coordinate vertices: m = 2, m_P(H) = 3m - 4,
  // and the tangent cone divides the lowest Hessian component.
  const std::vector<ProjPoint> vertices = {point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 20; ++n) {
      const FieldElement l = random_scalar(rng), m = random_scalar(rng);
      if (l.is_zero() || m.is_zero() || l == m || l == -m) continue;
      const Form f = b3_f1().scaled(l) + b3_f2().scaled(m);
      const Form h = hessian(f);
      for (const auto& p : vertices) {
        const Mat3 chart = chart_at(p);
        const LocalExpansion ef = local_expansion(f, p, chart);
        if (ef.is_cone_at_point()) continue;
        const LocalExpansion eh = local_expansion(h, p, chart);
        ASSERT_EQ(ef.mult, 2);
        ASSERT_EQ(eh.mult, 3 * ef.mult - 4);
        ASSERT_TRUE(eh.tangent_cone().divide(ef.tangent_cone()).has_value());
      }
    }
  }
}
