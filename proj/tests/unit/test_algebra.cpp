#include <gtest/gtest.h>

#include <random>

#include "pencil/algebra/factor.hpp"
#include "pencil/algebra/number_field.hpp"
#include "pencil/algebra/unipoly.hpp"
#include "pencil/errors.hpp"

using namespace pencil;
using namespace pencil::algebra;

namespace {

FieldPtr omega_field() { return NumberField::create("w", {Rational(1), Rational(1), Rational(1)}); }

UniPoly q_poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return UniPoly::from_rationals(c);
}

FieldElement random_element(const FieldPtr& k, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < k->degree(); ++i) {
    c.push_back(make_rational(Integer(static_cast<long>(rng() % 21) - 10), Integer(static_cast<long>(rng() % 5) + 1)));
  }
  return FieldElement(k, c);
}

UniPoly random_poly(int degree, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng() % 13) - 6);
  if (c.back() == 0) c.back() = 1;
  return UniPoly::from_rationals(c);
}

// Brute-force rational root test: candidates p/q with p | a0 and q | an after
// clearing denominators.
bool has_rational_root(const UniPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.rational_value().get_den());
  std::vector<Integer> z;
  for (const auto& c : f.coeffs()) z.push_back(Rational(c.rational_value() * den).get_num());
  if (z.front() == 0) return true;
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d <= n; ++d) {
      if (n % d == 0) out.push_back(d);
    }
    return out;
  };
  for (const auto& p : divisors(z.front())) {
    for (const auto& q : divisors(z.back())) {
      for (int sign : {1, -1}) {
        const FieldElement r(NumberField::rationals(), make_rational(p * sign, q));
        if (f.evaluate(r).is_zero()) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST(FieldElement, InverseOfOmega) {
  const auto k = omega_field();
  const auto w = FieldElement::generator(k);
  // Extended Euclid on (t, t^2+t+1): t*(-1-t) = -t^2-t = 1 mod m.
  EXPECT_EQ(w.inverse(), FieldElement(k, {Rational(-1), Rational(-1)}));
  EXPECT_EQ(w.inverse().to_string(), "-w-1");
}

TEST(FieldElement, IdentitiesAndScalars) {
  const auto k = NumberField::create("a", {Rational(-2), Rational(0), Rational(1)});
  const auto a = FieldElement::generator(k);
  const FieldElement one(k, 1);
  EXPECT_EQ(a * one, a);
  const auto x = FieldElement(k, Rational(1, 2)) + a;
  EXPECT_EQ(x * FieldElement(k, 2), FieldElement(k, {Rational(1), Rational(2)}));
  EXPECT_EQ(a * a, FieldElement(k, 2));
}

TEST(FieldElement, ErrorsAreExplicit) {
  const auto k = omega_field();
  EXPECT_THROW(FieldElement(k).inverse(), AlgebraError);
  EXPECT_THROW(FieldElement(k, 1) / FieldElement(k), AlgebraError);
  const auto q = NumberField::rationals();
  EXPECT_THROW(FieldElement::generator(k) + FieldElement(q, 1), AlgebraError);
  EXPECT_THROW(NumberField::create("t", {Rational(-1), Rational(0), Rational(1)}), AlgebraError);
}

TEST(FieldElement, FieldAxiomsRandomized) {
  std::mt19937_64 rng(7);
  const std::vector<FieldPtr> fields = {
      NumberField::rationals(), omega_field(),
      NumberField::create("c", {Rational(-2), Rational(0), Rational(0), Rational(1)}),
      NumberField::create("s", {Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)})};
  int cases = 0;
  for (const auto& k : fields) {
    for (int i = 0; i < 300; ++i, ++cases) {
      const auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(a * b, b * a);
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
  EXPECT_GE(cases, 1000);
}

TEST(UniPoly, GcdExamples) {
  EXPECT_EQ(gcd(q_poly({-1, 0, 1}), q_poly({1, 2, 1})), q_poly({1, 1}));
  const auto f = q_poly({4, 0, 2});
  EXPECT_EQ(gcd(f, UniPoly()), f.monic());
  EXPECT_EQ(gcd(q_poly({27, 0, 0, 1}), q_poly({3, 1})), q_poly({3, 1}));
  EXPECT_TRUE(gcd(UniPoly(), UniPoly()).is_zero());
}

TEST(UniPoly, GcdPropertyRandomized) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_poly(static_cast<int>(rng() % 3) + 1, rng);
    const auto f = random_poly(static_cast<int>(rng() % 4), rng) * w;
    const auto g = random_poly(static_cast<int>(rng() % 4), rng) * w;
    const auto h = gcd(f, g);
    ASSERT_TRUE(h.divides(f));
    ASSERT_TRUE(h.divides(g));
    ASSERT_TRUE(w.divides(h)) << "common divisor " << w.to_string() << " of " << f.to_string() << ", "
                              << g.to_string();
  }
}

TEST(UniPoly, SquarefreePart) {
  // (t-1)^2 (t+2) -> (t-1)(t+2)
  const auto f = q_poly({-1, 1}) * q_poly({-1, 1}) * q_poly({2, 1});
  EXPECT_EQ(squarefree_part(f), q_poly({-2, 1, 1}));
  EXPECT_EQ(squarefree_part(q_poly({27, 0, 0, 1})), q_poly({27, 0, 0, 1}));
  const auto p = q_poly({1, 1});
  EXPECT_EQ(squarefree_part(p * p * p * p), p);
  EXPECT_THROW(squarefree_part(UniPoly()), AlgebraError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(2, rng);
    const auto b = random_poly(1, rng);
    const auto s = squarefree_part(a * a * b * b * b);
    EXPECT_EQ(gcd(s, s.derivative()).degree(), 0);
  }
}

TEST(Factor, Examples) {
  // mu^3 + 27 = (mu+3)(mu^2-3mu+9)
  const auto fac = factor_over_Q(q_poly({27, 0, 0, 1}).with_variable("mu"));
  ASSERT_EQ(fac.factors.size(), 2U);
  EXPECT_EQ(fac.factors[0].poly, q_poly({3, 1}));
  EXPECT_EQ(fac.factors[1].poly, q_poly({9, -3, 1}));
  EXPECT_EQ(fac.factors[0].poly.variable(), "mu");

  const auto two = factor_over_Q(q_poly({-1, 0, 1}));
  ASSERT_EQ(two.factors.size(), 2U);
  EXPECT_EQ(two.factors[0].poly, q_poly({-1, 1}));
  EXPECT_EQ(two.factors[1].poly, q_poly({1, 1}));

  EXPECT_TRUE(is_irreducible_over_Q(q_poly({9, -3, 1})));
}

TEST(Factor, HardIrreducibles) {
  // Reducible modulo every prime.
  EXPECT_TRUE(is_irreducible_over_Q(q_poly({1, 0, 0, 0, 1})));
  EXPECT_TRUE(is_irreducible_over_Q(q_poly({1, 0, -10, 0, 1})));
  const auto prod = q_poly({1, 0, 0, 0, 1}) * q_poly({1, 0, -10, 0, 1}) * q_poly({-2, 0, 1});
  const auto fac = factor_over_Q(prod);
  EXPECT_EQ(fac.factors.size(), 3U);
  EXPECT_EQ(fac.expand(), prod);
}

TEST(Factor, CyclotomicSplittingOfDegree36) {
  // t^36 - 1 = prod over d | 36 of Phi_d; the divisors give 9 factors with
  // degrees phi(d).
  std::vector<long> c(37, 0);
  c[0] = -1;
  c[36] = 1;
  std::vector<Rational> r(c.begin(), c.end());
  const auto f = UniPoly::from_rationals(r);
  const auto fac = factor_over_Q(f);
  std::vector<int> degrees;
  for (const auto& x : fac.factors) degrees.push_back(x.poly.degree());
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 2, 2, 2, 4, 6, 6, 12}));
  EXPECT_EQ(fac.expand(), f);
}

TEST(Factor, MultiplicitiesAndBounds) {
  const auto a = q_poly({-3, 0, 1});
  const auto b = q_poly({5, 2});
  const auto f = a * a * a * b;
  const auto fac = factor_over_Q(f);
  ASSERT_EQ(fac.factors.size(), 2U);
  EXPECT_EQ(fac.factors[0].multiplicity, 1);
  EXPECT_EQ(fac.factors[1].multiplicity, 3);
  EXPECT_EQ(fac.unit, Rational(2));
  EXPECT_EQ(fac.expand(), f);

  std::vector<Rational> big(38, Rational(0));
  big[0] = 1;
  big[37] = 1;
  EXPECT_THROW(factor_over_Q(UniPoly::from_rationals(big)), LimitExceeded);
  EXPECT_THROW(factor_over_Q(UniPoly()), AlgebraError);
}

TEST(Factor, RemultipliesRandomized) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    UniPoly f = UniPoly::from_rationals({Rational(static_cast<long>(rng() % 5) + 1)});
    const int parts = static_cast<int>(rng() % 4) + 1;
    for (int j = 0; j < parts; ++j) f *= random_poly(static_cast<int>(rng() % 4) + 1, rng);
    if (f.is_zero()) continue;
    const auto fac = factor_over_Q(f);
    ASSERT_EQ(fac.expand(), f) << f.to_string();
    for (const auto& x : fac.factors) {
      ASSERT_TRUE(x.poly.leading().is_one());
      if (x.poly.degree() >= 2 && x.poly.degree() <= 3) {
        ASSERT_FALSE(has_rational_root(x.poly)) << x.poly.to_string();
      }
    }
  }
}

TEST(AdjoinRoot, Examples) {
  const auto omega = adjoin_root(q_poly({1, 1, 1}), "w");
  EXPECT_EQ(omega.field->degree(), 2);
  const auto w = omega.root;
  EXPECT_TRUE((w * w + w + FieldElement(omega.field, 1)).is_zero());

  const auto q = adjoin_root(q_poly({0, 1}));
  EXPECT_TRUE(q.field->is_rationals());
  EXPECT_TRUE(q.root.is_zero());

  const auto hesse = adjoin_root(q_poly({9, -3, 1}));
  EXPECT_EQ(hesse.field->degree(), 2);
  EXPECT_THROW(adjoin_root(q_poly({-1, 0, 1})), AlgebraError);
  EXPECT_THROW(adjoin_root(q_poly({3, 1, 0, 0, 0, 0, 0, 1})), LimitExceeded);
}

TEST(FieldElement, DisplayLocator) {
  const auto k = omega_field();
  EXPECT_EQ(format_approx(FieldElement::generator(k).approx()), "-0.500000+0.866025i");
}
