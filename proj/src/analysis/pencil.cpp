#include "pencil/analysis/pencil.hpp"

#include "pencil/errors.hpp"

namespace pencil::analysis {

FiberParam FiberParam::rational(const Rational& lam, const Rational& mu) {
  const auto q = algebra::NumberField::rationals();
  if (lam == 0 && mu == 0) throw InputError("fiber parameter [0:0]");
  if (lam == 0) return {FieldElement(q, 0), FieldElement(q, 1), std::nullopt};
  return {FieldElement(q, 1), FieldElement(q, Rational(mu / lam)), std::nullopt};
}

FiberParam FiberParam::algebraic(const BinaryForm& factor, const FieldElement& root) {
  if (factor.degree() < 2) throw AlgebraError("algebraic parameter needs a factor of degree at least 2");
  return {FieldElement(root.field(), 1), root, factor.normalized()};
}

BinaryForm FiberParam::factor() const {
  if (orbit_form) return *orbit_form;
  const auto q = algebra::NumberField::rationals();
  // mu0*lam - lam0*mu vanishes at [lam0:mu0].
  return BinaryForm(q, 1, {-lam, mu}, forms::kLamMu).normalized();
}

std::string FiberParam::to_string() const { return "[" + lam.to_string() + ":" + mu.to_string() + "]"; }

Pencil::Pencil(Form f1, Form f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (!algebra::same_field(f1_.field(), f2_.field())) {
    const FieldPtr k = common_field(f1_.field(), f2_.field());
    if (!k) throw InputError("generators are defined over different fields");
    f1_ = f1_.lift_to(k);
    f2_ = f2_.lift_to(k);
  }
  if (f1_.degree() != f2_.degree()) {
    throw InputError("generators have different degrees " + std::to_string(f1_.degree()) + " and " +
                     std::to_string(f2_.degree()));
  }
  if (f1_.is_zero() || f2_.is_zero()) throw InputError("a generator is the zero form");
  if (f1_.degree() < 2) throw InputError("pencil degree must be at least 2");
  if (gcd(f1_, f2_).degree() > 0) throw InputError("generators share a factor");
}

Form Pencil::fiber(const FieldElement& lam, const FieldElement& mu) const {
  FieldPtr k = common_field(lam.field(), mu.field());
  if (!k) throw AlgebraError("fiber parameter mixes fields");
  k = common_field(k, field());
  if (!k) throw AlgebraError("fiber parameter and pencil live in different fields");
  return f1_.lift_to(k).scaled(lam.lift_to(k)) + f2_.lift_to(k).scaled(mu.lift_to(k));
}

FiberParam quadratic_conjugate(const FiberParam& t) {
  if (t.orbit_size() != 2) throw AlgebraError("parameter is not a root of a quadratic factor");
  // m(1, mu) = c0 mu^2 + c1 mu + c2, root sum -c1/c0.
  const BinaryForm& m = *t.orbit_form;
  const FieldElement c0 = m.coeff(0).lift_to(t.field()), c1 = m.coeff(1).lift_to(t.field());
  FiberParam out = t;
  out.mu = -(c1 / c0) - t.mu;
  return out;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (algebra::same_field(a, b)) return a;
  if (a->is_rationals()) return b;
  if (b->is_rationals()) return a;
  return nullptr;
}

}  // namespace pencil::analysis
