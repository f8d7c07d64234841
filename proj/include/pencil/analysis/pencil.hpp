#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pencil/forms/biform.hpp"
#include "pencil/forms/binary_form.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::analysis {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::Rational;
using forms::BiForm;
using forms::BinaryForm;
using forms::Form;

struct Config {
  std::uint64_t seed = 0;
  int max_ext_degree = algebra::kDefaultMaxExtDegree;
  int max_factor_degree = algebra::kDefaultMaxFactorDegree;
  int shear_retries = 20;
  int samples = 10;  // random parameters per sampled check
  int phantom_special = 0;  // fictitious special, not CR, fibers added to s; exercises the verifier
};

// A point [lam:mu] of P^1. Rational parameters are normalized with first
// nonzero coordinate 1; algebraic ones are [1:a] where a is a root of the
// irreducible factor `orbit_form` (in lam, mu) and generates the field.
struct FiberParam {
  FieldElement lam;
  FieldElement mu;
  std::optional<BinaryForm> orbit_form;  // set for non-rational parameters

  static FiberParam rational(const Rational& lam, const Rational& mu);
  // Root of an irreducible binary form over Q, not divisible by lam.
  static FiberParam algebraic(const BinaryForm& factor, const FieldElement& root);

  const FieldPtr& field() const { return lam.field(); }
  bool is_rational() const { return !orbit_form.has_value(); }
  // Number of conjugate parameters represented (degree of the factor).
  int orbit_size() const { return orbit_form ? orbit_form->degree() : 1; }
  // Irreducible binary form over Q vanishing at the parameter.
  BinaryForm factor() const;
  std::string to_string() const;
};

class Pencil {
 public:
  // Throws InputError when the generators differ in degree or field, have
  // degree below 2, or share a factor (which includes proportional generators).
  Pencil(Form f1, Form f2);

  const Form& f1() const { return f1_; }
  const Form& f2() const { return f2_; }
  int degree() const { return f1_.degree(); }
  const FieldPtr& field() const { return f1_.field(); }
  bool is_rational() const { return f1_.is_rational() && f2_.is_rational(); }

  Form fiber(const FieldElement& lam, const FieldElement& mu) const;
  Form fiber(const FiberParam& t) const { return fiber(t.lam, t.mu); }
  // lam*f1 + mu*f2 as a biform of bidegree (1, d).
  BiForm generic() const { return BiForm::pencil(f1_, f2_); }
  // Hessian family H(lam, mu).
  BiForm hessian_family() const { return forms::pencil_hessian(f1_, f2_); }

 private:
  Form f1_;
  Form f2_;
};

// The other root of a quadratic orbit, expressed in the field of `t`.
// Throws AlgebraError unless t.orbit_size() == 2.
FiberParam quadratic_conjugate(const FiberParam& t);

// The field of `a` when `b` is rational and vice versa; nullptr when both are
// non-rational fields that differ.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace pencil::analysis
