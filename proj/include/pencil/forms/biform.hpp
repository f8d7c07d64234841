#pragma once

#include <map>
#include <string>

#include "pencil/forms/binary_form.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::forms {

// Exponents (lam, mu, x, y, z).
using Exponent5 = Exponent<5>;

// Bihomogeneous polynomial of bidegree (a, b) in (lam, mu) x (x, y, z).
class BiForm {
 public:
  explicit BiForm(FieldPtr field = algebra::NumberField::rationals(), int lam_degree = 0, int xyz_degree = 0);

  static BiForm from_form(const Form& f);
  static BiForm from_binary(const BinaryForm& p);
  // lam*f1 + mu*f2
  static BiForm pencil(const Form& f1, const Form& f2);

  const FieldPtr& field() const { return field_; }
  int lam_degree() const { return lam_degree_; }
  int xyz_degree() const { return xyz_degree_; }
  const TermMap<5>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent5& e, const FieldElement& c);

  BiForm operator-() const;
  BiForm& operator+=(const BiForm& other);
  BiForm& operator-=(const BiForm& other);
  BiForm& operator*=(const BiForm& other);
  BiForm scaled(const FieldElement& c) const;

  // Partial derivative in x, y or z.
  BiForm derivative(int xyz_index) const;
  Form specialize(const FieldElement& lam, const FieldElement& mu) const;
  // Form coefficient of lam^i mu^(a-i).
  Form lam_component(int i) const;
  // Binary-form coefficient of each (x,y,z) monomial.
  std::map<Exponent3, BinaryForm, ExponentGreater<3>> xyz_coefficients() const;

  // Exact division by lam (resp. mu); throws AlgebraError if not divisible.
  BiForm divide_by_lam() const;
  BiForm divide_by_mu() const;

  int z_degree() const;
  // Terms carrying z^k, with the z power removed: bidegree (a, b-k).
  BiForm z_slice(int k) const;
  // Multiplied by z^k.
  BiForm times_z(int k) const;

  BiForm lift_to(const FieldPtr& target) const;

  bool operator==(const BiForm& other) const;
  bool operator!=(const BiForm& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void check_compatible(const BiForm& other) const;

  FieldPtr field_;
  int lam_degree_;
  int xyz_degree_;
  TermMap<5> terms_;
};

inline BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
inline BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
inline BiForm operator*(BiForm a, const BiForm& b) { return a *= b; }

// Hessian of lam*f1 + mu*f2 expanded symbolically: bidegree (3, 3d-6).
BiForm pencil_hessian(const Form& f1, const Form& f2);

struct PseudoDivision {
  BiForm quotient;
  BiForm remainder;
  int lead_power = 0;  // e in L^e h = q f + r
  BinaryForm lead;     // L, coefficient of z^deg(f) in f
};

// Pseudo-division in z: L^e h = q f + r with deg_z r < deg f. `f` must carry
// a z^deg(f) term whose coefficient is a nonzero binary form.
PseudoDivision pseudo_divide_z(const BiForm& h, const BiForm& f);

}  // namespace pencil::forms
