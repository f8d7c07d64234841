#pragma once

#include <optional>
#include <string>

#include "pencil/forms/terms.hpp"

namespace pencil::forms {

using Exponent3 = Exponent<3>;

inline constexpr std::array<const char*, 3> kXYZ = {"x", "y", "z"};

// Homogeneous polynomial in x, y, z. The degree is carried explicitly, so the
// zero form of any degree is representable.
class Form {
 public:
  explicit Form(FieldPtr field = algebra::NumberField::rationals(), int degree = 0);

  static Form monomial(const FieldElement& c, const Exponent3& e);
  static Form constant(const FieldElement& c) { return monomial(c, {0, 0, 0}); }
  // x, y or z for index 0, 1, 2.
  static Form variable(const FieldPtr& field, int index);
  // a*x + b*y + c*z
  static Form linear(const FieldElement& a, const FieldElement& b, const FieldElement& c);

  const FieldPtr& field() const { return field_; }
  int degree() const { return degree_; }
  const TermMap<3>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coeff(const Exponent3& e) const;
  // Adds c * x^e; e must have the form's degree.
  void add_term(const Exponent3& e, const FieldElement& c);

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Form& other);
  Form scaled(const FieldElement& c) const;
  Form pow(unsigned exponent) const;

  // Quotient when `divisor` divides this form exactly, std::nullopt otherwise.
  std::optional<Form> divide(const Form& divisor) const;
  bool divisible_by(const Form& divisor) const { return divide(divisor).has_value(); }

  Form derivative(int index) const;
  FieldElement evaluate(const std::array<FieldElement, 3>& point) const;
  Form lift_to(const FieldPtr& target) const;
  bool is_rational() const;

  // Leading coefficient in graded-lex order (zero for the zero form).
  FieldElement leading_coeff() const;
  // Scaled so the graded-lex leading coefficient is 1.
  Form monic() const;

  bool operator==(const Form& other) const;
  bool operator!=(const Form& other) const { return !(*this == other); }

  // Canonical text: graded-lex, explicit ^ powers, e.g. "x^3+y^3-6*x*y*z".
  std::string to_string() const;

 private:
  void check_compatible(const Form& other, bool same_degree) const;

  FieldPtr field_;
  int degree_;
  TermMap<3> terms_;
};

inline Form operator+(Form a, const Form& b) { return a += b; }
inline Form operator-(Form a, const Form& b) { return a -= b; }
inline Form operator*(Form a, const Form& b) { return a *= b; }

// Determinant of the matrix of second partials; degree 3d-6. Returns the zero
// form (degree max(3d-6, 0)) when it vanishes identically.
Form hessian(const Form& f);

// Greatest common divisor of two forms, normalized monic in graded-lex.
// gcd(f, 0) = monic(f).
Form gcd(const Form& f, const Form& g);

// F / gcd(F, F_x, F_y, F_z): the reduced curve with the same components.
Form reduced(const Form& f);

// Renders a coefficient-times-monomial stream; shared with BiForm.
std::string render_terms(const std::vector<std::pair<FieldElement, std::string>>& terms);

}  // namespace pencil::forms
