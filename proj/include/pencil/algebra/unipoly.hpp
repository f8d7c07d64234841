#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pencil/algebra/number_field.hpp"

namespace pencil::algebra {

// Dense univariate polynomial over a NumberField, coefficients low-to-high.
// The stored vector never ends in a zero coefficient.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr field = NumberField::rationals(), std::string variable = "t");
  UniPoly(FieldPtr field, std::vector<FieldElement> coeffs, std::string variable = "t");

  static UniPoly from_rationals(const std::vector<Rational>& coeffs, std::string variable = "t");
  static UniPoly constant(const FieldElement& c, std::string variable = "t");
  // c * variable^degree
  static UniPoly monomial(const FieldElement& c, int degree, std::string variable = "t");

  const FieldPtr& field() const { return field_; }
  const std::string& variable() const { return variable_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(int i) const;
  FieldElement leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly scaled(const FieldElement& c) const;

  // Euclidean division; throws AlgebraError on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  // Throws AlgebraError when the division leaves a remainder.
  UniPoly exact_divide(const UniPoly& divisor) const;
  bool divides(const UniPoly& other) const;

  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement evaluate(const FieldElement& at) const;
  UniPoly lift_to(const FieldPtr& target) const;
  UniPoly with_variable(std::string variable) const;

  bool operator==(const UniPoly& other) const;
  bool operator!=(const UniPoly& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  void trim();
  void check_field(const UniPoly& other) const;

  FieldPtr field_;
  std::string variable_;
  std::vector<FieldElement> coeffs_;
};

inline UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
inline UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
inline UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;
  UniPoly t;    // s*f + t*g = gcd
};
ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g);

// f / gcd(f, f'), monic. Throws AlgebraError on the zero polynomial.
UniPoly squarefree_part(const UniPoly& f);

// Yun's decomposition: f = lc * prod a_i^i, a_i monic squarefree and coprime.
// Entry i-1 holds a_i (possibly 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

}  // namespace pencil::algebra
