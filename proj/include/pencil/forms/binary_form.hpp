#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pencil/algebra/factor.hpp"
#include "pencil/algebra/unipoly.hpp"

namespace pencil::forms {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::Rational;
using algebra::UniPoly;

using VariablePair = std::array<std::string, 2>;
inline const VariablePair kLamMu = {"lam", "mu"};
inline const VariablePair kXY = {"x", "y"};

// Homogeneous polynomial in two variables (s, t): coeff(i) multiplies
// s^i t^(degree-i). Used for parameter forms in (lam, mu) and for tangent
// cones and resultants in (x, y).
class BinaryForm {
 public:
  explicit BinaryForm(FieldPtr field = algebra::NumberField::rationals(), int degree = 0,
                      VariablePair names = kLamMu);
  BinaryForm(FieldPtr field, int degree, std::vector<FieldElement> coeffs, VariablePair names = kLamMu);

  // Homogenizes p(s) (the form at t = 1) to the requested degree >= deg p.
  static BinaryForm homogenize(const UniPoly& p, int degree, VariablePair names = kLamMu);
  // a*s + b*t
  static BinaryForm linear(const FieldElement& a, const FieldElement& b, VariablePair names = kLamMu);
  static BinaryForm from_rationals(const std::vector<Rational>& coeffs, VariablePair names = kLamMu);

  const FieldPtr& field() const { return field_; }
  int degree() const { return degree_; }
  const VariablePair& names() const { return names_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int i) const;
  bool is_zero() const;

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& other);
  BinaryForm& operator-=(const BinaryForm& other);
  BinaryForm& operator*=(const BinaryForm& other);
  BinaryForm scaled(const FieldElement& c) const;
  BinaryForm pow(unsigned exponent) const;

  // Form at t = 1, as a polynomial in s.
  UniPoly dehomogenize() const;
  // Exponent of t dividing the form (the multiplicity of the root [1:0]).
  int t_valuation() const;

  std::optional<BinaryForm> divide(const BinaryForm& divisor) const;
  FieldElement evaluate(const FieldElement& s, const FieldElement& t) const;
  // s -> a*s + b*t, t -> c*s + d*t
  BinaryForm substitute(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                        const FieldElement& d) const;
  BinaryForm lift_to(const FieldPtr& target) const;
  BinaryForm with_names(VariablePair names) const;

  FieldElement leading_coeff() const;
  BinaryForm monic() const;
  // Over Q: integer coefficients with gcd 1 and positive graded-lex leading
  // coefficient. Other fields: monic.
  BinaryForm normalized() const;
  // Product of the distinct irreducible factors, normalized.
  BinaryForm radical() const;

  bool operator==(const BinaryForm& other) const;
  bool operator!=(const BinaryForm& other) const { return !(*this == other); }
  // Equal up to a nonzero scalar.
  bool proportional_to(const BinaryForm& other) const;

  std::string to_string() const;

 private:
  void trim_check(const BinaryForm& other) const;

  FieldPtr field_;
  int degree_;
  VariablePair names_;
  std::vector<FieldElement> coeffs_;  // size degree+1
};

inline BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
inline BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
inline BinaryForm operator*(BinaryForm a, const BinaryForm& b) { return a *= b; }

// Normalized gcd; gcd(f, 0) = normalized(f).
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

struct BinaryFactor {
  BinaryForm form;  // irreducible over Q, normalized
  int multiplicity = 1;
};

// Irreducible factorization over Q; the linear factor t (root [1:0]) appears
// first when present, then factors ordered by degree and coefficients.
std::vector<BinaryFactor> factor_binary(const BinaryForm& f,
                                        int max_degree = algebra::kDefaultMaxFactorDegree);

}  // namespace pencil::forms
