#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "pencil/algebra/rational.hpp"

namespace pencil::algebra {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

inline constexpr int kDefaultMaxExtDegree = 6;

// Q or a simple extension Q[t]/(m) with m monic and irreducible over Q.
class NumberField {
 public:
  // Shared instance of Q (minimal polynomial t).
  static FieldPtr rationals();

  // `min_poly` is low-to-high and must be monic. Irreducibility is certified by
  // factoring over Q; degree 1 collapses to rationals().
  static FieldPtr create(std::string generator, std::vector<Rational> min_poly,
                         int max_degree = kDefaultMaxExtDegree);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  bool is_rationals() const { return degree() == 1; }
  const std::string& generator_name() const { return generator_; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }

  // Structural identity: same minimal polynomial.
  bool same_as(const NumberField& other) const;

  // Rendered as a polynomial in the generator name, e.g. "t^2+t+1".
  std::string min_poly_string() const;

  // A fixed complex root of the minimal polynomial, for display only.
  std::complex<double> approx_generator() const { return approx_root_; }

 private:
  NumberField(std::string generator, std::vector<Rational> min_poly);

  std::string generator_;
  std::vector<Rational> min_poly_;
  std::complex<double> approx_root_{0.0, 0.0};
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || a->same_as(*b);
}

// Element of a NumberField in the power basis 1, t, ..., t^{D-1}.
class FieldElement {
 public:
  FieldElement();  // zero of Q
  explicit FieldElement(FieldPtr field);
  FieldElement(FieldPtr field, const Rational& value);
  FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}
  // Coordinates longer than the degree are reduced modulo the minimal polynomial.
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Throws AlgebraError unless is_rational().
  Rational rational_value() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  // Extended Euclid against the minimal polynomial.
  FieldElement inverse() const;
  FieldElement pow(unsigned exponent) const;

  // Embeds a rational element into `target`; identity when fields agree.
  FieldElement lift_to(const FieldPtr& target) const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  std::string to_string() const;
  std::complex<double> approx() const;

 private:
  void check_same_field(const FieldElement& other) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

// Formats a complex number with six decimals, e.g. "0.500000-0.866025i".
std::string format_approx(std::complex<double> value);

}  // namespace pencil::algebra
