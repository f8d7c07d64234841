#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "pencil/forms/binary_form.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::forms {

using Mat3 = std::array<std::array<FieldElement, 3>, 3>;

Mat3 identity_matrix(const FieldPtr& field);
FieldElement determinant(const Mat3& m);
// Throws AlgebraError for a singular matrix.
Mat3 inverse(const Mat3& m);
Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 lift_to(const Mat3& m, const FieldPtr& target);

// Invertible integer matrix with entries in [-bound, bound], from `rng`.
Mat3 random_integer_matrix(std::mt19937_64& rng, int bound = 10);

// f o T: substitutes (x, y, z) -> T (x, y, z). Throws for singular T.
Form shear(const Form& f, const Mat3& t);

// Point of P^2 with canonical representative (first nonzero coordinate 1).
class ProjPoint {
 public:
  explicit ProjPoint(std::array<FieldElement, 3> coords);

  const std::array<FieldElement, 3>& coords() const { return coords_; }
  const FieldPtr& field() const { return coords_[0].field(); }
  ProjPoint lift_to(const FieldPtr& target) const;
  bool operator==(const ProjPoint& other) const { return coords_ == other.coords_; }
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> coords_;
};

ProjPoint apply(const Mat3& t, const ProjPoint& p);

// F* = sum_i F^(i) after moving P to [0:0:1] and setting z = 1.
struct LocalExpansion {
  std::vector<BinaryForm> components;  // index = total degree in (x, y)
  int mult = 0;                        // least index with a nonzero component
  Mat3 chart;                          // chart * [0:0:1] = P

  const BinaryForm& tangent_cone() const { return components[static_cast<std::size_t>(mult)]; }
  // All of F* sits in one degree: F is a union of lines through P.
  bool is_cone_at_point() const;
};

// Projective change sending [0:0:1] to P (identity when P = [0:0:1]).
Mat3 chart_at(const ProjPoint& p);

// Expansion of f at p; the form is lifted to the point's field when rational.
// Throws InputError for the zero form.
LocalExpansion local_expansion(const Form& f, const ProjPoint& p);
// Same chart for every form examined at p, so tangent cones are comparable.
LocalExpansion local_expansion(const Form& f, const ProjPoint& p, const Mat3& chart);

// Re-homogenized sum of the components: recovers f o chart.
Form recompose(const LocalExpansion& e, int degree);

}  // namespace pencil::forms
