#pragma once

#include <vector>

#include "pencil/analysis/fibers.hpp"
#include "pencil/forms/projective.hpp"

namespace pencil::analysis {

// One Galois orbit of base points, represented by a canonical member.
struct BasePoint {
  forms::ProjPoint point;
  int mult = 1;              // multiplicity on the generic fiber
  BinaryForm tangent_cone;   // lowest local component of f1, chart of forms::chart_at
  int int_mult = 1;          // intersection multiplicity of f1 and f2 at each member
  int orbit_size = 1;
};

// Base locus of a rational pencil. Throws InputError for non-rational
// generators, LimitExceeded when an extension degree passes the bound or every
// shear attempt is degenerate.
std::vector<BasePoint> base_locus(const Pencil& p, const Config& cfg = {});

// |B|: number of distinct base points over the algebraic closure.
int distinct_count(const std::vector<BasePoint>& points);
// Sum of intersection multiplicities (d^2 by Bezout).
int intersection_total(const std::vector<BasePoint>& points);

// Point with coordinates rewritten over Q(a), a = its first non-rational
// coordinate, when that coordinate generates the field.
forms::ProjPoint canonical_point(const forms::ProjPoint& p);

struct SpecialFiber {
  FiberParam param;
  Form fiber;
  FiberClass cls;
};

struct SpecialLocus {
  BinaryForm rho;                             // radical of the divisibility locus
  std::vector<forms::BinaryFactor> factors;   // irreducible factors of rho over Q
  std::vector<SpecialFiber> fibers;           // one per factor

  int special_count() const;  // s, conjugates counted
  int cr_count() const;       // k, conjugates counted
};

// Fibers dividing their Hessian, found by pseudo-dividing the Hessian family
// by lam*f1 + mu*f2 in z and taking the gcd of the remainder coefficients.
// Throws InputError for non-rational generators or when every fiber divides its
// Hessian, InconsistencyError when a root fiber fails the direct test.
SpecialLocus special_locus(const Pencil& p, const Config& cfg = {});

// Parameter of each root of an irreducible binary form over Q.
FiberParam root_param(const BinaryForm& factor, const Config& cfg = {});

}  // namespace pencil::analysis
