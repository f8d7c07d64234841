#pragma once

#include <optional>
#include <vector>

#include "pencil/analysis/locus.hpp"

namespace pencil::analysis {

// H(t) = c * F(t) at a special parameter t.
struct BoundaryCondition {
  FieldElement lam;
  FieldElement mu;
  Form c;  // degree 2d-6
};

// H(lam, mu) = A * f1 + B * f2 with A, B of bidegree (3, 2d-6).
struct NoetherDecomposition {
  BiForm noetherA;
  BiForm noetherB;
  bool unique = true;
  int free_variables = 0;
  // Set when boundary conditions were imposed: A(t) = lam c, B(t) = mu c at
  // every listed parameter.
  std::optional<bool> boundary_satisfied;
};

// Solves the linear system coefficientwise in (lam, mu). Free variables are
// set to zero, or, given at least four boundary conditions with distinct
// parameters over one field, interpolated so that the first four hold.
// Throws InputError for d < 3, InconsistencyError when no solution exists.
NoetherDecomposition noether_decomposition(const Pencil& p, const std::vector<BoundaryCondition>& boundary = {});

// [1:0] and [0:1] when special, then the remaining special parameters.
// Quadratic orbits contribute both roots; parameters over a second
// non-rational field are skipped.
std::vector<BoundaryCondition> boundary_from_locus(const Pencil& p, const SpecialLocus& locus);

// H = C (p lam f1 + q mu f2) for a pencil whose generators are CR fibers.
struct HessianFactorization {
  Form C;
  BinaryForm p;
  BinaryForm q;
  FieldElement u;
  FieldElement v;
  Form X;
  Form Y;
  BiForm D;  // A / lam
  BiForm E;  // B / mu
  BinaryForm r;  // (p - q) lam mu, normalized
  bool r_matches_locus = false;
};

// Throws InputError when the generators are not both CR or fewer than four
// boundary parameters are available, InconsistencyError when the
// decomposition does not take the expected shape.
HessianFactorization hessian_factorization(const Pencil& p, const SpecialLocus& locus);

}  // namespace pencil::analysis
