#pragma once

#include <vector>

#include "pencil/algebra/unipoly.hpp"

namespace pencil::algebra {

inline constexpr int kDefaultMaxFactorDegree = 36;

struct UniFactor {
  UniPoly poly;  // monic, irreducible over Q
  int multiplicity = 1;
};

struct UniFactorization {
  Rational unit;  // leading coefficient of the input
  std::vector<UniFactor> factors;  // sorted by (degree, coefficients)

  UniPoly expand() const;
};

// Irreducible factorization over Q (Zassenhaus: modular factorization,
// Hensel lifting, subset recombination). Throws LimitExceeded above
// `max_degree` and AlgebraError for zero or non-rational input.
UniFactorization factor_over_Q(const UniPoly& f, int max_degree = kDefaultMaxFactorDegree);

bool is_irreducible_over_Q(const UniPoly& f, int max_degree = kDefaultMaxFactorDegree);

struct RootField {
  FieldPtr field;
  FieldElement root;
};

// Q[t]/(m) together with the class of t. A linear m yields Q and its rational
// root. Throws AlgebraError when m is reducible, LimitExceeded above the bound.
RootField adjoin_root(const UniPoly& m, std::string generator = "t",
                      int max_degree = kDefaultMaxExtDegree);

}  // namespace pencil::algebra
