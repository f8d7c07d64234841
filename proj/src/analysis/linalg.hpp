#pragma once

#include <optional>
#include <vector>

#include "pencil/algebra/number_field.hpp"

namespace pencil::analysis::detail {

using algebra::FieldElement;
using algebra::Rational;
using Matrix = std::vector<std::vector<FieldElement>>;

// Reduced row echelon form over the entries' field, pivoting only in the first
// `ncols` columns; the remaining columns ride along as right-hand sides.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols);

// Unique solution of a square system, std::nullopt when singular.
std::optional<std::vector<FieldElement>> solve(const Matrix& a, const std::vector<FieldElement>& b);

// Monic minimal polynomial over Q of c, low-to-high.
std::vector<Rational> minimal_polynomial(const FieldElement& c);

// Rational x with value = sum x_j c^j, j < [K:Q], or std::nullopt when c does
// not generate the field.
std::optional<std::vector<Rational>> express_in_powers(const FieldElement& value, const FieldElement& c);

}  // namespace pencil::analysis::detail
