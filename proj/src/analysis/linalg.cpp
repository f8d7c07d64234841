#include "linalg.hpp"

#include "pencil/errors.hpp"

namespace pencil::analysis::detail {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const FieldElement inv = m[row][col].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<FieldElement>> solve(const Matrix& a, const std::vector<FieldElement>& b) {
  const std::size_t n = a.size();
  Matrix m = a;
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  const auto pivots = row_reduce(m, n);
  if (pivots.size() < n) return std::nullopt;
  std::vector<FieldElement> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(m[i][n]);
  return x;
}

namespace {

std::vector<FieldElement> coords_of(const FieldElement& c) {
  const auto q = algebra::NumberField::rationals();
  std::vector<FieldElement> out;
  for (const auto& r : c.coords()) out.emplace_back(q, r);
  return out;
}

// Coefficients x with target = sum x_j basis_j, if any.
std::optional<std::vector<Rational>> combination(const std::vector<FieldElement>& basis, const FieldElement& target) {
  const std::size_t n = static_cast<std::size_t>(target.field()->degree());
  const std::size_t k = basis.size();
  Matrix m(n, std::vector<FieldElement>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    const auto cj = coords_of(basis[j]);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cj[i];
  }
  const auto ct = coords_of(target);
  for (std::size_t i = 0; i < n; ++i) m[i][k] = ct[i];
  const auto pivots = row_reduce(m, k);
  for (std::size_t r = pivots.size(); r < n; ++r) {
    if (!m[r][k].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][k].rational_value();
  return x;
}

}  // namespace

std::vector<Rational> minimal_polynomial(const FieldElement& c) {
  const auto& k = c.field();
  std::vector<FieldElement> powers{FieldElement(k, 1)};
  for (int deg = 1; deg <= k->degree(); ++deg) {
    const FieldElement next = powers.back() * c;
    if (auto x = combination(powers, next)) {
      std::vector<Rational> out;
      for (const auto& v : *x) out.push_back(-v);
      out.emplace_back(1);
      return out;
    }
    powers.push_back(next);
  }
  throw AlgebraError("minimal polynomial search exceeded the field degree");
}

std::optional<std::vector<Rational>> express_in_powers(const FieldElement& value, const FieldElement& c) {
  const int n = c.field()->degree();
  std::vector<FieldElement> powers{FieldElement(c.field(), 1)};
  for (int i = 1; i < n; ++i) powers.push_back(powers.back() * c);
  if (static_cast<int>(minimal_polynomial(c).size()) - 1 != n) return std::nullopt;
  return combination(powers, value);
}

}  // namespace pencil::analysis::detail
