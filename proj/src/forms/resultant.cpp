#include "pencil/forms/resultant.hpp"

#include <utility>

namespace pencil::forms {

namespace {

using algebra::UniPoly;

// Coefficients of f(x, 1, z) as a polynomial in z: entry k is the K[x] part of z^k.
std::vector<UniPoly> z_coefficients(const Form& f) {
  std::vector<UniPoly> out(static_cast<std::size_t>(f.degree()) + 1, UniPoly(f.field(), "x"));
  for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(e[2])] += UniPoly::monomial(c, e[0], "x");
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// Fraction-free (Bareiss) determinant over K[x].
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m, const algebra::FieldPtr& k) {
  const std::size_t n = m.size();
  UniPoly prev = UniPoly::constant(FieldElement(k, 1), "x");
  bool negate = false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m[i][i].is_zero()) {
      std::size_t swap_row = i + 1;
      while (swap_row < n && m[swap_row][i].is_zero()) ++swap_row;
      if (swap_row == n) return UniPoly(k, "x");
      std::swap(m[i], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      for (std::size_t c = i + 1; c < n; ++c) {
        m[r][c] = (m[i][i] * m[r][c] - m[r][i] * m[i][c]).exact_divide(prev);
      }
    }
    prev = m[i][i];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

BinaryForm resultant_z(const Form& f, const Form& g) {
  if (!algebra::same_field(f.field(), g.field())) throw AlgebraError("mixed fields in resultant");
  if (f.is_zero() || g.is_zero()) throw AlgebraError("resultant of a zero form");
  // One constant leading coefficient keeps the result homogeneous of degree d1*d2.
  if (f.coeff({0, 0, f.degree()}).is_zero() && g.coeff({0, 0, g.degree()}).is_zero()) {
    throw ShearRequired("shear required: leading coefficients in z vanish");
  }
  const auto& k = f.field();
  const auto a = z_coefficients(f), b = z_coefficients(g);
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return BinaryForm(k, f.degree() * g.degree(), {FieldElement(k, 1)}, kXY);
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size, UniPoly(k, "x")));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) syl[r][r + i] = a[static_cast<std::size_t>(m - i)];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) syl[n + r][r + i] = b[static_cast<std::size_t>(n - i)];
  }
  const UniPoly det = bareiss_determinant(std::move(syl), k);
  return BinaryForm::homogenize(det, f.degree() * g.degree(), kXY);
}

Form resultant_wrt(const Form& f, const Form& g, int var) {
  // Permute so that `var` plays the role of z.
  std::array<int, 3> order{0, 1, 2};
  if (var != 2) std::swap(order[static_cast<std::size_t>(var)], order[2]);
  auto permute = [&](const Form& h) {
    Form out(h.field(), h.degree());
    for (const auto& [e, c] : h.terms()) out.add_term({e[order[0]], e[order[1]], e[order[2]]}, c);
    return out;
  };
  const BinaryForm r = resultant_z(permute(f), permute(g));
  Form out(f.field(), r.degree());
  for (int i = 0; i <= r.degree(); ++i) {
    if (r.coeff(i).is_zero()) continue;
    Exponent3 e{0, 0, 0};
    e[static_cast<std::size_t>(order[0])] = i;
    e[static_cast<std::size_t>(order[1])] = r.degree() - i;
    out.add_term(e, r.coeff(i));
  }
  return out;
}

}  // namespace pencil::forms
