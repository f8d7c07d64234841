// Form gcd through the dehomogenization y = 1: gcd in K[x][z] by the primitive
// polynomial remainder sequence, then re-homogenized with the common power of y.

#include <algorithm>

#include "pencil/algebra/unipoly.hpp"
#include "pencil/errors.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::forms {

namespace {

using algebra::UniPoly;

// Polynomial in z with coefficients in K[x]; index = power of z.
using ZxPoly = std::vector<UniPoly>;

void trim(ZxPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int zdeg(const ZxPoly& p) { return static_cast<int>(p.size()) - 1; }

ZxPoly dehomogenize_y(const Form& f) {
  ZxPoly out(static_cast<std::size_t>(f.degree()) + 1, UniPoly(f.field(), "x"));
  for (const auto& [e, c] : f.terms()) {
    out[static_cast<std::size_t>(e[2])] += UniPoly::monomial(c, e[0], "x");
  }
  trim(out);
  return out;
}

int y_valuation(const Form& f) {
  int v = f.degree();
  for (const auto& [e, c] : f.terms()) v = std::min(v, e[1]);
  return v;
}

UniPoly content(const ZxPoly& p) {
  UniPoly g(p.front().field(), "x");
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

ZxPoly divide_coeffs(const ZxPoly& p, const UniPoly& c) {
  ZxPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.exact_divide(c));
  return out;
}

ZxPoly primitive_part(const ZxPoly& p) { return divide_coeffs(p, content(p)); }

// Pseudo-remainder of a by b in z.
ZxPoly prem(ZxPoly a, const ZxPoly& b) {
  const UniPoly& lb = b.back();
  while (!a.empty() && zdeg(a) >= zdeg(b)) {
    const std::size_t shift = static_cast<std::size_t>(zdeg(a) - zdeg(b));
    const UniPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

ZxPoly gcd_zx(ZxPoly a, ZxPoly b) {
  const UniPoly c = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  while (!b.empty() && zdeg(b) > 0) {
    ZxPoly r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive_part(r);
  }
  if (!b.empty()) return {c};  // b is a unit in z
  ZxPoly out = a;
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace

Form gcd(const Form& f, const Form& g) {
  if (!algebra::same_field(f.field(), g.field())) throw AlgebraError("mixed fields in form gcd");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const int vy = std::min(y_valuation(f), y_valuation(g));
  const ZxPoly h = gcd_zx(dehomogenize_y(f), dehomogenize_y(g));
  int total = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!h[k].is_zero()) total = std::max(total, h[k].degree() + static_cast<int>(k));
  }
  Form out(f.field(), total + vy);
  for (std::size_t k = 0; k < h.size(); ++k) {
    for (int i = 0; i <= h[k].degree(); ++i) {
      const FieldElement c = h[k].coeff(i);
      if (c.is_zero()) continue;
      const int kz = static_cast<int>(k);
      out.add_term({i, total - i - kz + vy, kz}, c);
    }
  }
  return out.monic();
}

}  // namespace pencil::forms
