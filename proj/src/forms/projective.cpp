#include "pencil/forms/projective.hpp"

#include "pencil/errors.hpp"

namespace pencil::forms {

Mat3 identity_matrix(const FieldPtr& field) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = FieldElement(field, i == j ? 1 : 0);
  }
  return m;
}

FieldElement determinant(const Mat3& m) { return determinant3(m); }

Mat3 inverse(const Mat3& m) {
  const FieldElement det = determinant(m);
  if (det.is_zero()) throw AlgebraError("singular coordinate change");
  const FieldElement inv = det.inverse();
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Adjugate: cofactor of (j, i).
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv;
    }
  }
  return out;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      FieldElement acc(a[0][0].field());
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

Mat3 lift_to(const Mat3& m, const FieldPtr& target) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m[i][j].lift_to(target);
  }
  return out;
}

Mat3 random_integer_matrix(std::mt19937_64& rng, int bound) {
  const auto q = algebra::NumberField::rationals();
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  while (true) {
    Mat3 m;
    for (auto& row : m) {
      for (auto& x : row) x = FieldElement(q, static_cast<long>(rng() % span) - bound);
    }
    if (!determinant(m).is_zero()) return m;
  }
}

Form shear(const Form& f, const Mat3& t) {
  FieldPtr k = f.field();
  if (k->is_rationals()) k = t[0][0].field();
  const Mat3 tk = lift_to(t, k);
  if (determinant(tk).is_zero()) throw AlgebraError("singular coordinate change");
  const Form fk = f.lift_to(k);
  std::array<std::vector<Form>, 3> powers;
  for (int r = 0; r < 3; ++r) {
    const Form lin = Form::linear(tk[r][0], tk[r][1], tk[r][2]);
    powers[r].push_back(Form::constant(FieldElement(k, 1)));
    for (int e = 1; e <= f.degree(); ++e) powers[r].push_back(powers[r].back() * lin);
  }
  Form out(k, f.degree());
  for (const auto& [e, c] : fk.terms()) {
    out += (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]).scaled(c);
  }
  return out;
}

ProjPoint::ProjPoint(std::array<FieldElement, 3> coords) : coords_(std::move(coords)) {
  int first = -1;
  for (int i = 0; i < 3; ++i) {
    if (!coords_[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first < 0) throw AlgebraError("projective point with all coordinates zero");
  const FieldElement inv = coords_[first].inverse();
  for (auto& c : coords_) c *= inv;
}

ProjPoint ProjPoint::lift_to(const FieldPtr& target) const {
  return ProjPoint({coords_[0].lift_to(target), coords_[1].lift_to(target), coords_[2].lift_to(target)});
}

std::string ProjPoint::to_string() const {
  return "[" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + "]";
}

ProjPoint apply(const Mat3& t, const ProjPoint& p) {
  const Mat3 tk = lift_to(t, p.field());
  std::array<FieldElement, 3> out;
  for (int i = 0; i < 3; ++i) {
    FieldElement acc(p.field());
    for (int j = 0; j < 3; ++j) acc += tk[i][j] * p.coords()[j];
    out[i] = acc;
  }
  return ProjPoint(out);
}

bool LocalExpansion::is_cone_at_point() const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (static_cast<int>(i) != mult && !components[i].is_zero()) return false;
  }
  return true;
}

Mat3 chart_at(const ProjPoint& p) {
  const auto& k = p.field();
  int pivot = 2;
  while (p.coords()[pivot].is_zero()) --pivot;
  Mat3 m;
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    for (int r = 0; r < 3; ++r) m[r][col] = FieldElement(k, r == i ? 1 : 0);
    ++col;
  }
  for (int r = 0; r < 3; ++r) m[r][2] = p.coords()[r];
  return m;
}

LocalExpansion local_expansion(const Form& f, const ProjPoint& p) { return local_expansion(f, p, chart_at(p)); }

LocalExpansion local_expansion(const Form& f, const ProjPoint& p, const Mat3& chart) {
  if (f.is_zero()) throw InputError("local expansion of the zero form");
  FieldPtr k = p.field();
  if (k->is_rationals()) k = f.field();
  const Form g = shear(f.lift_to(k), lift_to(chart, k));
  LocalExpansion out;
  out.chart = lift_to(chart, k);
  for (int i = 0; i <= f.degree(); ++i) out.components.emplace_back(k, i, kXY);
  std::vector<std::vector<FieldElement>> coeffs(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) coeffs[i].assign(static_cast<std::size_t>(i) + 1, FieldElement(k));
  for (const auto& [e, c] : g.terms()) coeffs[static_cast<std::size_t>(e[0] + e[1])][static_cast<std::size_t>(e[0])] = c;
  out.mult = -1;
  for (int i = 0; i <= f.degree(); ++i) {
    out.components[i] = BinaryForm(k, i, coeffs[i], kXY);
    if (out.mult < 0 && !out.components[i].is_zero()) out.mult = i;
  }
  return out;
}

Form recompose(const LocalExpansion& e, int degree) {
  const FieldPtr& k = e.components.front().field();
  Form out(k, degree);
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    const auto& c = e.components[i];
    for (int j = 0; j <= c.degree(); ++j) {
      if (!c.coeff(j).is_zero()) out.add_term({j, c.degree() - j, degree - c.degree()}, c.coeff(j));
    }
  }
  return out;
}

}  // namespace pencil::forms
