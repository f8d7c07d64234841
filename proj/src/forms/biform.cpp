#include "pencil/forms/biform.hpp"

#include <sstream>

#include "pencil/errors.hpp"

namespace pencil::forms {

BiForm::BiForm(FieldPtr field, int lam_degree, int xyz_degree)
    : field_(std::move(field)), lam_degree_(lam_degree), xyz_degree_(xyz_degree) {
  if (lam_degree_ < 0 || xyz_degree_ < 0) throw AlgebraError("bidegree must be non-negative");
}

BiForm BiForm::from_form(const Form& f) {
  BiForm out(f.field(), 0, f.degree());
  for (const auto& [e, c] : f.terms()) out.terms_.emplace(Exponent5{0, 0, e[0], e[1], e[2]}, c);
  return out;
}

BiForm BiForm::from_binary(const BinaryForm& p) {
  BiForm out(p.field(), p.degree(), 0);
  for (int i = 0; i <= p.degree(); ++i) {
    detail::accumulate(out.terms_, Exponent5{i, p.degree() - i, 0, 0, 0}, p.coeff(i));
  }
  return out;
}

BiForm BiForm::pencil(const Form& f1, const Form& f2) {
  if (f1.degree() != f2.degree()) throw AlgebraError("pencil generators must have equal degree");
  BiForm out(f1.field(), 1, f1.degree());
  for (const auto& [e, c] : f1.terms()) out.terms_.emplace(Exponent5{1, 0, e[0], e[1], e[2]}, c);
  for (const auto& [e, c] : f2.terms()) detail::accumulate(out.terms_, Exponent5{0, 1, e[0], e[1], e[2]}, c);
  return out;
}

void BiForm::add_term(const Exponent5& e, const FieldElement& c) {
  if (e[0] + e[1] != lam_degree_ || e[2] + e[3] + e[4] != xyz_degree_) {
    throw AlgebraError("term bidegree does not match");
  }
  detail::accumulate(terms_, e, c.lift_to(field_));
}

void BiForm::check_compatible(const BiForm& other) const {
  if (!algebra::same_field(field_, other.field_)) throw AlgebraError("mixed fields in biform arithmetic");
}

BiForm BiForm::operator-() const { return scaled(FieldElement(field_, -1)); }

BiForm& BiForm::operator+=(const BiForm& other) {
  check_compatible(other);
  if (lam_degree_ != other.lam_degree_ || xyz_degree_ != other.xyz_degree_) {
    throw AlgebraError("bidegree mismatch in biform sum");
  }
  detail::add_scaled(terms_, other.terms_, FieldElement(field_, 1));
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& other) {
  check_compatible(other);
  if (lam_degree_ != other.lam_degree_ || xyz_degree_ != other.xyz_degree_) {
    throw AlgebraError("bidegree mismatch in biform difference");
  }
  detail::add_scaled(terms_, other.terms_, FieldElement(field_, -1));
  return *this;
}

BiForm& BiForm::operator*=(const BiForm& other) {
  check_compatible(other);
  terms_ = detail::multiply(terms_, other.terms_);
  lam_degree_ += other.lam_degree_;
  xyz_degree_ += other.xyz_degree_;
  return *this;
}

BiForm BiForm::scaled(const FieldElement& c) const {
  BiForm out(field_, lam_degree_, xyz_degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

BiForm BiForm::derivative(int xyz_index) const {
  const std::size_t slot = static_cast<std::size_t>(xyz_index) + 2;
  BiForm out(field_, lam_degree_, std::max(0, xyz_degree_ - 1));
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponent5 d = e;
    d[slot] -= 1;
    detail::accumulate(out.terms_, d, c * FieldElement(field_, e[slot]));
  }
  return out;
}

Form BiForm::specialize(const FieldElement& lam, const FieldElement& mu) const {
  const FieldPtr& k = lam.field();
  Form out(k, xyz_degree_);
  for (const auto& [e, c] : terms_) {
    const FieldElement v =
        c.lift_to(k) * lam.pow(static_cast<unsigned>(e[0])) * mu.pow(static_cast<unsigned>(e[1]));
    if (!v.is_zero()) out.add_term({e[2], e[3], e[4]}, v);
  }
  return out;
}

Form BiForm::lam_component(int i) const {
  Form out(field_, xyz_degree_);
  for (const auto& [e, c] : terms_) {
    if (e[0] == i) out.add_term({e[2], e[3], e[4]}, c);
  }
  return out;
}

std::map<Exponent3, BinaryForm, ExponentGreater<3>> BiForm::xyz_coefficients() const {
  std::map<Exponent3, BinaryForm, ExponentGreater<3>> out;
  for (const auto& [e, c] : terms_) {
    auto [it, inserted] = out.try_emplace(Exponent3{e[2], e[3], e[4]}, BinaryForm(field_, lam_degree_, kLamMu));
    std::vector<FieldElement> coeffs = it->second.coeffs();
    coeffs[static_cast<std::size_t>(e[0])] += c;
    it->second = BinaryForm(field_, lam_degree_, std::move(coeffs), kLamMu);
  }
  return out;
}

BiForm BiForm::divide_by_lam() const {
  if (lam_degree_ == 0 && !is_zero()) throw AlgebraError("biform is not divisible by lam");
  BiForm out(field_, std::max(0, lam_degree_ - 1), xyz_degree_);
  for (const auto& [e, c] : terms_) {
    if (e[0] == 0) throw AlgebraError("biform is not divisible by lam");
    Exponent5 d = e;
    d[0] -= 1;
    out.terms_.emplace(d, c);
  }
  return out;
}

BiForm BiForm::divide_by_mu() const {
  if (lam_degree_ == 0 && !is_zero()) throw AlgebraError("biform is not divisible by mu");
  BiForm out(field_, std::max(0, lam_degree_ - 1), xyz_degree_);
  for (const auto& [e, c] : terms_) {
    if (e[1] == 0) throw AlgebraError("biform is not divisible by mu");
    Exponent5 d = e;
    d[1] -= 1;
    out.terms_.emplace(d, c);
  }
  return out;
}

int BiForm::z_degree() const {
  int k = -1;
  for (const auto& [e, c] : terms_) k = std::max(k, e[4]);
  return k;
}

BiForm BiForm::z_slice(int k) const {
  BiForm out(field_, lam_degree_, std::max(0, xyz_degree_ - k));
  for (const auto& [e, c] : terms_) {
    if (e[4] != k) continue;
    Exponent5 d = e;
    d[4] = 0;
    out.terms_.emplace(d, c);
  }
  return out;
}

BiForm BiForm::times_z(int k) const {
  BiForm out(field_, lam_degree_, xyz_degree_ + k);
  for (const auto& [e, c] : terms_) {
    Exponent5 d = e;
    d[4] += k;
    out.terms_.emplace(d, c);
  }
  return out;
}

BiForm BiForm::lift_to(const FieldPtr& target) const {
  if (algebra::same_field(field_, target)) return *this;
  BiForm out(target, lam_degree_, xyz_degree_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.lift_to(target));
  return out;
}

bool BiForm::operator==(const BiForm& other) const {
  return lam_degree_ == other.lam_degree_ && xyz_degree_ == other.xyz_degree_ &&
         detail::equal(terms_, other.terms_);
}

std::string BiForm::to_string() const {
  std::vector<std::pair<FieldElement, std::string>> parts;
  static constexpr std::array<const char*, 5> names = {"lam", "mu", "x", "y", "z"};
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < 5; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    parts.emplace_back(c, mono);
  }
  return render_terms(parts);
}

BiForm pencil_hessian(const Form& f1, const Form& f2) {
  const BiForm f = BiForm::pencil(f1, f2);
  const int d = f1.degree();
  if (d < 2) return BiForm(f1.field(), 3, 0);
  std::array<BiForm, 3> first{f.derivative(0), f.derivative(1), f.derivative(2)};
  std::array<std::array<BiForm, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = first[i].derivative(j);
  }
  return determinant3(m);
}

PseudoDivision pseudo_divide_z(const BiForm& h, const BiForm& f) {
  if (f.is_zero()) throw AlgebraError("pseudo-division by the zero biform");
  const int d = f.xyz_degree();
  const BiForm lead_slice = f.z_slice(d);
  if (lead_slice.is_zero()) throw AlgebraError("divisor has no z^deg term; shear first");
  BinaryForm lead(f.field(), f.lam_degree(), kLamMu);
  {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(f.lam_degree()) + 1, FieldElement(f.field()));
    for (const auto& [e, c] : lead_slice.terms()) coeffs[static_cast<std::size_t>(e[0])] = c;
    lead = BinaryForm(f.field(), f.lam_degree(), std::move(coeffs), kLamMu);
  }
  const BiForm lead_bi = BiForm::from_binary(lead);

  PseudoDivision out{BiForm(h.field(), std::max(0, h.lam_degree() - f.lam_degree()), std::max(0, h.xyz_degree() - d)),
                     h, 0, lead};
  while (!out.remainder.is_zero() && out.remainder.z_degree() >= d) {
    const int k = out.remainder.z_degree();
    const BiForm c = out.remainder.z_slice(k).times_z(k - d);
    out.remainder = lead_bi * out.remainder - c * f;
    out.quotient = out.lead_power == 0 ? c : lead_bi * out.quotient + c;
    ++out.lead_power;
  }
  return out;
}

}  // namespace pencil::forms
