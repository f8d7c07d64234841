#include "pencil/forms/binary_form.hpp"

#include <algorithm>

#include "pencil/errors.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::forms {

BinaryForm::BinaryForm(FieldPtr field, int degree, VariablePair names)
    : field_(std::move(field)), degree_(degree), names_(std::move(names)) {
  if (degree_ < 0) throw AlgebraError("binary form degree must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(degree_) + 1, FieldElement(field_));
}

BinaryForm::BinaryForm(FieldPtr field, int degree, std::vector<FieldElement> coeffs, VariablePair names)
    : BinaryForm(std::move(field), degree, std::move(names)) {
  if (coeffs.size() > coeffs_.size()) throw AlgebraError("too many coefficients for binary form degree");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = coeffs[i].lift_to(field_);
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, int degree, VariablePair names) {
  if (p.degree() > degree) throw AlgebraError("homogenization degree below polynomial degree");
  return BinaryForm(p.field(), degree, p.coeffs(), std::move(names));
}

BinaryForm BinaryForm::linear(const FieldElement& a, const FieldElement& b, VariablePair names) {
  return BinaryForm(a.field(), 1, {b, a}, std::move(names));
}

BinaryForm BinaryForm::from_rationals(const std::vector<Rational>& coeffs, VariablePair names) {
  const auto q = algebra::NumberField::rationals();
  std::vector<FieldElement> c;
  for (const auto& r : coeffs) c.emplace_back(q, r);
  return BinaryForm(q, static_cast<int>(coeffs.size()) - 1, std::move(c), std::move(names));
}

FieldElement BinaryForm::coeff(int i) const {
  if (i < 0 || i > degree_) return FieldElement(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

void BinaryForm::trim_check(const BinaryForm& other) const {
  if (!algebra::same_field(field_, other.field_)) throw AlgebraError("mixed fields in binary form arithmetic");
}

BinaryForm BinaryForm::operator-() const { return scaled(FieldElement(field_, -1)); }

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
  trim_check(other);
  if (degree_ != other.degree_) throw AlgebraError("degree mismatch in binary form sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other) {
  trim_check(other);
  if (degree_ != other.degree_) throw AlgebraError("degree mismatch in binary form difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const BinaryForm& other) {
  trim_check(other);
  std::vector<FieldElement> out(static_cast<std::size_t>(degree_ + other.degree_) + 1, FieldElement(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  degree_ += other.degree_;
  coeffs_ = std::move(out);
  return *this;
}

BinaryForm BinaryForm::scaled(const FieldElement& c) const {
  BinaryForm out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

BinaryForm BinaryForm::pow(unsigned exponent) const {
  BinaryForm out(field_, 0, {FieldElement(field_, 1)}, names_);
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(field_, coeffs_, names_[0]); }

int BinaryForm::t_valuation() const {
  const UniPoly p = dehomogenize();
  return p.is_zero() ? degree_ : degree_ - p.degree();
}

std::optional<BinaryForm> BinaryForm::divide(const BinaryForm& divisor) const {
  trim_check(divisor);
  if (divisor.is_zero()) throw AlgebraError("division by the zero binary form");
  if (degree_ < divisor.degree_) {
    if (is_zero()) return BinaryForm(field_, 0, names_);
    return std::nullopt;
  }
  const int qdeg = degree_ - divisor.degree_;
  if (is_zero()) return BinaryForm(field_, qdeg, names_);
  if (t_valuation() < divisor.t_valuation()) return std::nullopt;
  auto [q, r] = dehomogenize().divmod(divisor.dehomogenize());
  if (!r.is_zero()) return std::nullopt;
  return homogenize(q, qdeg, names_);
}

FieldElement BinaryForm::evaluate(const FieldElement& s, const FieldElement& t) const {
  FieldElement acc(s.field());
  for (int i = 0; i <= degree_; ++i) {
    acc += coeffs_[static_cast<std::size_t>(i)].lift_to(s.field()) * s.pow(static_cast<unsigned>(i)) *
           t.pow(static_cast<unsigned>(degree_ - i));
  }
  return acc;
}

BinaryForm BinaryForm::substitute(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                  const FieldElement& d) const {
  const BinaryForm s_img = linear(a, b, names_);
  const BinaryForm t_img = linear(c, d, names_);
  BinaryForm out(field_, degree_, names_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    out += (s_img.pow(static_cast<unsigned>(i)) * t_img.pow(static_cast<unsigned>(degree_ - i)))
               .scaled(coeffs_[static_cast<std::size_t>(i)]);
  }
  return out;
}

BinaryForm BinaryForm::lift_to(const FieldPtr& target) const {
  if (algebra::same_field(field_, target)) return *this;
  return BinaryForm(target, degree_, coeffs_, names_);
}

BinaryForm BinaryForm::with_names(VariablePair names) const {
  BinaryForm out(*this);
  out.names_ = std::move(names);
  return out;
}

FieldElement BinaryForm::leading_coeff() const {
  for (int i = degree_; i >= 0; --i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return coeffs_[static_cast<std::size_t>(i)];
  }
  return FieldElement(field_);
}

BinaryForm BinaryForm::monic() const { return is_zero() ? *this : scaled(leading_coeff().inverse()); }

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return *this;
  if (!field_->is_rationals()) return monic();
  algebra::Integer den = 1, num = 0;
  for (const auto& c : coeffs_) {
    const Rational r = c.rational_value();
    den = lcm(den, r.get_den());
    num = gcd(num, r.get_num());
  }
  Rational scale = algebra::make_rational(den, num);
  if (leading_coeff().rational_value() < 0) scale = -scale;
  return scaled(FieldElement(field_, scale));
}

BinaryForm BinaryForm::radical() const {
  if (is_zero()) throw AlgebraError("radical of the zero binary form");
  const int v = std::min(t_valuation(), 1);
  const UniPoly p = dehomogenize();
  const UniPoly sq = p.degree() > 0 ? algebra::squarefree_part(p) : UniPoly::constant(FieldElement(field_, 1));
  return homogenize(sq.with_variable(names_[0]), sq.degree() + v, names_).normalized();
}

bool BinaryForm::operator==(const BinaryForm& other) const {
  return degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

bool BinaryForm::proportional_to(const BinaryForm& other) const {
  if (degree_ != other.degree_) return false;
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return monic() == other.lift_to(field_).monic();
}

std::string BinaryForm::to_string() const {
  std::vector<std::pair<FieldElement, std::string>> parts;
  for (int i = degree_; i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono;
    auto put = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    put(names_[0], i);
    put(names_[1], degree_ - i);
    parts.emplace_back(c, mono);
  }
  return render_terms(parts);
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  const int v = std::min(f.t_valuation(), g.t_valuation());
  const UniPoly h = gcd(f.dehomogenize(), g.dehomogenize());
  return BinaryForm::homogenize(h, h.degree() + v, f.names()).normalized();
}

std::vector<BinaryFactor> factor_binary(const BinaryForm& f, int max_degree) {
  if (!f.field()->is_rationals()) throw AlgebraError("binary factorization requires rational coefficients");
  if (f.is_zero()) throw AlgebraError("cannot factor the zero binary form");
  std::vector<BinaryFactor> out;
  const auto q = algebra::NumberField::rationals();
  const int v = f.t_valuation();
  if (v > 0) out.push_back({BinaryForm(q, 1, {FieldElement(q, 1)}, f.names()), v});
  const UniPoly p = f.dehomogenize();
  if (p.degree() > 0) {
    for (const auto& fac : algebra::factor_over_Q(p, max_degree).factors) {
      out.push_back({BinaryForm::homogenize(fac.poly, fac.poly.degree(), f.names()).normalized(), fac.multiplicity});
    }
  }
  return out;
}

}  // namespace pencil::forms
