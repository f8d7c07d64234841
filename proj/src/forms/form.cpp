#include "pencil/forms/form.hpp"

#include <sstream>

#include "pencil/errors.hpp"

namespace pencil::forms {

Form::Form(FieldPtr field, int degree) : field_(std::move(field)), degree_(degree) {
  if (degree_ < 0) throw AlgebraError("form degree must be non-negative");
}

Form Form::monomial(const FieldElement& c, const Exponent3& e) {
  Form f(c.field(), e[0] + e[1] + e[2]);
  detail::accumulate(f.terms_, e, c);
  return f;
}

Form Form::variable(const FieldPtr& field, int index) {
  Exponent3 e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(FieldElement(field, 1), e);
}

Form Form::linear(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  Form f(a.field(), 1);
  f.add_term({1, 0, 0}, a);
  f.add_term({0, 1, 0}, b);
  f.add_term({0, 0, 1}, c);
  return f;
}

FieldElement Form::coeff(const Exponent3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement(field_) : it->second;
}

void Form::add_term(const Exponent3& e, const FieldElement& c) {
  if (e[0] + e[1] + e[2] != degree_) throw AlgebraError("term degree does not match form degree");
  if (!algebra::same_field(c.field(), field_)) throw AlgebraError("coefficient outside the form's field");
  detail::accumulate(terms_, e, c);
}

void Form::check_compatible(const Form& other, bool same_degree) const {
  if (!algebra::same_field(field_, other.field_)) throw AlgebraError("mixed fields in form arithmetic");
  if (same_degree && degree_ != other.degree_) {
    throw AlgebraError("degree mismatch: " + std::to_string(degree_) + " vs " + std::to_string(other.degree_));
  }
}

Form Form::operator-() const { return scaled(FieldElement(field_, -1)); }

Form& Form::operator+=(const Form& other) {
  check_compatible(other, true);
  detail::add_scaled(terms_, other.terms_, FieldElement(field_, 1));
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_compatible(other, true);
  detail::add_scaled(terms_, other.terms_, FieldElement(field_, -1));
  return *this;
}

Form& Form::operator*=(const Form& other) {
  check_compatible(other, false);
  terms_ = detail::multiply(terms_, other.terms_);
  degree_ += other.degree_;
  return *this;
}

Form Form::scaled(const FieldElement& c) const {
  Form out(field_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

Form Form::pow(unsigned exponent) const {
  Form out = constant(FieldElement(field_, 1));
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

std::optional<Form> Form::divide(const Form& divisor) const {
  check_compatible(divisor, false);
  if (divisor.is_zero()) throw AlgebraError("division by the zero form");
  if (is_zero()) return Form(field_, std::max(0, degree_ - divisor.degree_));
  if (degree_ < divisor.degree_) return std::nullopt;
  Form quotient(field_, degree_ - divisor.degree_);
  Form rem = *this;
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  const FieldElement lead_inv = lead_c.inverse();
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms_.begin();
    Exponent3 shift{};
    for (std::size_t i = 0; i < 3; ++i) {
      shift[i] = e[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const FieldElement q = c * lead_inv;
    detail::accumulate(quotient.terms_, shift, q);
    for (const auto& [de, dc] : divisor.terms_) {
      Exponent3 te{de[0] + shift[0], de[1] + shift[1], de[2] + shift[2]};
      detail::accumulate(rem.terms_, te, -(dc * q));
    }
  }
  return quotient;
}

Form Form::derivative(int index) const {
  Form out(field_, std::max(0, degree_ - 1));
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(index)];
    if (k == 0) continue;
    Exponent3 d = e;
    d[static_cast<std::size_t>(index)] -= 1;
    detail::accumulate(out.terms_, d, c * FieldElement(field_, k));
  }
  return out;
}

FieldElement Form::evaluate(const std::array<FieldElement, 3>& point) const {
  FieldElement acc(point[0].field());
  for (const auto& [e, c] : terms_) {
    FieldElement term = c.lift_to(point[0].field());
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] > 0) term *= point[i].pow(static_cast<unsigned>(e[i]));
    }
    acc += term;
  }
  return acc;
}

Form Form::lift_to(const FieldPtr& target) const {
  if (algebra::same_field(field_, target)) return *this;
  Form out(target, degree_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.lift_to(target));
  return out;
}

bool Form::is_rational() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

FieldElement Form::leading_coeff() const { return is_zero() ? FieldElement(field_) : terms_.begin()->second; }

Form Form::monic() const { return is_zero() ? *this : scaled(leading_coeff().inverse()); }

bool Form::operator==(const Form& other) const {
  return degree_ == other.degree_ && detail::equal(terms_, other.terms_);
}

std::string render_terms(const std::vector<std::pair<FieldElement, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    std::string cs = c.to_string();
    const bool rational = c.is_rational();
    if (rational && cs[0] == '-') {
      out << "-";
      cs.erase(0, 1);
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (!rational) cs = "(" + cs + ")";
    if (mono.empty()) {
      out << cs;
    } else if (rational && cs == "1") {
      out << mono;
    } else {
      out << cs << "*" << mono;
    }
  }
  return out.str();
}

std::string Form::to_string() const {
  std::vector<std::pair<FieldElement, std::string>> parts;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kXYZ[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    parts.emplace_back(c, mono);
  }
  return render_terms(parts);
}

Form hessian(const Form& f) {
  if (f.degree() < 2) return Form(f.field(), 0);
  std::array<Form, 3> first{f.derivative(0), f.derivative(1), f.derivative(2)};
  std::array<std::array<Form, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = first[i].derivative(j);
  }
  Form h = determinant3(m);
  return h;
}

Form reduced(const Form& f) {
  if (f.is_zero()) throw InputError("reduced curve of the zero form");
  Form g = gcd(f, f.derivative(0));
  g = gcd(g, f.derivative(1));
  g = gcd(g, f.derivative(2));
  return *f.divide(g);
}

}  // namespace pencil::forms
