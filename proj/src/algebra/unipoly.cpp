#include "pencil/algebra/unipoly.hpp"

#include <sstream>

#include "pencil/errors.hpp"

namespace pencil::algebra {

UniPoly::UniPoly(FieldPtr field, std::string variable) : field_(std::move(field)), variable_(std::move(variable)) {}

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElement> coeffs, std::string variable)
    : field_(std::move(field)), variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!same_field(c.field(), field_)) throw AlgebraError("coefficient outside the polynomial's field");
  }
  trim();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs, std::string variable) {
  const auto q = NumberField::rationals();
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.emplace_back(q, r);
  return UniPoly(q, std::move(c), std::move(variable));
}

UniPoly UniPoly::constant(const FieldElement& c, std::string variable) {
  return UniPoly(c.field(), {c}, std::move(variable));
}

UniPoly UniPoly::monomial(const FieldElement& c, int degree, std::string variable) {
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(degree) + 1, FieldElement(c.field()));
  coeffs.back() = c;
  return UniPoly(c.field(), std::move(coeffs), std::move(variable));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::check_field(const UniPoly& other) const {
  if (!same_field(field_, other.field_)) throw AlgebraError("mixed fields in polynomial arithmetic");
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElement(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement UniPoly::leading() const { return is_zero() ? FieldElement(field_) : coeffs_.back(); }

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  check_field(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  check_field(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  check_field(other);
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> out(coeffs_.size() + other.coeffs_.size() - 1, FieldElement(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  UniPoly out(*this);
  for (auto& x : out.coeffs_) x *= c;
  out.trim();
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  check_field(divisor);
  if (divisor.is_zero()) throw AlgebraError("polynomial division by zero");
  UniPoly r(*this);
  UniPoly q(field_, variable_);
  if (r.degree() < divisor.degree()) return {q, r};
  q.coeffs_.assign(static_cast<std::size_t>(r.degree() - divisor.degree() + 1), FieldElement(field_));
  const FieldElement lead_inv = divisor.leading().inverse();
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - divisor.degree());
    const FieldElement c = r.coeffs_.back() * lead_inv;
    q.coeffs_[shift] = c;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) r.coeffs_[shift + i] -= c * divisor.coeffs_[i];
    r.coeffs_.pop_back();
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly UniPoly::exact_divide(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw AlgebraError("polynomial is not divisible");
  return q;
}

bool UniPoly::divides(const UniPoly& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).second.is_zero();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::derivative() const {
  UniPoly out(field_, variable_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.coeffs_.push_back(coeffs_[i] * FieldElement(field_, Rational(static_cast<long>(i))));
  }
  out.trim();
  return out;
}

FieldElement UniPoly::evaluate(const FieldElement& at) const {
  FieldElement acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

UniPoly UniPoly::lift_to(const FieldPtr& target) const {
  if (same_field(field_, target)) return *this;
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.lift_to(target));
  return UniPoly(target, std::move(c), variable_);
}

UniPoly UniPoly::with_variable(std::string variable) const {
  UniPoly out(*this);
  out.variable_ = std::move(variable);
  return out;
}

bool UniPoly::operator==(const UniPoly& other) const {
  if (coeffs_.size() != other.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != other.coeffs_[i]) return false;
  }
  return true;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool rational = c.is_rational();
    if (rational && cs[0] == '-') {
      out << "-";
      cs.erase(0, 1);
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (i == 0) {
      out << (rational ? cs : "(" + cs + ")");
      continue;
    }
    if (!(rational && cs == "1")) out << (rational ? cs : "(" + cs + ")") << "*";
    out << variable_;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g) {
  const auto& k = f.field();
  UniPoly r0 = f, r1 = g;
  UniPoly s0 = UniPoly::constant(FieldElement(k, 1), f.variable()), s1(k, f.variable());
  UniPoly t0(k, f.variable()), t1 = UniPoly::constant(FieldElement(k, 1), f.variable());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UniPoly s = s0 - q * s1;
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw AlgebraError("squarefree part of the zero polynomial");
  return f.exact_divide(gcd(f, f.derivative())).monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw AlgebraError("squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  const UniPoly fm = f.monic();
  if (fm.degree() == 0) return out;
  UniPoly a = gcd(fm, fm.derivative());
  UniPoly b = fm.exact_divide(a);
  UniPoly c = fm.derivative().exact_divide(a);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    out.push_back(g);
    b = b.exact_divide(g);
    c = d.exact_divide(g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace pencil::algebra
