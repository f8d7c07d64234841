#include "pencil/algebra/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pencil/algebra/factor.hpp"
#include "pencil/errors.hpp"
#include "qpoly.hpp"

namespace pencil::algebra {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InputError("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

std::complex<double> pick_display_root(const detail::QVec& p) {
  auto roots = detail::approx_roots(p);
  if (roots.empty()) return {0.0, 0.0};
  // Largest real part first, then upper half plane.
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots.front();
}

}  // namespace

NumberField::NumberField(std::string generator, std::vector<Rational> min_poly)
    : generator_(std::move(generator)), min_poly_(std::move(min_poly)) {
  approx_root_ = pick_display_root(min_poly_);
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField("t", {Rational(0), Rational(1)}));
  return q;
}

FieldPtr NumberField::create(std::string generator, std::vector<Rational> min_poly, int max_degree) {
  detail::trim(min_poly);
  if (min_poly.size() < 2) throw AlgebraError("minimal polynomial must have degree >= 1");
  if (min_poly.back() != 1) throw AlgebraError("minimal polynomial must be monic");
  const int deg = static_cast<int>(min_poly.size()) - 1;
  if (deg > max_degree) {
    throw LimitExceeded("extension degree " + std::to_string(deg) + " exceeds bound " + std::to_string(max_degree));
  }
  if (deg == 1) return rationals();
  if (!is_irreducible_over_Q(UniPoly::from_rationals(min_poly))) {
    throw AlgebraError("minimal polynomial " + detail::render(min_poly, generator) + " is reducible over Q");
  }
  return FieldPtr(new NumberField(std::move(generator), std::move(min_poly)));
}

bool NumberField::same_as(const NumberField& other) const { return min_poly_ == other.min_poly_; }

std::string NumberField::min_poly_string() const { return detail::render(min_poly_, generator_); }

// ---------------------------------------------------------------------------

FieldElement::FieldElement() : FieldElement(NumberField::rationals()) {}

FieldElement::FieldElement(FieldPtr field)
    : field_(std::move(field)), coords_(static_cast<std::size_t>(field_->degree()), Rational(0)) {}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) {
  coords_[0] = value;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  const auto deg = static_cast<std::size_t>(field_->degree());
  if (coords.size() > deg) {
    detail::trim(coords);
    coords = detail::rem(std::move(coords), field_->min_poly());
  }
  coords.resize(deg, Rational(0));
  coords_ = std::move(coords);
}

FieldElement FieldElement::generator(FieldPtr field) {
  if (field->is_rationals()) throw AlgebraError("Q has no adjoined generator");
  FieldElement g(std::move(field));
  g.coords_[1] = 1;
  return g;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw AlgebraError("element " + to_string() + " is not rational");
  return coords_[0];
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (!same_field(field_, other.field_)) {
    throw AlgebraError("mixed fields: " + field_->min_poly_string() + " vs " + other.field_->min_poly_string());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same_field(other);
  if (coords_.size() == 1) {
    coords_[0] *= other.coords_[0];
    return *this;
  }
  detail::QVec a = coords_, b = other.coords_;
  detail::trim(a);
  detail::trim(b);
  auto prod = detail::rem(detail::mul(a, b), field_->min_poly());
  prod.resize(coords_.size(), Rational(0));
  coords_ = std::move(prod);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  if (coords_.size() == 1) return FieldElement(field_, Rational(1 / coords_[0]));
  detail::QVec a = coords_;
  detail::trim(a);
  return FieldElement(field_, detail::inverse_mod(a, field_->min_poly()));
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

FieldElement FieldElement::pow(unsigned exponent) const {
  FieldElement result(field_, Rational(1));
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::lift_to(const FieldPtr& target) const {
  if (same_field(field_, target)) return *this;
  if (!is_rational()) {
    throw AlgebraError("cannot embed " + to_string() + " into " + target->min_poly_string());
  }
  return FieldElement(target, coords_[0]);
}

bool FieldElement::operator==(const FieldElement& other) const {
  if (!same_field(field_, other.field_)) {
    // Rational values compare equal across fields.
    return is_rational() && other.is_rational() && coords_[0] == other.coords_[0];
  }
  return coords_ == other.coords_;
}

std::string FieldElement::to_string() const {
  detail::QVec c = coords_;
  detail::trim(c);
  return detail::render(c, field_->generator_name());
}

std::complex<double> FieldElement::approx() const {
  const auto alpha = field_->approx_generator();
  std::complex<double> acc = 0;
  for (std::size_t i = coords_.size(); i-- > 0;) acc = acc * alpha + coords_[i].get_d();
  return acc;
}

std::string format_approx(std::complex<double> value) {
  auto fix = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
  const double re = fix(value.real());
  const double im = fix(value.imag());
  char buf[96];
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.6f", re);
  } else {
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re, im);
  }
  return buf;
}

}  // namespace pencil::algebra
