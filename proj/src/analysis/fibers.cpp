#include "pencil/analysis/fibers.hpp"

#include "pencil/errors.hpp"

namespace pencil::analysis {

namespace {

// f restricted to x_i = 0, as a binary form in the two remaining variables.
BinaryForm restrict_to_plane(const Form& f, int zero_index) {
  const int s = zero_index == 0 ? 1 : 0;
  const int t = zero_index == 2 ? 1 : 2;
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(f.degree()) + 1, FieldElement(f.field()));
  for (const auto& [e, c] : f.terms()) {
    if (e[static_cast<std::size_t>(zero_index)] == 0) coeffs[static_cast<std::size_t>(e[s])] = c;
  }
  return BinaryForm(f.field(), f.degree(), std::move(coeffs), {forms::kXYZ[s], forms::kXYZ[t]});
}

// Roots of the linear factors s + r t of a binary form, as the values r
// (factors with no s term are skipped).
std::vector<FieldElement> linear_ratios(const BinaryForm& b) {
  std::vector<FieldElement> out;
  if (b.is_zero() || b.degree() == 0) return out;
  for (const auto& fac : forms::factor_binary(b)) {
    if (fac.form.degree() != 1 || fac.form.coeff(1).is_zero()) continue;
    out.push_back(fac.form.coeff(0) / fac.form.coeff(1));
  }
  return out;
}

void peel(Form& residual, const Form& line, std::vector<Form>& lines) {
  bool found = false;
  while (residual.degree() > 0) {
    auto q = residual.divide(line);
    if (!q) break;
    residual = *q;
    found = true;
  }
  if (found) lines.push_back(line.monic());
}

}  // namespace

std::string to_string(FiberTag tag) {
  switch (tag) {
    case FiberTag::kGeneric:
      return "GENERIC";
    case FiberTag::kSpecialNotCR:
      return "SPECIAL_NOT_CR";
    case FiberTag::kCompletelyReducible:
      return "COMPLETELY_REDUCIBLE";
    case FiberTag::kConcurrentLines:
      return "CONCURRENT_LINES";
  }
  return "?";
}

bool is_special(FiberTag tag) { return tag != FiberTag::kGeneric; }

bool is_completely_reducible(FiberTag tag) {
  return tag == FiberTag::kCompletelyReducible || tag == FiberTag::kConcurrentLines;
}

std::vector<Form> rational_lines(const Form& f, Form* residual_out) {
  if (!f.is_rational()) throw AlgebraError("line extraction needs rational coefficients");
  const auto q = algebra::NumberField::rationals();
  Form residual = f.lift_to(q);
  std::vector<Form> lines;
  const FieldElement zero(q), one(q, 1);

  peel(residual, Form::linear(one, zero, zero), lines);
  // Lines without x show up in the restriction to x = 0.
  for (const auto& r : linear_ratios(restrict_to_plane(residual, 0))) {
    peel(residual, Form::linear(zero, one, r), lines);
  }
  peel(residual, Form::linear(zero, zero, one), lines);
  // The rest have a nonzero x coefficient: x + b*y + c*z with b, c read off
  // the restrictions to z = 0 and y = 0.
  if (residual.degree() > 0) {
    const auto bs = linear_ratios(restrict_to_plane(residual, 2));
    const auto cs = linear_ratios(restrict_to_plane(residual, 1));
    for (const auto& b : bs) {
      for (const auto& c : cs) peel(residual, Form::linear(one, b, c), lines);
    }
  }
  if (residual_out) *residual_out = residual;
  return lines;
}

FiberClass classify_fiber(const Form& f) {
  if (f.is_zero()) throw InputError("cannot classify the zero form");
  FiberClass out;
  out.reduced = forms::reduced(f);
  const Form h = forms::hessian(f);
  const Form h_red = forms::hessian(out.reduced);
  if (h_red.is_zero()) {
    out.tag = FiberTag::kConcurrentLines;
  } else if (h_red.divisible_by(out.reduced)) {
    out.tag = FiberTag::kCompletelyReducible;
  } else if (!h.is_zero() && h.divisible_by(f)) {
    out.tag = FiberTag::kSpecialNotCR;
  } else {
    out.tag = FiberTag::kGeneric;
  }
  if (is_special(out.tag)) {
    if (h.is_zero()) {
      out.quotient = Form(f.field(), std::max(0, 2 * f.degree() - 6));
    } else if (auto q = h.divide(f)) {
      out.quotient = *q;
    }
  }
  if (is_completely_reducible(out.tag) && f.is_rational()) {
    Form residual;
    out.lines = rational_lines(out.reduced, &residual);
    if (residual.degree() > 0) out.residual = residual;
  }
  return out;
}

Form hessian_quotient(const Form& f) {
  const Form h = forms::hessian(f);
  if (h.is_zero()) throw InputError("Hessian vanishes identically (concurrent lines)");
  auto q = h.divide(f);
  if (!q) throw InputError("form does not divide its Hessian: not a special fiber");
  return *q;
}

}  // namespace pencil::analysis
