#pragma once

#include "pencil/analysis/pencil.hpp"

namespace corpus {

using pencil::algebra::FieldElement;
using pencil::algebra::NumberField;
using pencil::forms::Form;

inline FieldElement q(long v) { return FieldElement(NumberField::rationals(), v); }
inline Form X() { return Form::variable(NumberField::rationals(), 0); }
inline Form Y() { return Form::variable(NumberField::rationals(), 1); }
inline Form Z() { return Form::variable(NumberField::rationals(), 2); }

inline pencil::analysis::Pencil hesse() { return {X().pow(3) + Y().pow(3) + Z().pow(3), X() * Y() * Z()}; }

// Same pencil in the basis of two completely reducible fibers.
inline pencil::analysis::Pencil hesse_cr_basis() {
  return {X() * Y() * Z(), X().pow(3) + Y().pow(3) + Z().pow(3) - (X() * Y() * Z()).scaled(q(3))};
}

inline pencil::analysis::Pencil b3() {
  return {X().pow(2) * (Y().pow(2) - Z().pow(2)), Y().pow(2) * (X().pow(2) - Z().pow(2))};
}

// Conics through the four points [1:+-1:+-1]: three line pairs, the (3,2)-net.
inline pencil::analysis::Pencil a3_conics() { return {X().pow(2) - Y().pow(2), Y().pow(2) - Z().pow(2)}; }

}  // namespace corpus
