#pragma once

#include "pencil/errors.hpp"
#include "pencil/forms/binary_form.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::forms {

// Raised when a leading coefficient in the eliminated variable vanishes.
class ShearRequired : public pencil::AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Sylvester resultant eliminating z (in the actual z-degrees), as a binary form
// of degree d1*d2 in (x, y). At least one form needs a nonzero z^deg
// coefficient; otherwise ShearRequired is thrown.
BinaryForm resultant_z(const Form& f, const Form& g);

// Resultant eliminating variable `var` (0, 1, 2 for x, y, z), returned as a
// form in the remaining two variables.
Form resultant_wrt(const Form& f, const Form& g, int var);

}  // namespace pencil::forms
