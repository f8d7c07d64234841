#pragma once

#include <string>

#include "pencil/errors.hpp"
#include "pencil/forms/form.hpp"

namespace pencil::cli {

// Malformed expression; the message carries "line L, column C".
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Homogeneous form in x, y, z. Coefficients are rationals and, when `field`
// is an extension, polynomials in its generator.
forms::Form parse_form(const std::string& src,
                       const algebra::FieldPtr& field = algebra::NumberField::rationals());

// Extension declaration "t: t^2+t+1" with a monic integer minimal polynomial.
algebra::FieldPtr parse_extension(const std::string& src, int max_degree = algebra::kDefaultMaxExtDegree);

}  // namespace pencil::cli
