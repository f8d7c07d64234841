#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/analysis/pencil.hpp"

namespace pencil::analysis {

enum class FiberTag { kGeneric, kSpecialNotCR, kCompletelyReducible, kConcurrentLines };

std::string to_string(FiberTag tag);
bool is_special(FiberTag tag);
bool is_completely_reducible(FiberTag tag);

struct FiberClass {
  FiberTag tag = FiberTag::kGeneric;
  Form reduced;                    // F / gcd(F, Fx, Fy, Fz)
  std::optional<Form> quotient;    // hessian(F) / F for the special tags except concurrent lines
  std::vector<Form> lines;         // linear factors of `reduced` over Q (rational fibers only)
  std::optional<Form> residual;    // part of `reduced` not split into rational lines
};

// Squarefree-part Hessian-divisibility criterion:
//   hessian(F_red) = 0           -> CONCURRENT_LINES
//   F_red | hessian(F_red)       -> COMPLETELY_REDUCIBLE
//   F | hessian(F)               -> SPECIAL_NOT_CR
//   otherwise                    -> GENERIC
// Throws InputError for the zero form.
FiberClass classify_fiber(const Form& f);

// Exact hessian(F) / F. Throws InputError when F does not divide its Hessian
// or the Hessian vanishes identically.
Form hessian_quotient(const Form& f);

// Rational linear factors of a squarefree form, each normalized monic; the
// cofactor is returned in `residual` (a constant when fully split).
std::vector<Form> rational_lines(const Form& f, Form* residual = nullptr);

}  // namespace pencil::analysis
