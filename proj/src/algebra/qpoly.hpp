#pragma once

// Dense polynomials over Q as plain coefficient vectors (low-to-high). Used for
// number-field reduction before UniPoly exists.

#include <complex>
#include <string>
#include <vector>

#include "pencil/algebra/rational.hpp"

namespace pencil::algebra::detail {

using QVec = std::vector<Rational>;

void trim(QVec& p);
int degree(const QVec& p);
QVec mul(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
// Remainder of `a` modulo a nonzero `m`.
QVec rem(QVec a, const QVec& m);
void divmod(const QVec& a, const QVec& b, QVec& quotient, QVec& remainder);
// Inverse of `a` modulo `m`; throws AlgebraError when gcd(a, m) != 1.
QVec inverse_mod(const QVec& a, const QVec& m);

std::string render(const QVec& p, const std::string& variable);

// All complex roots (Durand-Kerner); display-only accuracy.
std::vector<std::complex<double>> approx_roots(const QVec& p);

}  // namespace pencil::algebra::detail
