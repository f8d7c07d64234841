#pragma once

// Sparse term maps shared by Form (x,y,z) and BiForm (lam,mu,x,y,z).

#include <array>
#include <map>

#include "pencil/algebra/number_field.hpp"

namespace pencil::forms {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::Rational;

template <std::size_t N>
using Exponent = std::array<int, N>;

// Lexicographically descending; on terms of equal total degree this is graded-lex.
template <std::size_t N>
struct ExponentGreater {
  bool operator()(const Exponent<N>& a, const Exponent<N>& b) const { return a > b; }
};

template <std::size_t N>
using TermMap = std::map<Exponent<N>, FieldElement, ExponentGreater<N>>;

namespace detail {

template <std::size_t N>
void accumulate(TermMap<N>& terms, const Exponent<N>& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <std::size_t N>
void add_scaled(TermMap<N>& into, const TermMap<N>& from, const FieldElement& scale) {
  for (const auto& [e, c] : from) accumulate(into, e, c * scale);
}

template <std::size_t N>
TermMap<N> multiply(const TermMap<N>& a, const TermMap<N>& b) {
  TermMap<N> out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent<N> e{};
      for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
      accumulate(out, e, ca * cb);
    }
  }
  return out;
}

template <std::size_t N>
bool equal(const TermMap<N>& a, const TermMap<N>& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

}  // namespace detail

// 3x3 cofactor expansion over any commutative ring type.
template <typename T>
T determinant3(const std::array<std::array<T, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace pencil::forms
