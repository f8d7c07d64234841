#include "qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pencil/errors.hpp"

namespace pencil::algebra::detail {

void trim(QVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QVec& p) { return static_cast<int>(p.size()) - 1; }

QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

void divmod(const QVec& a, const QVec& b, QVec& quotient, QVec& remainder) {
  QVec d = b;
  trim(d);
  if (d.empty()) throw AlgebraError("polynomial division by zero");
  remainder = a;
  trim(remainder);
  quotient.assign(remainder.size() >= d.size() ? remainder.size() - d.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / d.back();
  while (remainder.size() >= d.size()) {
    const std::size_t shift = remainder.size() - d.size();
    const Rational c = remainder.back() * lead_inv;
    quotient[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) remainder[shift + i] -= c * d[i];
    remainder.pop_back();
    trim(remainder);
  }
  trim(quotient);
}

QVec rem(QVec a, const QVec& m) {
  QVec q, r;
  divmod(a, m, q, r);
  return r;
}

QVec inverse_mod(const QVec& a, const QVec& m) {
  // Invariant: s_i * a == r_i (mod m).
  QVec r0 = m, r1 = rem(a, m);
  QVec s0, s1{Rational(1)};
  if (r1.empty()) throw AlgebraError("division by zero in number field");
  while (degree(r1) > 0) {
    QVec q, r;
    divmod(r0, r1, q, r);
    QVec s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw AlgebraError("element is a zero divisor modulo the minimal polynomial");
  }
  const Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return rem(s1, m);
}

std::string render(const QVec& p, const std::string& variable) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::vector<std::complex<double>> approx_roots(const QVec& p) {
  const int n = degree(p);
  if (n < 1) return {};
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  const double lead = p.back().get_d();
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].get_d() / lead;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
    return acc;
  };
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  const std::complex<double> seed(0.4, 0.9);
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = std::pow(seed, i);
  for (int iter = 0; iter < 2000; ++iter) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < n; ++j) {
        if (i != j) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      }
      if (std::abs(denom) < 1e-300) denom = 1e-12;
      const auto step = eval(roots[static_cast<std::size_t>(i)]) / denom;
      roots[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  for (auto& r : roots) {
    if (std::abs(r.imag()) < 1e-12) r = {r.real(), 0.0};
    if (std::abs(r.real()) < 1e-12) r = {0.0, r.imag()};
  }
  return roots;
}

}  // namespace pencil::algebra::detail
