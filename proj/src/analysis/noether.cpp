#include "pencil/analysis/noether.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "pencil/analysis/fibers.hpp"
#include "pencil/errors.hpp"

namespace pencil::analysis {

namespace {

using detail::Matrix;
using forms::Exponent3;
using forms::Exponent5;

std::vector<Exponent3> monomials(int n) {
  std::vector<Exponent3> out;
  for (int a = n; a >= 0; --a) {
    for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
  }
  return out;
}

bool distinct(const BoundaryCondition& a, const BoundaryCondition& b) {
  const FieldPtr k = common_field(a.lam.field(), b.lam.field());
  if (!k) return true;
  return !(a.lam.lift_to(k) * b.mu.lift_to(k) - a.mu.lift_to(k) * b.lam.lift_to(k)).is_zero();
}

Form boundary_quotient(const Form& f) {
  if (forms::hessian(f).is_zero()) return Form(f.field(), std::max(0, 2 * f.degree() - 6));
  return hessian_quotient(f);
}

template <typename T>
T lowered(const T& value, bool rational) {
  return rational ? value.lift_to(algebra::NumberField::rationals()) : value;
}

bool biform_is_rational(const BiForm& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second.is_rational(); });
}

// Scalar s with a = s b, std::nullopt when none exists. b must be nonzero.
std::optional<FieldElement> ratio(const Form& a, const Form& b) {
  const auto& [e, lead] = *b.terms().begin();
  const FieldElement s = a.coeff(e) / lead;
  if (a != b.scaled(s)) return std::nullopt;
  return s;
}

FieldElement require_ratio(const Form& a, const Form& b, const char* what) {
  const auto s = ratio(a, b);
  if (!s) throw InconsistencyError(std::string("Noether decomposition: ") + what + " is not a multiple of C1");
  return *s;
}

}  // namespace

NoetherDecomposition noether_decomposition(const Pencil& p, const std::vector<BoundaryCondition>& boundary) {
  const int d = p.degree();
  if (d < 3) throw InputError("Noether decomposition needs degree at least 3");
  const BiForm h = p.hessian_family();
  const auto cols = monomials(2 * d - 6);
  const auto rows = monomials(3 * d - 6);
  const std::size_t nm = cols.size(), nu = 2 * nm;
  const FieldPtr& k = p.field();

  std::map<Exponent3, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  Matrix m(rows.size(), std::vector<FieldElement>(nu + 4, FieldElement(k)));
  const Form* gens[2] = {&p.f1(), &p.f2()};
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t j = 0; j < nm; ++j) {
      for (const auto& [e, c] : gens[g]->terms()) {
        const Exponent3 r{e[0] + cols[j][0], e[1] + cols[j][1], e[2] + cols[j][2]};
        m[row_of.at(r)][g * nm + j] += c;
      }
    }
  }
  for (int i = 0; i <= 3; ++i) {
    const Form hi = h.lam_component(i);
    for (const auto& [e, c] : hi.terms()) m[row_of.at(e)][nu + static_cast<std::size_t>(i)] += c;
  }
  const auto pivots = detail::row_reduce(m, nu);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (!m[r][nu + i].is_zero()) throw InconsistencyError("Hessian family is not in the ideal of the generators");
    }
  }

  NoetherDecomposition out;
  std::vector<bool> is_pivot(nu, false);
  for (auto c : pivots) is_pivot[c] = true;
  out.free_variables = static_cast<int>(nu - pivots.size());
  out.unique = out.free_variables == 0;

  FieldPtr kk = k;
  std::vector<const BoundaryCondition*> chosen;
  if (!boundary.empty()) {
    for (const auto& b : boundary) {
      kk = common_field(kk, b.lam.field());
      if (kk) kk = common_field(kk, b.c.field());
      if (!kk) throw InputError("boundary conditions live in different fields");
    }
    for (const auto& b : boundary) {
      if (chosen.size() == 4) break;
      if (std::all_of(chosen.begin(), chosen.end(), [&](const auto* o) { return distinct(*o, b); })) {
        chosen.push_back(&b);
      }
    }
    if (chosen.size() < 4) throw InputError("boundary conditions need four distinct parameters");
  }

  // values[u][i]: coefficient of lam^i mu^(3-i) in unknown u.
  std::vector<std::vector<FieldElement>> values(nu, std::vector<FieldElement>(4, FieldElement(kk)));
  if (!chosen.empty()) {
    Matrix vand;
    for (const auto* b : chosen) {
      std::vector<FieldElement> row;
      for (unsigned e = 0; e <= 3; ++e) row.push_back(b->lam.lift_to(kk).pow(e) * b->mu.lift_to(kk).pow(3 - e));
      vand.push_back(row);
    }
    for (std::size_t u = 0; u < nu; ++u) {
      if (is_pivot[u]) continue;
      std::vector<FieldElement> target;
      for (const auto* b : chosen) {
        const FieldElement& s = u < nm ? b->lam : b->mu;
        target.push_back(s.lift_to(kk) * b->c.coeff(cols[u % nm]).lift_to(kk));
      }
      const auto sol = detail::solve(vand, target);
      if (!sol) throw InputError("boundary conditions need four distinct parameters");
      values[u] = *sol;
    }
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t u = pivots[r];
    for (std::size_t i = 0; i < 4; ++i) {
      FieldElement v = m[r][nu + i].lift_to(kk);
      for (std::size_t f = 0; f < nu; ++f) {
        if (!is_pivot[f] && !m[r][f].is_zero()) v -= m[r][f].lift_to(kk) * values[f][i];
      }
      values[u][i] = v;
    }
  }

  BiForm a(kk, 3, 2 * d - 6), b(kk, 3, 2 * d - 6);
  for (std::size_t u = 0; u < nu; ++u) {
    const Exponent3& e = cols[u % nm];
    for (int i = 0; i <= 3; ++i) {
      (u < nm ? a : b).add_term(Exponent5{i, 3 - i, e[0], e[1], e[2]}, values[u][static_cast<std::size_t>(i)]);
    }
  }
  const BiForm check = a * BiForm::from_form(p.f1().lift_to(kk)) + b * BiForm::from_form(p.f2().lift_to(kk));
  if (check != h.lift_to(kk)) throw InconsistencyError("Noether decomposition does not reproduce the Hessian");

  if (!boundary.empty()) {
    bool ok = true;
    for (const auto& bc : boundary) {
      const FieldElement lam = bc.lam.lift_to(kk), mu = bc.mu.lift_to(kk);
      const Form c = bc.c.lift_to(kk);
      ok = ok && (a.specialize(lam, mu) - c.scaled(lam)).is_zero() && (b.specialize(lam, mu) - c.scaled(mu)).is_zero();
    }
    out.boundary_satisfied = ok;
  }
  const bool rational = biform_is_rational(a) && biform_is_rational(b);
  out.noetherA = lowered(a, rational);
  out.noetherB = lowered(b, rational);
  return out;
}

std::vector<BoundaryCondition> boundary_from_locus(const Pencil& p, const SpecialLocus& locus) {
  std::vector<const SpecialFiber*> order;
  for (const auto* key : {"[1:0]", "[0:1]"}) {
    for (const auto& sf : locus.fibers) {
      if (sf.param.to_string() == key) order.push_back(&sf);
    }
  }
  for (const auto& sf : locus.fibers) {
    if (std::find(order.begin(), order.end(), &sf) == order.end()) order.push_back(&sf);
  }
  std::vector<BoundaryCondition> out;
  FieldPtr k = p.field();
  auto add = [&](const FiberParam& t) {
    const Form f = p.fiber(t);
    out.push_back({t.lam, t.mu, boundary_quotient(f)});
  };
  for (const auto* sf : order) {
    const FieldPtr kk = common_field(k, sf->param.field());
    if (!kk) continue;
    k = kk;
    add(sf->param);
    if (sf->param.orbit_size() == 2) add(quadratic_conjugate(sf->param));
  }
  return out;
}

HessianFactorization hessian_factorization(const Pencil& p, const SpecialLocus& locus) {
  auto generator_cr = [&](const char* key) {
    return std::any_of(locus.fibers.begin(), locus.fibers.end(), [&](const SpecialFiber& sf) {
      return sf.param.to_string() == key && is_completely_reducible(sf.cls.tag);
    });
  };
  if (!generator_cr("[1:0]") || !generator_cr("[0:1]")) {
    throw InputError("hypotheses not met: both generators must be completely reducible fibers");
  }
  const auto bc = boundary_from_locus(p, locus);
  if (bc.size() < 4) throw InputError("hypotheses not met: fewer than four special parameters");
  const NoetherDecomposition dec = noether_decomposition(p, bc);

  HessianFactorization out;
  try {
    out.D = dec.noetherA.divide_by_lam();
    out.E = dec.noetherB.divide_by_mu();
  } catch (const AlgebraError&) {
    throw InconsistencyError("Noether decomposition: A is not divisible by lam or B by mu");
  }
  const FieldPtr k = out.D.field();
  const Form c1 = out.D.lam_component(2);
  out.X = out.D.lam_component(1);
  const Form uc2 = out.D.lam_component(0);
  const Form vc1 = out.E.lam_component(2);
  out.Y = out.E.lam_component(1);
  const Form c2 = out.E.lam_component(0);
  if (c1.is_zero()) throw InconsistencyError("Noether decomposition: C1 vanishes");

  const FieldElement c2r = require_ratio(c2, c1, "C2");
  const FieldElement uc2r = require_ratio(uc2, c1, "u C2");
  const FieldElement x = require_ratio(out.X, c1, "X");
  const FieldElement y = require_ratio(out.Y, c1, "Y");
  out.v = require_ratio(vc1, c1, "v C1");
  if (c2r.is_zero()) {
    if (!uc2r.is_zero()) throw InconsistencyError("Noether decomposition: u C2 is nonzero while C2 vanishes");
    out.u = FieldElement(k);
  } else {
    out.u = uc2r / c2r;
  }
  out.p = BinaryForm(k, 2, {uc2r, x, FieldElement(k, 1)});
  out.q = BinaryForm(k, 2, {c2r, y, out.v});
  out.C = c1;

  const BinaryForm lam = BinaryForm::linear(FieldElement(k, 1), FieldElement(k)),
                   mu = BinaryForm::linear(FieldElement(k), FieldElement(k, 1));
  auto rebuild = [&](const HessianFactorization& hf) {
    return BiForm::from_form(hf.C) * (BiForm::from_binary(hf.p * lam) * BiForm::from_form(p.f1().lift_to(k)) +
                                      BiForm::from_binary(hf.q * mu) * BiForm::from_form(p.f2().lift_to(k)));
  };
  if (rebuild(out) != p.hessian_family().lift_to(k)) {
    throw InconsistencyError("Noether decomposition: H differs from C (p lam f1 + q mu f2)");
  }

  const BinaryForm pn = out.p.normalized();
  const FieldElement s = pn.coeff(2) / out.p.coeff(2);
  out.p = pn;
  out.q = out.q.scaled(s);
  out.C = out.C.scaled(s.inverse());
  out.r = ((out.p - out.q) * lam * mu).normalized();

  const FieldPtr kr = common_field(k, locus.rho.field());
  out.r_matches_locus = kr && !out.r.is_zero() && out.r.radical().lift_to(kr).proportional_to(locus.rho.lift_to(kr));
  return out;
}

}  // namespace pencil::analysis
