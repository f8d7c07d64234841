#include "pencil/analysis/locus.hpp"

#include <algorithm>
#include <random>

#include "linalg.hpp"
#include "pencil/errors.hpp"
#include "pencil/forms/resultant.hpp"

namespace pencil::analysis {

namespace {

using algebra::UniPoly;
using forms::Mat3;
using forms::ProjPoint;

constexpr std::uint64_t kBaseStream = 0x6261736500000000ULL;
constexpr std::uint64_t kLocusStream = 0x6c6f637500000000ULL;

void require_rational(const Pencil& p) {
  if (!p.is_rational()) throw InputError("locus computations require generators with rational coefficients");
}

// g(x0, 1, z) as a polynomial in z over the field of x0.
UniPoly restrict_to_line(const Form& g, const FieldElement& x0) {
  const auto& k = x0.field();
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(g.degree()) + 1, FieldElement(k));
  for (const auto& [e, c] : g.terms()) {
    coeffs[static_cast<std::size_t>(e[2])] += c.lift_to(k) * x0.pow(static_cast<unsigned>(e[0]));
  }
  return UniPoly(k, std::move(coeffs), "z");
}

// Binary form p(1, mu) as a polynomial in mu.
UniPoly at_lam_one(const BinaryForm& b) {
  std::vector<FieldElement> coeffs;
  for (int j = 0; j <= b.degree(); ++j) coeffs.push_back(b.coeff(b.degree() - j));
  return UniPoly(b.field(), std::move(coeffs), "mu");
}

std::optional<std::vector<BasePoint>> try_shear(const Pencil& p, const Mat3& t, const Config& cfg) {
  const int d = p.degree();
  const Form g1 = forms::shear(p.f1(), t), g2 = forms::shear(p.f2(), t);
  if (g1.coeff({0, 0, d}).is_zero() || g2.coeff({0, 0, d}).is_zero()) return std::nullopt;
  const BinaryForm res = forms::resultant_z(g1, g2);
  // A base point on y = 0 would hide in the dehomogenization.
  if (res.coeff(d * d).is_zero()) return std::nullopt;
  const auto fac = algebra::factor_over_Q(res.dehomogenize(), cfg.max_factor_degree);
  std::vector<BasePoint> out;
  for (const auto& f : fac.factors) {
    if (f.poly.degree() > cfg.max_ext_degree) {
      throw LimitExceeded("base point extension of degree " + std::to_string(f.poly.degree()) +
                          " exceeds the bound " + std::to_string(cfg.max_ext_degree));
    }
    const auto rf = algebra::adjoin_root(f.poly, "a", cfg.max_ext_degree);
    const UniPoly common = gcd(restrict_to_line(g1, rf.root), restrict_to_line(g2, rf.root));
    if (common.degree() < 1) return std::nullopt;
    // Two base points over the same [x:y]: the projection is not generic.
    const UniPoly h = algebra::squarefree_part(common);
    if (h.degree() != 1) return std::nullopt;
    const FieldElement z0 = -h.coeff(0) / h.coeff(1);
    const ProjPoint v({rf.root, FieldElement(rf.field, 1), z0});
    BasePoint bp{canonical_point(forms::apply(t, v)), 1, BinaryForm(), f.multiplicity, f.poly.degree()};
    const Mat3 chart = forms::chart_at(bp.point);
    const auto e1 = forms::local_expansion(p.f1(), bp.point, chart);
    const auto e2 = forms::local_expansion(p.f2(), bp.point, chart);
    bp.mult = std::min(e1.mult, e2.mult);
    bp.tangent_cone = e1.mult == bp.mult ? e1.tangent_cone() : e2.tangent_cone();
    out.push_back(std::move(bp));
  }
  std::sort(out.begin(), out.end(), [](const BasePoint& a, const BasePoint& b) {
    if (a.orbit_size != b.orbit_size) return a.orbit_size < b.orbit_size;
    return a.point.to_string() < b.point.to_string();
  });
  return out;
}

}  // namespace

ProjPoint canonical_point(const ProjPoint& p) {
  const auto& k = p.field();
  if (k->is_rationals()) return p;
  const auto& c = p.coords();
  std::size_t first = 0;
  while (first < 3 && c[first].is_rational()) ++first;
  if (first == 3) return p.lift_to(algebra::NumberField::rationals());
  const auto m = detail::minimal_polynomial(c[first]);
  if (static_cast<int>(m.size()) - 1 != k->degree()) return p;
  const auto target = algebra::NumberField::create("a", m, k->degree());
  std::array<FieldElement, 3> coords;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto x = detail::express_in_powers(c[i], c[first]);
    if (!x) return p;
    coords[i] = FieldElement(target, *x);
  }
  return ProjPoint(coords);
}

std::vector<BasePoint> base_locus(const Pencil& p, const Config& cfg) {
  require_rational(p);
  const auto q = algebra::NumberField::rationals();
  std::mt19937_64 rng(cfg.seed ^ kBaseStream);
  for (int attempt = 0; attempt <= cfg.shear_retries; ++attempt) {
    const Mat3 t = attempt == 0 ? forms::identity_matrix(q) : forms::random_integer_matrix(rng);
    if (auto points = try_shear(p, t, cfg)) {
      if (intersection_total(*points) != p.degree() * p.degree()) {
        throw InconsistencyError("intersection multiplicities do not sum to d^2");
      }
      return *points;
    }
  }
  throw LimitExceeded("no generic coordinates found for the base locus after " +
                      std::to_string(cfg.shear_retries) + " shears");
}

int distinct_count(const std::vector<BasePoint>& points) {
  int n = 0;
  for (const auto& bp : points) n += bp.orbit_size;
  return n;
}

int intersection_total(const std::vector<BasePoint>& points) {
  int n = 0;
  for (const auto& bp : points) n += bp.orbit_size * bp.int_mult;
  return n;
}

int SpecialLocus::special_count() const {
  int n = 0;
  for (const auto& f : fibers) n += f.param.orbit_size();
  return n;
}

int SpecialLocus::cr_count() const {
  int n = 0;
  for (const auto& f : fibers) {
    if (is_completely_reducible(f.cls.tag)) n += f.param.orbit_size();
  }
  return n;
}

FiberParam root_param(const BinaryForm& factor, const Config& cfg) {
  if (factor.degree() == 1) return FiberParam::rational(-factor.coeff(0).rational_value(), factor.coeff(1).rational_value());
  const auto rf = algebra::adjoin_root(at_lam_one(factor).monic(), "a", cfg.max_ext_degree);
  return FiberParam::algebraic(factor, rf.root);
}

SpecialLocus special_locus(const Pencil& p, const Config& cfg) {
  require_rational(p);
  const auto q = algebra::NumberField::rationals();
  const int d = p.degree();
  std::mt19937_64 rng(cfg.seed ^ kLocusStream);
  std::optional<Mat3> shear;
  for (int attempt = 0; attempt <= cfg.shear_retries && !shear; ++attempt) {
    const Mat3 t = attempt == 0 ? forms::identity_matrix(q) : forms::random_integer_matrix(rng);
    if (!forms::shear(p.f1(), t).coeff({0, 0, d}).is_zero() && !forms::shear(p.f2(), t).coeff({0, 0, d}).is_zero()) {
      shear = t;
    }
  }
  if (!shear) throw LimitExceeded("no shear with nonzero z^d coefficients found");
  const Form g1 = forms::shear(p.f1(), *shear), g2 = forms::shear(p.f2(), *shear);
  const auto pd = forms::pseudo_divide_z(forms::pencil_hessian(g1, g2), BiForm::pencil(g1, g2));
  if (pd.remainder.is_zero()) throw InputError("every fiber divides its Hessian");

  BinaryForm raw(q, 0);
  for (const auto& [e, c] : pd.remainder.xyz_coefficients()) raw = forms::gcd(raw, c);
  // Powers of the lead form come from the pseudo-division itself; its root is
  // decided by a direct test instead.
  const BinaryForm lead = pd.lead.normalized();
  while (raw.degree() > 0) {
    auto quot = raw.divide(lead);
    if (!quot) break;
    raw = *quot;
  }
  BinaryForm rho = raw.is_zero() ? BinaryForm(q, 0, {FieldElement(q, 1)}) : raw.radical();
  {
    const FiberParam at_lead = root_param(lead, cfg);
    const Form f = p.fiber(at_lead);
    const Form h = forms::hessian(f);
    if (h.is_zero() || h.divisible_by(f)) rho *= lead;
  }
  SpecialLocus out;
  out.rho = rho.normalized();
  if (out.rho.degree() == 0) return out;
  for (const auto& fac : forms::factor_binary(out.rho, cfg.max_factor_degree)) {
    out.factors.push_back(fac);
    const FiberParam t = root_param(fac.form, cfg);
    const Form f = p.fiber(t);
    FiberClass cls = classify_fiber(f);
    if (!is_special(cls.tag)) {
      throw InconsistencyError("fiber " + t.to_string() + " on the divisibility locus does not divide its Hessian");
    }
    out.fibers.push_back({t, f, std::move(cls)});
  }
  return out;
}

}  // namespace pencil::analysis
