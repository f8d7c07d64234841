#include "pencil/analysis/checks.hpp"

#include <algorithm>
#include <random>

#include "pencil/errors.hpp"
#include "pencil/forms/resultant.hpp"

namespace pencil::analysis {

namespace {

using forms::LocalExpansion;
using forms::Mat3;
using forms::ProjPoint;

constexpr std::uint64_t kDolgaStream = 0x646f6c6700000000ULL;
constexpr std::uint64_t kMultStream = 0x6d756c7400000000ULL;
constexpr std::uint64_t kHessStream = 0x6865737300000000ULL;
constexpr std::uint64_t kNetStream = 0x6e65740000000000ULL;

constexpr int kRandomFibers = 5;

// Distinct rational parameters [1:r], r in [-20, 20] \ {0}.
std::vector<FiberParam> random_params(std::mt19937_64& rng, int count) {
  std::vector<FiberParam> out;
  std::vector<long> used;
  while (static_cast<int>(out.size()) < count) {
    const long r = static_cast<long>(rng() % 41) - 20;
    if (r == 0 || std::find(used.begin(), used.end(), r) != used.end()) continue;
    used.push_back(r);
    out.push_back(FiberParam::rational(1, r));
  }
  return out;
}

struct LabeledFiber {
  std::string label;
  Form form;
};

std::vector<LabeledFiber> sample_fibers(const Pencil& p, std::mt19937_64& rng) {
  std::vector<LabeledFiber> out{{"[1:0]", p.f1()}, {"[0:1]", p.f2()}};
  for (const auto& t : random_params(rng, kRandomFibers)) out.push_back({t.to_string(), p.fiber(t)});
  return out;
}

std::string point_label(const ProjPoint& pt) {
  std::string s = pt.to_string();
  if (!pt.field()->is_rationals()) s += " over " + pt.field()->min_poly_string();
  return s;
}

}  // namespace

std::string Verdict::status() const {
  if (vacuous) return "vacuous";
  if (hypothesis) return conclusion ? "holds" : "violated";
  return conclusion ? "hypothesis not met; conclusion observed" : "hypothesis not met; conclusion fails";
}

DolgaCheck lemma_dolga_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                             const Config& cfg) {
  DolgaCheck out;
  out.verdict.hypothesis = locus.special_count() >= 4;
  std::mt19937_64 rng(cfg.seed ^ kDolgaStream);
  std::vector<FiberParam> params{FiberParam::rational(1, 1)};
  for (const auto& t : random_params(rng, std::max(0, cfg.samples - 1))) params.push_back(t);
  const BiForm h = p.hessian_family();
  for (const auto& t : params) {
    const Form ht = h.specialize(t.lam, t.mu);
    for (const auto& bp : base) {
      const FieldElement v = ht.evaluate(bp.point.coords());
      if (!v.is_zero() && !out.witness_value) {
        out.witness_param = t;
        out.witness_point = bp.point;
        out.witness_value = v;
      }
      if (!v.is_zero() && out.witness_param && out.witness_param->to_string() == t.to_string()) {
        out.nonzero.emplace_back(bp.point, v);
      }
    }
  }
  out.samples = static_cast<int>(params.size());
  out.verdict.conclusion = !out.witness_value.has_value();
  out.verdict.detail = out.witness_value ? "H" + out.witness_param->to_string() + " at " +
                                               point_label(*out.witness_point) + " = " +
                                               out.witness_value->to_string()
                                         : "H vanishes at every base point for " + std::to_string(out.samples) +
                                               " parameters";
  return out;
}

MultCheck lemma_mult_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                           const Config& cfg) {
  MultCheck out;
  out.verdict.hypothesis = locus.cr_count() >= 3;
  std::mt19937_64 rng(cfg.seed ^ kMultStream);
  const auto fibers = sample_fibers(p, rng);
  out.fibers_per_point = static_cast<int>(fibers.size());
  for (const auto& bp : base) {
    const Mat3 chart = forms::chart_at(bp.point);
    std::vector<LocalExpansion> ex;
    for (const auto& f : fibers) ex.push_back(forms::local_expansion(f.form, bp.point, chart));
    std::string problem;
    for (std::size_t i = 0; i < ex.size() && problem.empty(); ++i) {
      if (ex[i].mult != ex[0].mult) {
        problem = "multiplicity " + std::to_string(ex[i].mult) + " on " + fibers[i].label + " but " +
                  std::to_string(ex[0].mult) + " on " + fibers[0].label;
      }
      for (std::size_t j = i + 1; j < ex.size() && problem.empty(); ++j) {
        const BinaryForm g = forms::gcd(ex[i].tangent_cone(), ex[j].tangent_cone());
        if (g.degree() > 0) {
          problem = "fibers " + fibers[i].label + " and " + fibers[j].label + " share the tangent factor " +
                    g.to_string();
        }
      }
    }
    if (!problem.empty()) {
      out.verdict.conclusion = false;
      out.witness_point = bp.point;
      out.verdict.detail = "at " + point_label(bp.point) + ": " + problem;
      return out;
    }
  }
  out.verdict.detail = "equal multiplicities and distinct tangents on " + std::to_string(out.fibers_per_point) +
                       " fibers at every base point";
  return out;
}

HessianCheck lemma_hessian_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                                 const Config& cfg) {
  HessianCheck out;
  std::mt19937_64 rng(cfg.seed ^ kHessStream);
  auto fibers = sample_fibers(p, rng);
  for (const auto& sf : locus.fibers) fibers.push_back({sf.param.to_string(), sf.fiber});
  bool any = false;
  for (const auto& bp : base) {
    if (bp.mult < 2) continue;
    any = true;
    const Mat3 chart = forms::chart_at(bp.point);
    for (const auto& f : fibers) {
      if (!common_field(f.form.field(), bp.point.field())) continue;
      const LocalExpansion ef = forms::local_expansion(f.form, bp.point, chart);
      if (ef.mult < 2) continue;
      const Form h = forms::hessian(f.form);
      if (ef.is_cone_at_point() || h.is_zero() || forms::reduced(f.form).degree() < f.form.degree()) {
        ++out.degenerate;
        continue;
      }
      ++out.checked;
      const LocalExpansion eh = forms::local_expansion(h, bp.point, chart);
      const int want = 3 * ef.mult - 4;
      const bool divides = eh.mult == want && eh.tangent_cone().divide(ef.tangent_cone()).has_value();
      if ((eh.mult != want || !divides) && out.verdict.conclusion) {
        out.verdict.conclusion = false;
        out.verdict.detail = "fiber " + f.label + " at " + point_label(bp.point) + ": m = " +
                             std::to_string(ef.mult) + ", m_P(H) = " + std::to_string(eh.mult);
      }
    }
  }
  if (!any) {
    out.verdict.hypothesis = false;
    out.verdict.vacuous = true;
    out.verdict.detail = "no base point of multiplicity at least 2";
  } else if (out.verdict.conclusion) {
    out.verdict.detail = std::to_string(out.checked) + " fiber/point pairs checked, " +
                         std::to_string(out.degenerate) + " degenerate";
  }
  return out;
}

NoetherCase noether_hypothesis_check(const Pencil& p, const ProjPoint& point, const FiberParam& t) {
  FieldPtr k = common_field(point.field(), t.field());
  if (k) k = common_field(k, p.field());
  if (!k) throw AlgebraError("point, parameter and pencil live in different fields");
  const ProjPoint pt = point.lift_to(k);
  if (!p.f1().evaluate(pt.coords()).is_zero() || !p.f2().evaluate(pt.coords()).is_zero()) {
    throw InputError("point " + pt.to_string() + " is not a base point");
  }
  const Mat3 chart = forms::chart_at(pt);
  const LocalExpansion e1 = forms::local_expansion(p.f1(), pt, chart);
  const LocalExpansion e2 = forms::local_expansion(p.f2(), pt, chart);
  if (e1.mult != e2.mult) throw InputError("generators have different multiplicities at " + pt.to_string());

  NoetherCase out;
  out.m = e1.mult;
  const Form f = p.fiber(t).lift_to(k);
  const Form h = forms::hessian(f);
  out.h_vanishes = h.evaluate(pt.coords()).is_zero();
  std::optional<LocalExpansion> eh;
  if (!h.is_zero()) {
    eh = forms::local_expansion(h, pt, chart);
    out.h_mult = eh->mult;
  }
  if (out.m == 1) {
    out.tag = "i";
    out.verified = true;
    out.detail = "m = 1 on both generators";
    return out;
  }
  if (out.m >= 3) {
    out.tag = "ii";
    out.verified = out.h_mult == 3 * out.m - 4 && 3 * out.m - 4 >= 2 * out.m - 1;
    out.detail = "m_P(H) = " + std::to_string(out.h_mult) + ", 3m-4 = " + std::to_string(3 * out.m - 4);
    return out;
  }
  out.tag = "iii";
  const LocalExpansion ef = forms::local_expansion(f, pt, chart);
  const BinaryForm& f2 = ef.components[2];
  const BinaryForm h2 = eh && eh->components.size() > 2 ? eh->components[2] : BinaryForm(k, 2, forms::kXY);
  if (f2.is_zero()) throw InconsistencyError("inconsistent local data: the fiber has no quadratic component");
  int pivot = 0;
  while (f2.coeff(pivot).is_zero()) ++pivot;
  const FieldElement c = h2.coeff(pivot) / f2.coeff(pivot);
  if (h2 != f2.scaled(c)) {
    throw InconsistencyError("inconsistent local data: H^(2) is not a multiple of F^(2) at " + pt.to_string());
  }
  out.c = c;
  // H1 = H - c F z^(2d-6); in the chart z = 1, so its components are H^(i) - c F^(i).
  const std::size_t top = eh ? eh->components.size() : 0;
  for (std::size_t i = 0; i < std::max(top, ef.components.size()); ++i) {
    BinaryForm hi = i < top ? eh->components[i] : BinaryForm(k, static_cast<int>(i), forms::kXY);
    if (i < ef.components.size()) hi -= ef.components[i].scaled(c);
    if (!hi.is_zero()) {
      out.h1_mult = static_cast<int>(i);
      break;
    }
  }
  out.verified = out.h1_mult < 0 || out.h1_mult >= 3;
  out.detail = "c = " + c.to_string() + ", m_P(H) = " + std::to_string(out.h_mult) + ", m_P(H1) = " +
               (out.h1_mult < 0 ? std::string("inf") : std::to_string(out.h1_mult));
  return out;
}

MainerCheck theorem_mainer_check(const MainerInput& in) {
  MainerCheck out;
  out.input = in;
  const std::string counts = "k = " + std::to_string(in.k) + ", s = " + std::to_string(in.s);
  out.part_i.hypothesis = in.k >= 3;
  out.part_i.conclusion = in.s <= 4 && in.s <= in.k + 1;
  out.part_i.detail = counts;
  out.part_ii.hypothesis = in.k >= 3 && in.s >= 4;
  out.part_ii.conclusion = in.s == in.k && in.b_count == in.degree * in.degree && in.transversal;
  out.part_ii.detail = counts + ", |B| = " + std::to_string(in.b_count) + ", d^2 = " +
                       std::to_string(in.degree * in.degree) + (in.transversal ? ", transversal" : ", not transversal");
  return out;
}

int intersection_count(const Form& f, const Form& g, std::uint64_t seed, int attempts) {
  const FieldPtr k = common_field(f.field(), g.field());
  if (!k) throw AlgebraError("intersection of forms over different fields");
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int a = 0; a < attempts; ++a) {
    const Mat3 t = forms::random_integer_matrix(rng);
    const Form fs = forms::shear(f.lift_to(k), t), gs = forms::shear(g.lift_to(k), t);
    if (fs.coeff({0, 0, fs.degree()}).is_zero() || gs.coeff({0, 0, gs.degree()}).is_zero()) continue;
    const BinaryForm r = forms::resultant_z(fs, gs);
    if (r.is_zero()) return -1;
    best = std::max(best, r.radical().degree());
  }
  return best;
}

NetCheck net_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus, const Config& cfg) {
  NetCheck out;
  out.d = p.degree();
  out.k = locus.cr_count();
  const int b = distinct_count(base);
  const int d2 = out.d * out.d;

  struct Member {
    std::string label;
    Form form;
  };
  std::vector<Member> members;
  std::vector<std::pair<std::string, int>> unexpanded;
  for (const auto& sf : locus.fibers) {
    if (!is_completely_reducible(sf.cls.tag)) continue;
    members.push_back({sf.param.to_string(), sf.fiber});
    if (sf.param.orbit_size() == 2) {
      const FiberParam c = quadratic_conjugate(sf.param);
      members.push_back({c.to_string(), p.fiber(c)});
    } else if (sf.param.orbit_size() > 2) {
      unexpanded.emplace_back(sf.param.to_string(), sf.param.orbit_size());
    }
  }
  std::uint64_t stream = cfg.seed ^ kNetStream;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      PairCount pc{members[i].label, members[j].label, b, false};
      if (common_field(members[i].form.field(), members[j].form.field())) {
        pc.points = intersection_count(members[i].form, members[j].form, ++stream);
        pc.direct = true;
      }
      out.pairs.push_back(pc);
    }
  }
  for (const auto& [label, n] : unexpanded) out.pairs.push_back({label, "conjugates (" + std::to_string(n) + ")", b, false});

  bool all = true;
  for (const auto& pc : out.pairs) all = all && pc.points == d2;
  out.is_net = out.k >= 3 && b == d2 && all;
  if (out.is_net) {
    out.detail = "(" + std::to_string(out.k) + "," + std::to_string(out.d) + ")-net";
  } else if (out.k < 3) {
    out.detail = "fewer than three completely reducible fibers";
  } else {
    out.detail = "|B| = " + std::to_string(b) + ", d^2 = " + std::to_string(d2);
  }
  return out;
}

}  // namespace pencil::analysis
