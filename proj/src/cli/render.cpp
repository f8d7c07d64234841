#include "pencil/cli/render.hpp"

#include <cstdio>
#include <sstream>

namespace pencil::cli {

namespace {

using namespace analysis;

bool algebraic(const algebra::FieldPtr& k) { return !k->is_rationals(); }

void add_field_info(Json& j, const algebra::FieldPtr& k, const std::vector<FieldElement>& values) {
  if (!algebraic(k)) return;
  j["minpoly"] = k->min_poly_string();
  Json approx = Json::array();
  for (const auto& v : values) approx.push_back(algebra::format_approx(v.approx()));
  j["approx"] = approx;
}

Json verdict_json(const Verdict& v) {
  return Json{{"status", v.status()}, {"hypothesis", v.hypothesis}, {"conclusion", v.conclusion},
              {"detail", v.detail}};
}

std::string field_note(const algebra::FieldPtr& k) {
  if (!algebraic(k)) return "";
  return "  (" + k->min_poly_string() + " = 0, " + k->generator_name() + " ~ " +
         algebra::format_approx(k->approx_generator()) + ")";
}

}  // namespace

std::string class_label(FiberTag tag) {
  if (tag == FiberTag::kConcurrentLines) return to_string(tag) + " (completely reducible)";
  return to_string(tag);
}

Json point_json(const forms::ProjPoint& p) {
  Json j{{"point", p.to_string()}};
  add_field_info(j, p.field(), {p.coords().begin(), p.coords().end()});
  return j;
}

Json base_points_json(const std::vector<BasePoint>& base) {
  Json out = Json::array();
  for (const auto& bp : base) {
    Json j{{"point", bp.point.to_string()},
           {"mult", bp.mult},
           {"tangent_cone", bp.tangent_cone.to_string()},
           {"int_mult", bp.int_mult},
           {"orbit", bp.orbit_size}};
    add_field_info(j, bp.point.field(), {bp.point.coords().begin(), bp.point.coords().end()});
    out.push_back(j);
  }
  return out;
}

Json special_fibers_json(const SpecialLocus& locus) {
  Json out = Json::array();
  for (const auto& sf : locus.fibers) {
    Json j{{"param", sf.param.to_string()}, {"class", to_string(sf.cls.tag)}};
    if (sf.cls.quotient) j["quotient"] = sf.cls.quotient->to_string();
    j["orbit"] = sf.param.orbit_size();
    j["factor"] = sf.param.factor().to_string();
    add_field_info(j, sf.param.field(), {sf.param.lam, sf.param.mu});
    out.push_back(j);
  }
  return out;
}

Json net_json(const NetCheck& net) {
  Json pairs = Json::array();
  for (const auto& pc : net.pairs) {
    pairs.push_back({{"first", pc.first}, {"second", pc.second}, {"points", pc.points}, {"direct", pc.direct}});
  }
  Json j{{"is_net", net.is_net}};
  j["type"] = net.is_net ? Json::array({net.k, net.d}) : Json(nullptr);
  j["detail"] = net.detail;
  j["pairs"] = pairs;
  return j;
}

Json report_json(const AnalysisReport& r, bool timings) {
  Json dolga = verdict_json(r.dolga.verdict);
  dolga["samples"] = r.dolga.samples;
  if (r.dolga.witness_value) {
    dolga["witness"] = {{"param", r.dolga.witness_param->to_string()},
                        {"point", r.dolga.witness_point->to_string()},
                        {"value", r.dolga.witness_value->to_string()}};
    Json nonzero = Json::array();
    for (const auto& [pt, v] : r.dolga.nonzero) nonzero.push_back({{"point", pt.to_string()}, {"value", v.to_string()}});
    dolga["nonzero"] = nonzero;
  }
  Json mult = verdict_json(r.mult.verdict);
  mult["fibers_per_point"] = r.mult.fibers_per_point;
  Json hessian = verdict_json(r.hessian.verdict);
  hessian["checked"] = r.hessian.checked;
  hessian["degenerate"] = r.hessian.degenerate;
  Json mainer_i = verdict_json(r.mainer.part_i);
  mainer_i["k"] = r.k;
  mainer_i["s"] = r.s;
  mainer_i["rho"] = r.locus.rho.to_string();
  Json mainer_ii = verdict_json(r.mainer.part_ii);
  mainer_ii["b_count"] = r.b_count;
  mainer_ii["transversal"] = r.mainer.input.transversal;

  Json j;
  j["degree"] = r.degree;
  j["base_points"] = base_points_json(r.base_points);
  j["b_count"] = r.b_count;
  j["special_fibers"] = special_fibers_json(r.locus);
  j["k"] = r.k;
  j["verdicts"] = {{"dolga", dolga},      {"mult", mult},           {"hessian", hessian},
                   {"mainer_i", mainer_i}, {"mainer_ii", mainer_ii}, {"net", net_json(r.net)}};
  j["timings_ms"] = Json::object();
  if (timings) {
    for (const auto& [name, ms] : r.timings_ms) j["timings_ms"][name] = ms;
  }
  return j;
}

Json decomposition_json(const NoetherDecomposition& dec) {
  Json j{{"A", dec.noetherA.to_string()},
         {"B", dec.noetherB.to_string()},
         {"unique", dec.unique},
         {"free_variables", dec.free_variables}};
  if (dec.boundary_satisfied) j["boundary_satisfied"] = *dec.boundary_satisfied;
  return j;
}

Json factorization_json(const HessianFactorization& hf) {
  return Json{{"C", hf.C.to_string()},
              {"p", hf.p.to_string()},
              {"q", hf.q.to_string()},
              {"u", hf.u.to_string()},
              {"v", hf.v.to_string()},
              {"X", hf.X.to_string()},
              {"Y", hf.Y.to_string()},
              {"r", hf.r.to_string()},
              {"r_matches_locus", hf.r_matches_locus}};
}

std::string base_points_text(const std::vector<BasePoint>& base) {
  std::ostringstream out;
  out << "base points: " << distinct_count(base) << " distinct, intersection total " << intersection_total(base)
      << "\n";
  for (const auto& bp : base) {
    out << "  " << bp.point.to_string() << "  mult " << bp.mult << "  int " << bp.int_mult << "  cone "
        << bp.tangent_cone.to_string();
    if (bp.orbit_size > 1) out << "  orbit " << bp.orbit_size;
    out << field_note(bp.point.field()) << "\n";
  }
  return out.str();
}

std::string special_fibers_text(const SpecialLocus& locus) {
  std::ostringstream out;
  out << "special locus: " << locus.rho.to_string() << "\n";
  out << "special fibers: " << locus.special_count() << " (" << locus.cr_count() << " completely reducible)\n";
  for (const auto& sf : locus.fibers) {
    out << "  " << sf.param.to_string() << "  " << class_label(sf.cls.tag);
    if (sf.cls.quotient) out << "  H/F = " << sf.cls.quotient->to_string();
    if (sf.param.orbit_size() > 1) out << "  orbit " << sf.param.orbit_size();
    out << field_note(sf.param.field()) << "\n";
  }
  return out.str();
}

std::string net_text(const NetCheck& net) {
  std::ostringstream out;
  out << "net: " << (net.is_net ? "yes" : "no") << ", " << net.detail << "\n";
  for (const auto& pc : net.pairs) {
    out << "  " << pc.first << " x " << pc.second << ": " << pc.points << (pc.direct ? "" : " (from |B|)") << "\n";
  }
  return out.str();
}

std::string verdicts_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto line = [&](const char* name, const Verdict& v) {
    char head[32];
    std::snprintf(head, sizeof head, "  %-10s", name);
    out << head << v.status() << ": " << v.detail << "\n";
  };
  out << "verdicts:\n";
  line("dolga", r.dolga.verdict);
  for (const auto& [pt, v] : r.dolga.nonzero) {
    out << "    H" << r.dolga.witness_param->to_string() << "(" << pt.to_string() << ") = " << v.to_string() << "\n";
  }
  line("mult", r.mult.verdict);
  line("hessian", r.hessian.verdict);
  line("mainer i", r.mainer.part_i);
  line("mainer ii", r.mainer.part_ii);
  return out.str();
}

std::string report_text(const AnalysisReport& r, bool timings) {
  std::ostringstream out;
  out << "degree: " << r.degree << "\n"
      << base_points_text(r.base_points) << special_fibers_text(r.locus) << net_text(r.net) << verdicts_text(r);
  if (timings) {
    out << "timings:\n";
    for (const auto& [name, ms] : r.timings_ms) out << "  " << name << " " << ms << " ms\n";
  }
  return out.str();
}

}  // namespace pencil::cli
