#include "pencil/cli/app.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "pencil/cli/parse.hpp"
#include "pencil/cli/render.hpp"

namespace pencil::cli {

namespace {

using namespace analysis;

struct Options {
  std::string f1, f2, ext, expr;
  std::uint64_t seed = 0;
  int max_ext_degree = algebra::kDefaultMaxExtDegree;
  int max_factor_degree = algebra::kDefaultMaxFactorDegree;
  int shear_retries = 20;
  bool json = false;
  bool timings = false;
  bool boundary = false;
  bool inject_fault = false;
};

Config config_of(const Options& o) {
  Config cfg;
  cfg.seed = o.seed;
  cfg.max_ext_degree = o.max_ext_degree;
  cfg.max_factor_degree = o.max_factor_degree;
  cfg.shear_retries = o.shear_retries;
  if (const char* env = std::getenv("PENCIL_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("PENCIL_SEED is not an unsigned integer: ") + env);
    }
  }
  if (o.inject_fault) cfg.phantom_special = 1;
  return cfg;
}

algebra::FieldPtr field_of(const Options& o) {
  if (o.ext.empty()) return algebra::NumberField::rationals();
  return parse_extension(o.ext, o.max_ext_degree);
}

Form parse_named(const std::string& name, const std::string& src, const algebra::FieldPtr& k) {
  try {
    return parse_form(src, k);
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  }
}

Pencil pencil_of(const Options& o) {
  if (o.f1.empty() || o.f2.empty()) throw InputError("--f1 and --f2 are required");
  const auto k = field_of(o);
  return Pencil(parse_named("--f1", o.f1, k), parse_named("--f2", o.f2, k));
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_analyze(const Options& o, std::ostream& out, bool with_noether) {
  const Pencil p = pencil_of(o);
  const AnalysisReport r = analyze(p, config_of(o));
  Json j = report_json(r, o.timings);
  std::string text = report_text(r, o.timings);
  bool consistent = r.consistent();
  if (with_noether) {
    // Local case analysis at every base point for the fiber [1:1].
    Verdict v;
    v.hypothesis = r.k >= 3;
    Json cases = Json::array();
    std::string lines;
    for (const auto& bp : r.base_points) {
      Json c{{"point", bp.point.to_string()}};
      try {
        const NoetherCase nc = noether_hypothesis_check(p, bp.point, FiberParam::rational(1, 1));
        c["case"] = nc.tag;
        c["verified"] = nc.verified;
        c["detail"] = nc.detail;
        v.conclusion = v.conclusion && nc.verified;
        lines += "    " + bp.point.to_string() + "  case " + nc.tag + (nc.verified ? "  verified" : "  FAILED") +
                 "  " + nc.detail + "\n";
      } catch (const InputError& e) {
        c["case"] = nullptr;
        c["detail"] = e.what();
        lines += "    " + bp.point.to_string() + "  not applicable: " + e.what() + "\n";
      } catch (const InconsistencyError& e) {
        c["case"] = "iii";
        c["verified"] = false;
        c["detail"] = e.what();
        v.conclusion = false;
        lines += "    " + bp.point.to_string() + "  case iii  FAILED  " + e.what() + "\n";
      }
      cases.push_back(c);
    }
    v.detail = std::to_string(cases.size()) + " base points";
    Json nj{{"status", v.status()}, {"hypothesis", v.hypothesis}, {"conclusion", v.conclusion},
            {"detail", v.detail}, {"cases", cases}};
    j["verdicts"]["noether"] = nj;
    text += "  noether   " + v.status() + ": " + v.detail + "\n" + lines;
    consistent = consistent && v.consistent();
    text += consistent ? "consistent\n" : "INCONSISTENT\n";
  }
  emit(out, o, j, text);
  return consistent ? kOk : kInconsistent;
}

int cmd_hessian(const Options& o, std::ostream& out) {
  const Form f = parse_named("expression", o.expr, field_of(o));
  const Form h = forms::hessian(f);
  emit(out, o, Json{{"form", f.to_string()}, {"hessian", h.to_string()}, {"degree", h.degree()}},
       h.to_string() + "\n");
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Form f = parse_named("expression", o.expr, field_of(o));
  const FiberClass c = classify_fiber(f);
  Json j{{"form", f.to_string()}, {"class", to_string(c.tag)}, {"reduced", c.reduced.to_string()}};
  std::string text = class_label(c.tag) + "\n";
  if (c.quotient) {
    j["quotient"] = c.quotient->to_string();
    text += "  H/F = " + c.quotient->to_string() + "\n";
  }
  if (!c.lines.empty()) {
    Json lines = Json::array();
    for (const auto& l : c.lines) {
      lines.push_back(l.to_string());
      text += "  line " + l.to_string() + "\n";
    }
    j["lines"] = lines;
  }
  emit(out, o, j, text);
  return kOk;
}

int cmd_base_locus(const Options& o, std::ostream& out) {
  const auto base = base_locus(pencil_of(o), config_of(o));
  emit(out, o, Json{{"base_points", base_points_json(base)}, {"b_count", distinct_count(base)}},
       base_points_text(base));
  return kOk;
}

int cmd_special_fibers(const Options& o, std::ostream& out) {
  const auto locus = special_locus(pencil_of(o), config_of(o));
  emit(out, o,
       Json{{"rho", locus.rho.to_string()},
            {"s", locus.special_count()},
            {"k", locus.cr_count()},
            {"special_fibers", special_fibers_json(locus)}},
       special_fibers_text(locus));
  return kOk;
}

int cmd_noether(const Options& o, std::ostream& out) {
  const Pencil p = pencil_of(o);
  std::vector<BoundaryCondition> bc;
  if (o.boundary) bc = boundary_from_locus(p, special_locus(p, config_of(o)));
  const NoetherDecomposition dec = noether_decomposition(p, bc);
  std::string text = "A = " + dec.noetherA.to_string() + "\nB = " + dec.noetherB.to_string() +
                     "\nunique: " + (dec.unique ? "yes" : "no") + " (" + std::to_string(dec.free_variables) +
                     " free variables)\n";
  if (dec.boundary_satisfied) text += std::string("boundary satisfied: ") + (*dec.boundary_satisfied ? "yes" : "no") + "\n";
  emit(out, o, decomposition_json(dec), text);
  return kOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const Pencil p = pencil_of(o);
  const HessianFactorization hf = hessian_factorization(p, special_locus(p, config_of(o)));
  const std::string text = "C = " + hf.C.to_string() + "\np = " + hf.p.to_string() + "\nq = " + hf.q.to_string() +
                           "\nu = " + hf.u.to_string() + ", v = " + hf.v.to_string() + "\nr = " +
                           hf.r.to_string() + "\nr matches special locus: " + (hf.r_matches_locus ? "yes" : "no") +
                           "\n";
  emit(out, o, factorization_json(hf), text);
  return kOk;
}

int cmd_net(const Options& o, std::ostream& out) {
  const Pencil p = pencil_of(o);
  const Config cfg = config_of(o);
  const auto base = base_locus(p, cfg);
  const auto locus = special_locus(p, cfg);
  const NetCheck net = net_check(p, base, locus, cfg);
  emit(out, o, net_json(net), net_text(net));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pencils of plane curves: base loci, special fibers, Hessian identities."};
  app.name("pencil");
  app.require_subcommand(1);
  Options o;

  auto pencil_opts = [&](CLI::App* sub) {
    sub->add_option("--f1", o.f1, "first generator");
    sub->add_option("--f2", o.f2, "second generator");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--ext", o.ext, "extension declaration, e.g. \"t: t^2+t+1\"");
    sub->add_option("--seed", o.seed, "random seed (PENCIL_SEED overrides)");
    sub->add_option("--max-ext-degree", o.max_ext_degree)->check(CLI::PositiveNumber);
    sub->add_option("--max-factor-degree", o.max_factor_degree)->check(CLI::PositiveNumber);
    sub->add_option("--shear-retries", o.shear_retries)->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "JSON output");
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto add = [&](const char* name, const char* help, bool pencil, std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    if (pencil) pencil_opts(sub);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  add("analyze", "full analysis and verdicts", true, [&] { return cmd_analyze(o, out, false); })
      ->add_flag("--timings", o.timings, "report stage timings");
  add("hessian", "Hessian of a form", false, [&] { return cmd_hessian(o, out); })
      ->add_option("expr", o.expr, "form")
      ->required();
  add("base-locus", "common points of the generators", true, [&] { return cmd_base_locus(o, out); });
  add("special-fibers", "fibers dividing their Hessian", true, [&] { return cmd_special_fibers(o, out); });
  add("classify", "classify one curve", false, [&] { return cmd_classify(o, out); })
      ->add_option("expr", o.expr, "form")
      ->required();
  add("noether-decomp", "H = A f1 + B f2", true, [&] { return cmd_noether(o, out); })
      ->add_flag("--boundary", o.boundary, "fix free variables from the special fibers");
  add("factor-hessian", "H = C (p lam f1 + q mu f2) for CR generators", true, [&] { return cmd_factor(o, out); });
  add("net-check", "intersection counts of CR fibers", true, [&] { return cmd_net(o, out); });
  CLI::App* verify = add("verify", "all verdicts, exit 3 on a contradiction", true,
                         [&] { return cmd_analyze(o, out, true); });
  verify->add_flag("--inject-fault", o.inject_fault, "count one phantom special fiber");
  verify->add_flag("--timings", o.timings, "report stage timings");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn();
    }
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pencil::cli
