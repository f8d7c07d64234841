#include "pencil/analysis/report.hpp"

#include <chrono>

#include "pencil/errors.hpp"

namespace pencil::analysis {

namespace {

template <typename F>
auto timed(std::map<std::string, double>& timings, const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  timings[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

bool AnalysisReport::consistent() const {
  return dolga.verdict.consistent() && mult.verdict.consistent() && hessian.verdict.consistent() &&
         mainer.consistent();
}

AnalysisReport analyze(const Pencil& p, const Config& cfg) {
  AnalysisReport r;
  r.degree = p.degree();
  r.base_points = timed(r.timings_ms, "base_locus", [&] { return base_locus(p, cfg); });
  r.b_count = distinct_count(r.base_points);
  if (r.b_count < 2) throw InputError("single base point: the pencil does not satisfy |B| > 1");
  r.locus = timed(r.timings_ms, "special_locus", [&] { return special_locus(p, cfg); });
  r.k = r.locus.cr_count();
  r.s = r.locus.special_count() + cfg.phantom_special;
  r.dolga = timed(r.timings_ms, "dolga", [&] { return lemma_dolga_check(p, r.base_points, r.locus, cfg); });
  r.mult = timed(r.timings_ms, "mult", [&] { return lemma_mult_check(p, r.base_points, r.locus, cfg); });
  r.hessian = timed(r.timings_ms, "hessian", [&] { return lemma_hessian_check(p, r.base_points, r.locus, cfg); });
  r.net = timed(r.timings_ms, "net", [&] { return net_check(p, r.base_points, r.locus, cfg); });
  const int d2 = r.degree * r.degree;
  bool transversal = !r.net.pairs.empty();
  for (const auto& pc : r.net.pairs) transversal = transversal && pc.points == d2;
  r.mainer = theorem_mainer_check({r.degree, r.k, r.s, r.b_count, transversal});
  return r;
}

}  // namespace pencil::analysis
