#pragma once

#include <map>
#include <string>
#include <vector>

#include "pencil/analysis/checks.hpp"

namespace pencil::analysis {

struct AnalysisReport {
  int degree = 0;
  std::vector<BasePoint> base_points;
  int b_count = 0;
  SpecialLocus locus;
  int k = 0;
  int s = 0;
  DolgaCheck dolga;
  MultCheck mult;
  HessianCheck hessian;
  MainerCheck mainer;
  NetCheck net;
  std::map<std::string, double> timings_ms;

  // No checked statement is contradicted.
  bool consistent() const;
};

// Full analysis of a rational pencil. Throws InputError when |B| = 1.
AnalysisReport analyze(const Pencil& p, const Config& cfg = {});

}  // namespace pencil::analysis
