#pragma once

#include <string>

#include <json.hpp>

#include "pencil/analysis/noether.hpp"
#include "pencil/analysis/report.hpp"

namespace pencil::cli {

using Json = nlohmann::ordered_json;

// "CONCURRENT_LINES (completely reducible)" for cones, the bare tag otherwise.
std::string class_label(analysis::FiberTag tag);

Json point_json(const forms::ProjPoint& p);
Json base_points_json(const std::vector<analysis::BasePoint>& base);
Json special_fibers_json(const analysis::SpecialLocus& locus);
Json net_json(const analysis::NetCheck& net);
// Full report; timings_ms stays empty unless `timings` is set.
Json report_json(const analysis::AnalysisReport& r, bool timings);
Json decomposition_json(const analysis::NoetherDecomposition& dec);
Json factorization_json(const analysis::HessianFactorization& hf);

std::string base_points_text(const std::vector<analysis::BasePoint>& base);
std::string special_fibers_text(const analysis::SpecialLocus& locus);
std::string net_text(const analysis::NetCheck& net);
std::string verdicts_text(const analysis::AnalysisReport& r);
std::string report_text(const analysis::AnalysisReport& r, bool timings);

}  // namespace pencil::cli
