#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/analysis/locus.hpp"

namespace pencil::analysis {

// Outcome of checking one statement on a concrete pencil. A statement is
// contradicted only when its hypothesis holds and the conclusion fails.
struct Verdict {
  bool hypothesis = true;
  bool conclusion = true;
  std::string detail;

  bool consistent() const { return !hypothesis || conclusion; }
  // "holds", "violated", "hypothesis not met; conclusion observed",
  // "hypothesis not met; conclusion fails" or "vacuous".
  std::string status() const;
  bool vacuous = false;
};

// Every Hessian of the family passes through every base point. Hypothesis:
// at least four special fibers.
struct DolgaCheck {
  Verdict verdict;
  int samples = 0;
  std::optional<FiberParam> witness_param;
  std::optional<forms::ProjPoint> witness_point;
  std::optional<FieldElement> witness_value;
  // Every base point where H(witness_param) is nonzero, with its value.
  std::vector<std::pair<forms::ProjPoint, FieldElement>> nonzero;
};

// Samples start with (1, 1), then cfg.samples - 1 random rational parameters.
DolgaCheck lemma_dolga_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                             const Config& cfg = {});

// Multiplicity of each base point is the same on every fiber and no two fibers
// share a tangent line there. Hypothesis: at least three CR fibers.
struct MultCheck {
  Verdict verdict;
  int fibers_per_point = 0;
  std::optional<forms::ProjPoint> witness_point;
};

MultCheck lemma_mult_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                           const Config& cfg = {});

// At base points with m = m_P(F) > 1: m_P(hessian F) = 3m - 4 and the tangent
// cone of F divides the matching Hessian component. Non-reduced fibers and
// unions of lines through P are counted as degenerate and skipped.
struct HessianCheck {
  Verdict verdict;
  int checked = 0;
  int degenerate = 0;
};

HessianCheck lemma_hessian_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                                 const Config& cfg = {});

// Local case analysis behind the Noether conditions at a base point for the
// fiber at t.
struct NoetherCase {
  std::string tag;      // "i", "ii", "iii"
  int m = 0;            // common multiplicity of the generators at P
  int h_mult = -1;      // m_P(H(t)), -1 when H(t) vanishes identically
  bool h_vanishes = false;  // H(t)(P) = 0
  std::optional<FieldElement> c;  // case iii scalar
  int h1_mult = -1;     // case iii: m_P(H - c F z^(2d-6))
  bool verified = false;
  std::string detail;
};

// Throws InputError when P is not a base point or the generators have
// different multiplicities there, InconsistencyError when case iii admits no
// scalar c.
NoetherCase noether_hypothesis_check(const Pencil& p, const forms::ProjPoint& point, const FiberParam& t);

// Counts feeding the bound on special fibers.
struct MainerInput {
  int degree = 0;
  int k = 0;             // CR fibers
  int s = 0;             // special fibers
  int b_count = 0;       // |B|
  bool transversal = false;  // every pair of CR fibers meets in d^2 points
};

struct MainerCheck {
  MainerInput input;
  Verdict part_i;   // k >= 3 implies s <= 4 and s <= k + 1
  Verdict part_ii;  // k >= 3 and s >= 4 imply s = k and transversality
  bool consistent() const { return part_i.consistent() && part_ii.consistent(); }
};

MainerCheck theorem_mainer_check(const MainerInput& in);

struct PairCount {
  std::string first;
  std::string second;
  int points = 0;
  bool direct = false;  // counted by a resultant rather than inferred from |B|
};

struct NetCheck {
  bool is_net = false;
  int k = 0;
  int d = 0;
  std::vector<PairCount> pairs;
  std::string detail;
};

// Distinct intersection points of every pair of CR fibers. Pairs living in one
// field are counted from the squarefree resultant after random shears; other
// pairs use that two distinct fibers meet exactly in the base locus.
NetCheck net_check(const Pencil& p, const std::vector<BasePoint>& base, const SpecialLocus& locus,
                   const Config& cfg = {});

// Distinct common points of two forms over one field (maximum over a few
// random projections).
int intersection_count(const Form& f, const Form& g, std::uint64_t seed, int attempts = 3);

}  // namespace pencil::analysis
