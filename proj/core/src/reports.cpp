#include "rootcircles/reports.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootcircles {

CurvatureReport curvature_report(const Parabolic& p, const Root& alpha) {
  CurvatureReport report;
  report.alpha = alpha;
  report.strings = string_inventory(p, alpha);  // validates alpha

  SplittingType tangent;
  for (const auto& s : report.strings) tangent.summands[s.d_s] += s.n_s;
  report.tangent = tangent;

  const auto adjoint = adjoint_splitting(p, alpha);
  report.curvature = tensor(adjoint, wedge2(dual(tangent)));
  report.h0_curvature = h0(report.curvature);

  // non-negative part of the curvature splitting...
  SplittingType nonneg;
  for (const auto& [degree, mult] : report.curvature.summands)
    if (degree >= 0) nonneg.summands[degree] += mult;
  // ...which can only arise from wedge pairs of two distinct degree-0
  // tangent summands, each tensored against the trivial adjoint block
  const auto it = tangent.summands.find(0);
  const Int m0 = it == tangent.summands.end() ? 0 : it->second;
  SplittingType expected;
  if (m0 >= 2) expected.summands[0] = p.rs.dim_g() * m0 * (m0 - 1) / 2;
  if (nonneg != expected)
    throw std::logic_error(
        "curvature section bundle disagrees with its direct derivation");
  report.section_subbundle = nonneg;

  // the contraction slot pairs the dualized alpha-string block O(-2) with
  // every other string's dual block O(-d); its top degree is -2 - min d
  const bool single_string = report.strings.size() == 1;
  if (single_string) {
    report.alpha_slot_max_degree = -4;
  } else {
    Int min_other = 0;
    bool seen = false;
    for (const auto& s : report.strings) {
      if (s.nodes.front().v == alpha.c) continue;  // the alpha-string itself
      if (!seen || s.d_s < min_other) min_other = s.d_s;
      seen = true;
    }
    report.alpha_slot_max_degree = -2 - min_other;
  }
  report.contraction_vanishes = report.alpha_slot_max_degree < 0;
  return report;
}

FlatnessReport flatness_report(const Parabolic& p) {
  if (p.omitted.empty())
    throw std::invalid_argument(
        "flatness report needs a proper parabolic (no crossed node gives "
        "no root circles)");
  FlatnessReport report;
  report.verdict = true;
  for (const auto& alpha : p.omitted) {
    report.per_alpha.push_back(curvature_report(p, alpha));
    report.verdict = report.verdict && report.per_alpha.back().contraction_vanishes;
  }
  return report;
}

}  // namespace rootcircles
