#pragma once

#include <vector>

#include "rootcircles/splitting.hpp"

namespace rootcircles {

// Everything the flatness argument needs along one root circle.
//
// curvature is the splitting of g tensor wedge^2 (g/p)^* along the circle.
// section_subbundle is its non-negative-degree part; it is re-checked
// against the only way such summands can arise (both wedge factors drawn
// from degree-0 tangent blocks).  alpha_slot_max_degree is the maximum
// degree over curvature summands with at least one wedge factor drawn from
// the dualized alpha-string block O(-2); when that block is the only
// tangent summand (dim g/p = 1) no such pair exists and the value falls
// back to -4, the degree of the contraction target in its only slot.
struct CurvatureReport {
  Root alpha;
  std::vector<AlphaString> strings;
  SplittingType tangent;
  SplittingType curvature;
  SplittingType section_subbundle;
  Int h0_curvature;
  Int alpha_slot_max_degree;
  bool contraction_vanishes;  // alpha_slot_max_degree < 0
};

// alpha must be an omitted root of p (std::invalid_argument otherwise).
CurvatureReport curvature_report(const Parabolic& p, const Root& alpha);

// The flatness verdict for G/P: one CurvatureReport per omitted root -- the
// omitted root spaces span g/p, so these circles issue in a full basis of
// directions -- and the conjunction of their contraction checks.
struct FlatnessReport {
  std::vector<CurvatureReport> per_alpha;  // omitted enumeration order
  bool verdict;
};

// Requires at least one omitted root (std::invalid_argument otherwise).
FlatnessReport flatness_report(const Parabolic& p);

}  // namespace rootcircles
