#pragma once

// Comparison of the two engines on toric arrangements whose characters are
// all multiples of coordinate vectors. Such a complement is a product of
// punctured lines C* - P_i, so it has an explicit compactification: a
// product of projective lines marked at 0, infinity and the points of P_i.

#include "arrform/cdga.hpp"
#include "arrform/morgan.hpp"
#include "arrform/toric.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace arrform::crosscheck {

/// Points of C* removed by the given equations in one variable, as phases
/// in [0, 1): z^k = e^{2 pi i t} contributes (t + m) / k for every m.
std::set<Rational> puncturePhases(std::span<const toric::ToricHypersurface> arr);

/// The coordinate of a character that is a nonzero multiple of a coordinate
/// vector, or nothing.
std::optional<int> coordinateOf(const ZVector& chi);

/// Product of marked projective lines for a coordinate-product arrangement;
/// nothing when some character involves two coordinates.
std::optional<morgan::CompactificationDatum> productCompactification(
    std::span<const toric::ToricHypersurface> arr, int ambientDim);

struct GradedRow {
  int degree = 0;
  int weight = 0;
  long model = 0;
  long leray = 0;
};

struct CrossCheckReport {
  bool applicable = false;
  std::string reason;
  std::vector<int> markedPoints;  // per coordinate, including 0 and infinity
  std::vector<GradedRow> rows;
  bool agree = false;
};

/// (degree, weight) dimensions of H(U) from the Leray E2 page, summed along
/// p + q = degree. Throws Refusal unless degeneration is established.
BigradedDims lerayGradedDims(std::span<const toric::ToricHypersurface> arr, int ambientDim);

CrossCheckReport crossEngineCheck(std::span<const toric::ToricHypersurface> arr, int ambientDim);

struct SelfTestLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Axioms, formality witnesses, fault detection and cross-engine agreement
/// on the builders and a fixed set of small arrangements. An extra toric
/// arrangement, if given and of coordinate-product type, joins the
/// cross-engine checks.
std::vector<SelfTestLine> modelSelfTest(std::span<const toric::ToricHypersurface> extra = {},
                                        int extraAmbientDim = 0);

}  // namespace arrform::crosscheck
