#pragma once

// Compactification data used only by the tests.

#include "arrform/morgan.hpp"

namespace fixtures {

using arrform::Element;
using arrform::GradedAlgebra;
using arrform::Rational;
using arrform::morgan::CompactificationDatum;
using arrform::morgan::Subset;

/// A compact curve of genus g with no divisor: basis 1, a_1..a_g, b_1..b_g, w
/// with a_i b_i = w = -b_i a_i.
inline CompactificationDatum compactCurve(int g) {
  std::vector<int> degrees{0};
  for (int i = 0; i < 2 * g; ++i) degrees.push_back(1);
  degrees.push_back(2);
  const int top = 2 * g + 1;
  GradedAlgebra h(degrees);
  for (int x = 0; x <= top; ++x) {
    h.setProduct(0, x, {{x, Rational(1)}});
    h.setProduct(x, 0, {{x, Rational(1)}});
  }
  for (int i = 1; i <= g; ++i) {
    h.setProduct(i, g + i, {{top, Rational(1)}});
    h.setProduct(g + i, i, {{top, Rational(-1)}});
  }
  CompactificationDatum cd;
  cd.dimension = 1;
  cd.strata.emplace(0, std::move(h));
  return cd;
}

/// Negates the part of the Gysin map (I, i) defined on degree-0 classes only.
inline void negateDegreeZeroBlock(CompactificationDatum& cd, Subset i, int component) {
  auto& g = cd.gysin.at({i, component});
  const auto& source = cd.strata.at(i);
  for (int c = 0; c < source.dimension(); ++c)
    if (source.degree(c) == 0) g.col(c) = -g.col(c);
}

inline CompactificationDatum markedSquare(int s) {
  return arrform::morgan::kunnethProduct(arrform::morgan::builderProjectiveLineMarked(s),
                                         arrform::morgan::builderProjectiveLineMarked(s));
}

}  // namespace fixtures
