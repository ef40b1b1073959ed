#pragma once

// Small arrangement constructors shared by the test suites.

#include "arrform/matroid.hpp"
#include "arrform/toric.hpp"

#include <vector>

namespace fixtures {

using arrform::QVector;
using arrform::Rational;
using arrform::ZVector;
using arrform::matroid::AffineHyperplane;
using arrform::toric::Phase;
using arrform::toric::ToricHypersurface;

inline ToricHypersurface toricEq(std::vector<long> chi, Rational phase, int label = 0) {
  ToricHypersurface h;
  h.chi = ZVector(static_cast<Eigen::Index>(chi.size()));
  for (std::size_t i = 0; i < chi.size(); ++i) h.chi(i) = chi[i];
  h.phase = Phase(phase);
  h.label = label;
  return h;
}

inline AffineHyperplane affineEq(std::vector<long> normal, Rational constant, int label = 0) {
  AffineHyperplane h;
  h.normal = QVector(static_cast<Eigen::Index>(normal.size()));
  for (std::size_t i = 0; i < normal.size(); ++i) h.normal(i) = Rational(normal[i]);
  h.constant = constant;
  h.label = label;
  return h;
}

inline void relabel(std::vector<AffineHyperplane>& arr) {
  for (std::size_t i = 0; i < arr.size(); ++i) arr[i].label = static_cast<int>(i);
}

inline std::vector<AffineHyperplane> booleanArrangement(int n) {
  std::vector<AffineHyperplane> out;
  for (int i = 0; i < n; ++i) {
    std::vector<long> v(n, 0);
    v[i] = 1;
    out.push_back(affineEq(v, 0));
  }
  relabel(out);
  return out;
}

inline std::vector<AffineHyperplane> braidArrangement(int n) {
  std::vector<AffineHyperplane> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<long> v(n, 0);
      v[i] = 1;
      v[j] = -1;
      out.push_back(affineEq(v, 0));
    }
  relabel(out);
  return out;
}

inline std::vector<AffineHyperplane> concurrentLines() {
  std::vector<AffineHyperplane> out{affineEq({1, 0}, 0), affineEq({0, 1}, 0), affineEq({1, 1}, 0)};
  relabel(out);
  return out;
}

/// Lines y = k x + k^2 for k = 1..m: pairwise non-parallel, no three concurrent.
inline std::vector<AffineHyperplane> genericLines(int m) {
  std::vector<AffineHyperplane> out;
  for (long k = 1; k <= m; ++k) out.push_back(affineEq({-k, 1}, Rational(k * k)));
  relabel(out);
  return out;
}

}  // namespace fixtures
