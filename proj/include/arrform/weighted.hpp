#pragma once

#include <vector>

namespace arrform {

/// Graded dimensions with the weight carried by each degree. A degree whose
/// space is not pure has no single weight; callers that need mixed data use
/// their own tables.
struct WeightedDims {
  std::vector<long> dims;
  std::vector<int> weights;

  bool operator==(const WeightedDims&) const = default;
};

}  // namespace arrform
