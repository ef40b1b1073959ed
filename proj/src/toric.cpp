#include "arrform/toric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arrform::toric {

namespace {

std::string makeKey(const ZMatrix& span, const std::vector<Phase>& phases) {
  std::string key = toString(span) + "|";
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (i) key += ',';
    key += phases[i].value().str();
  }
  return key;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Layer::Layer(ZMatrix span, std::vector<Phase> phases)
    : span_(std::move(span)), phases_(std::move(phases)) {
  if (static_cast<Eigen::Index>(phases_.size()) != span_.rows())
    throw std::invalid_argument("layer needs one phase per span row");
  key_ = makeKey(span_, phases_);
}

Layer Layer::ambient(int n) { return Layer(ZMatrix(0, n), {}); }

std::optional<Phase> Layer::phaseOf(const ZVector& v) const {
  const auto coords = latticeCoordinates(span_, v);
  if (!coords) return std::nullopt;
  Phase total;
  for (Eigen::Index i = 0; i < coords->size(); ++i) total = total + phases_[i].scaled((*coords)(i));
  return total;
}

bool Layer::contains(const Layer& smaller) const {
  for (Eigen::Index i = 0; i < span_.rows(); ++i) {
    const auto p = smaller.phaseOf(span_.row(i).transpose());
    if (!p || !(*p == phases_[i])) return false;
  }
  return true;
}

bool canonicalLess(const Layer& a, const Layer& b) {
  if (a.codim() != b.codim()) return a.codim() < b.codim();
  return a.key() < b.key();
}

std::vector<Layer> solveCharacterSystem(const ZMatrix& rows, std::span<const Phase> phases) {
  const int n = static_cast<int>(rows.cols());
  if (rows.rows() == 0) return {Layer::ambient(n)};

  const auto snf = smithNormalForm(rows);
  int r = 0;
  while (r < static_cast<int>(snf.diag.size()) && snf.diag[r] != 0) ++r;

  // Transformed right-hand side U t; rows past the rank must vanish mod 1.
  std::vector<Rational> rhs(rows.rows(), Rational(0));
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j < rows.rows(); ++j)
      rhs[i] += Rational(snf.left(i, j)) * phases[j].value();
  for (Eigen::Index i = r; i < rows.rows(); ++i)
    if (!isIntegral(rhs[i])) return {};

  const ZMatrix basis = snf.rightInverse.topRows(r);
  const ZMatrix hermite = hermiteBasis(basis);
  std::vector<ZVector> change;  // hermite row i = change[i]^T * basis
  for (Eigen::Index i = 0; i < hermite.rows(); ++i)
    change.push_back(*latticeCoordinates(basis, hermite.row(i).transpose()));

  std::vector<Integer> choice(r, Integer(0));
  std::vector<Layer> out;
  for (;;) {
    std::vector<Phase> onBasis;
    for (int j = 0; j < r; ++j)
      onBasis.emplace_back((rhs[j] + Rational(choice[j])) / Rational(snf.diag[j]));
    std::vector<Phase> onHermite;
    for (int i = 0; i < r; ++i) {
      Phase p;
      for (int j = 0; j < r; ++j) p = p + onBasis[j].scaled(change[i](j));
      onHermite.push_back(p);
    }
    out.emplace_back(hermite, std::move(onHermite));

    int pos = 0;
    while (pos < r) {
      choice[pos] += 1;
      if (choice[pos] < snf.diag[pos]) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
  }
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

void validate(std::span<const ToricHypersurface> arr, int ambientDim) {
  if (ambientDim < 0) throw std::invalid_argument("negative torus dimension");
  for (const auto& h : arr) {
    if (h.chi.size() != ambientDim)
      throw std::invalid_argument("character of hypersurface " + std::to_string(h.label) +
                                  " has length " + std::to_string(h.chi.size()) +
                                  ", expected " + std::to_string(ambientDim));
    if (isZero(h.chi))
      throw std::invalid_argument("hypersurface " + std::to_string(h.label) +
                                  " has the zero character");
  }
}

std::vector<Layer> intersectHypersurfaces(std::span<const ToricHypersurface> arr,
                                          std::span<const int> subset, int ambientDim) {
  validate(arr, ambientDim);
  ZMatrix rows(static_cast<Eigen::Index>(subset.size()), ambientDim);
  std::vector<Phase> phases;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const int i = subset[k];
    if (i < 0 || i >= static_cast<int>(arr.size()))
      throw std::out_of_range("hypersurface index " + std::to_string(i) + " out of range");
    rows.row(k) = arr[i].chi.transpose();
    phases.push_back(arr[i].phase);
  }
  return solveCharacterSystem(rows, phases);
}

int LayerPoset::indexOf(const Layer& l) const {
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i] == l) return static_cast<int>(i);
  return -1;
}

bool LayerPoset::above(int i, int j) const {
  if (i == j) return true;
  std::vector<bool> seen(layers.size(), false);
  std::vector<int> stack{i};
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (const auto& [hi, lo] : covers) {
      if (hi != cur || seen[lo]) continue;
      if (lo == j) return true;
      seen[lo] = true;
      stack.push_back(lo);
    }
  }
  return false;
}

LayerPoset buildLayerPoset(std::span<const ToricHypersurface> arr, int ambientDim) {
  validate(arr, ambientDim);
  LayerPoset poset;
  poset.ambientDim = ambientDim;
  poset.byCodim.push_back({Layer::ambient(ambientDim)});

  for (int q = 0; q < ambientDim; ++q) {
    std::map<std::string, Layer> next;
    for (const Layer& layer : poset.byCodim[q]) {
      for (const auto& h : arr) {
        // A character already in the span either contains the layer or misses it.
        if (layer.phaseOf(h.chi)) continue;
        ZMatrix rows(layer.codim() + 1, ambientDim);
        rows.topRows(layer.codim()) = layer.span();
        rows.row(layer.codim()) = h.chi.transpose();
        std::vector<Phase> phases = layer.phases();
        phases.push_back(h.phase);
        for (auto& c : solveCharacterSystem(rows, phases)) next.emplace(c.key(), std::move(c));
      }
    }
    if (next.empty()) break;
    std::vector<Layer> level;
    for (auto& [key, l] : next) level.push_back(std::move(l));
    std::sort(level.begin(), level.end(), canonicalLess);
    poset.byCodim.push_back(std::move(level));
  }

  std::vector<int> offset;
  for (const auto& level : poset.byCodim) {
    offset.push_back(static_cast<int>(poset.layers.size()));
    poset.layers.insert(poset.layers.end(), level.begin(), level.end());
  }
  // Ranked by codimension, so covers join adjacent levels.
  for (std::size_t q = 0; q + 1 < poset.byCodim.size(); ++q)
    for (std::size_t a = 0; a < poset.byCodim[q].size(); ++a)
      for (std::size_t b = 0; b < poset.byCodim[q + 1].size(); ++b)
        if (poset.byCodim[q][a].contains(poset.byCodim[q + 1][b]))
          poset.covers.emplace_back(offset[q] + static_cast<int>(a),
                                    offset[q + 1] + static_cast<int>(b));
  return poset;
}

WeightedDims layerCohomology(const Layer& l) {
  WeightedDims out;
  for (int p = 0; p <= l.dim(); ++p) {
    out.dims.push_back(binomial(l.dim(), p));
    out.weights.push_back(2 * p);
  }
  return out;
}

std::vector<ToricHypersurface> localSubarrangement(std::span<const ToricHypersurface> arr,
                                                   const Layer& l) {
  std::vector<ToricHypersurface> out;
  for (const auto& h : arr) {
    const auto p = l.phaseOf(h.chi);
    if (p && *p == h.phase) out.push_back(h);
  }
  return out;
}

}  // namespace arrform::toric
