#include "arrform/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace arrform::matroid {

namespace {

std::vector<int> elementsOf(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

bool lexLess(Mask a, Mask b) { return elementsOf(a) < elementsOf(b); }

int lowest(Mask m) { return std::countr_zero(m); }

}  // namespace

LinearMatroid::LinearMatroid(QMatrix columns, std::vector<int> labels)
    : columns_(std::move(columns)), labels_(std::move(labels)) {
  if (size() > kMaxGroundSet)
    throw std::invalid_argument("ground set of " + std::to_string(size()) +
                                " elements exceeds the supported " +
                                std::to_string(kMaxGroundSet));
  if (labels_.empty())
    for (int i = 0; i < size(); ++i) labels_.push_back(i);
  if (static_cast<int>(labels_.size()) != size())
    throw std::invalid_argument("one label per matroid element required");
}

int LinearMatroid::rank(Mask subset) const {
  const auto elems = elementsOf(subset);
  if (elems.empty()) return 0;
  QMatrix sub(columns_.rows(), static_cast<Eigen::Index>(elems.size()));
  for (std::size_t k = 0; k < elems.size(); ++k) sub.col(k) = columns_.col(elems[k]);
  return static_cast<int>(arrform::rank(sub));
}

bool LinearMatroid::independent(Mask subset) const {
  return rank(subset) == std::popcount(subset);
}

Mask LinearMatroid::closure(Mask subset) const {
  const int r = rank(subset);
  Mask out = subset;
  for (int e = 0; e < size(); ++e) {
    const Mask bit = Mask{1} << e;
    if (!(subset & bit) && rank(subset | bit) == r) out |= bit;
  }
  return out;
}

std::vector<Mask> LinearMatroid::circuits() const {
  std::vector<Mask> out;
  const int r = rank();
  for (Mask s = 1; s <= groundSet() && s != 0; ++s) {
    if (std::popcount(s) > r + 1 || independent(s)) continue;
    bool minimal = true;
    for (Mask rest = s; rest && minimal; rest &= rest - 1)
      if (!independent(s & ~(rest & -rest))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

LinearMatroid buildMatroid(const QMatrix& vectors, std::vector<int> labels) {
  return LinearMatroid(vectors, std::move(labels));
}

LinearMatroid buildMatroid(std::span<const QVector> vectors, std::vector<int> labels) {
  const Eigen::Index dim = vectors.empty() ? 0 : vectors.front().size();
  QMatrix cols(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != dim) throw std::invalid_argument("vectors of unequal length");
    cols.col(k) = vectors[k];
  }
  return LinearMatroid(std::move(cols), std::move(labels));
}

int FlatLattice::indexOf(Mask elements) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i].elements == elements) return static_cast<int>(i);
  return -1;
}

FlatLattice flatLattice(const LinearMatroid& m) {
  FlatLattice lattice;
  lattice.rank = m.rank();
  std::vector<std::vector<Mask>> levels{{m.closure(0)}};
  for (int r = 0; r < lattice.rank; ++r) {
    std::vector<Mask> next;
    for (Mask f : levels[r])
      for (int e = 0; e < m.size(); ++e)
        if (!(f & (Mask{1} << e))) next.push_back(m.closure(f | (Mask{1} << e)));
    std::sort(next.begin(), next.end(), lexLess);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }
  for (int r = 0; r <= lattice.rank; ++r)
    for (Mask f : levels[r]) lattice.flats.push_back({f, r, 0});

  for (std::size_t x = 0; x < lattice.flats.size(); ++x) {
    if (x == 0) {
      lattice.flats[x].mobius = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t y = 0; y < x; ++y) {
      const Mask ye = lattice.flats[y].elements, xe = lattice.flats[x].elements;
      if ((ye & xe) == ye && lattice.flats[y].rank < lattice.flats[x].rank) sum += lattice.flats[y].mobius;
    }
    lattice.flats[x].mobius = -sum;
  }
  for (std::size_t lo = 0; lo < lattice.flats.size(); ++lo)
    for (std::size_t hi = 0; hi < lattice.flats.size(); ++hi) {
      const auto& a = lattice.flats[lo];
      const auto& b = lattice.flats[hi];
      if (b.rank == a.rank + 1 && (a.elements & b.elements) == a.elements)
        lattice.covers.emplace_back(static_cast<int>(lo), static_cast<int>(hi));
    }
  return lattice;
}

std::vector<std::vector<Mask>> nbcBasis(const LinearMatroid& m) {
  std::vector<std::vector<Mask>> basis{{Mask{0}}};
  for (int k = 0; k < m.rank(); ++k) {
    std::vector<Mask> next;
    for (Mask s : basis[k]) {
      const int limit = s ? lowest(s) : m.size();
      for (int e = 0; e < limit; ++e) {
        const Mask grown = s | (Mask{1} << e);
        if (!m.independent(grown)) continue;
        // Only the new suffix needs the broken-circuit test.
        const Mask cl = m.closure(grown);
        if (e > 0 && (cl & ((Mask{1} << e) - 1))) continue;
        next.push_back(grown);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), lexLess);
    basis.push_back(std::move(next));
  }
  return basis;
}

std::vector<long> characteristicPolynomial(const FlatLattice& l) {
  std::vector<long> coeffs(l.rank + 1, 0);
  for (const auto& f : l.flats) coeffs[l.rank - f.rank] += f.mobius;
  return coeffs;
}

std::string polynomialString(const std::vector<long>& ascending, char var) {
  std::string out;
  for (int p = static_cast<int>(ascending.size()) - 1; p >= 0; --p) {
    const long c = ascending[p];
    if (c == 0) continue;
    const long mag = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (mag != 1 || p == 0) out += std::to_string(mag);
    if (p >= 1) out += var;
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

std::map<Mask, long> localComponentDims(const FlatLattice& l) {
  std::map<Mask, long> out;
  for (const auto& f : l.flats) out[f.elements] = f.mobius < 0 ? -f.mobius : f.mobius;
  return out;
}

int shuffleSign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int t = lowest(rest);
    // elements of a greater than t
    inversions += std::popcount(a >> (t + 1));
  }
  return inversions % 2 ? -1 : 1;
}

OSAlgebra::OSAlgebra(LinearMatroid m) : matroid_(std::move(m)), basis_(nbcBasis(matroid_)) {}

int OSAlgebra::dimension(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(basis_.size())) return 0;
  return static_cast<int>(basis_[degree].size());
}

int OSAlgebra::totalDimension() const {
  int total = 0;
  for (const auto& b : basis_) total += static_cast<int>(b.size());
  return total;
}

OSAlgebra::Element OSAlgebra::normalForm(Mask monomial) const {
  const LinearMatroid& m = matroid_;
  if (!m.independent(monomial)) return {};
  const auto elems = elementsOf(monomial);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    Mask suffix = 0;
    for (std::size_t k = j; k < elems.size(); ++k) suffix |= Mask{1} << elems[k];
    const Mask below = (Mask{1} << elems[j]) - 1;
    const Mask candidates = m.closure(suffix) & below;
    if (!candidates) continue;
    const int e = lowest(candidates);
    const Mask ebit = Mask{1} << e;

    // Fundamental circuit of e inside the suffix.
    Mask circuitRest = suffix;
    for (int b : elementsOf(suffix)) {
      const Mask without = circuitRest & ~(Mask{1} << b);
      if (m.rank(without | ebit) == m.rank(without)) circuitRest = without;
    }
    const Mask remainder = monomial & ~circuitRest;
    const int outer = shuffleSign(circuitRest, remainder);

    // e_B = sum_{i >= 1} (-1)^(i+1) e_{C - c_i}, C = (e, b_1, ..., b_m).
    Element result;
    const auto rest = elementsOf(circuitRest);
    for (std::size_t i = 1; i <= rest.size(); ++i) {
      const Mask term = (circuitRest & ~(Mask{1} << rest[i - 1])) | ebit;
      const int sign = outer * ((i + 1) % 2 ? -1 : 1) * shuffleSign(term, remainder);
      for (const auto& [mono, coef] : normalForm(term | remainder)) {
        result[mono] += Rational(sign) * coef;
        if (result[mono] == 0) result.erase(mono);
      }
    }
    return result;
  }
  return {{monomial, Rational(1)}};
}

OSAlgebra::Element OSAlgebra::product(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const int sign = shuffleSign(ma, mb);
      if (sign == 0) continue;
      for (const auto& [mono, coef] : normalForm(ma | mb)) {
        out[mono] += Rational(sign) * ca * cb * coef;
        if (out[mono] == 0) out.erase(mono);
      }
    }
  return out;
}

std::map<Mask, std::vector<Mask>> OSAlgebra::localBasis() const {
  std::map<Mask, std::vector<Mask>> out;
  for (const auto& level : basis_)
    for (Mask mono : level) out[matroid_.closure(mono)].push_back(mono);
  return out;
}

OSAlgebra::Element osProduct(const OSAlgebra& alg, const OSAlgebra::Element& a,
                             const OSAlgebra::Element& b) {
  return alg.product(a, b);
}

// ---------------------------------------------------------------------------

namespace {

struct AffineSystem {
  QMatrix reduced;  // nonzero rows only
  bool consistent = true;
};

AffineSystem reduceAffine(const QMatrix& augmented) {
  const auto e = rowReduce(augmented);
  AffineSystem s;
  const auto r = static_cast<Eigen::Index>(e.pivots.size());
  s.consistent = r == 0 || e.pivots.back() != augmented.cols() - 1;
  s.reduced = e.reduced.topRows(r);
  return s;
}

QMatrix augmentedRow(const AffineHyperplane& h) {
  QMatrix row(1, h.normal.size() + 1);
  row.leftCols(h.normal.size()) = h.normal.transpose();
  row(0, h.normal.size()) = h.constant;
  return row;
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), b.cols());
  if (a.rows()) out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

bool flatInside(const AffineFlat& small, const QMatrix& bigEquations) {
  const auto s = reduceAffine(stack(small.equations, bigEquations));
  return s.consistent && s.reduced.rows() == small.equations.rows();
}

}  // namespace

AffinePoset affineIntersectionPoset(std::span<const AffineHyperplane> arr, int ambientDim) {
  for (const auto& h : arr) {
    if (h.normal.size() != ambientDim)
      throw std::invalid_argument("hyperplane " + std::to_string(h.label) +
                                  " has a normal of the wrong length");
    if (isZero(h.normal))
      throw std::invalid_argument("hyperplane " + std::to_string(h.label) + " has a zero normal");
  }
  auto finish = [&](QMatrix eq) {
    AffineFlat f;
    f.equations = std::move(eq);
    f.dim = ambientDim - static_cast<int>(f.equations.rows());
    f.key = toString(f.equations);
    for (std::size_t i = 0; i < arr.size(); ++i)
      if (flatInside(f, augmentedRow(arr[i]))) f.hyperplanes.push_back(static_cast<int>(i));
    return f;
  };

  AffinePoset poset;
  poset.ambientDim = ambientDim;
  poset.byCodim.push_back({finish(QMatrix(0, ambientDim + 1))});
  for (int q = 0; q < ambientDim; ++q) {
    std::map<std::string, AffineFlat> next;
    for (const auto& flat : poset.byCodim[q])
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (std::find(flat.hyperplanes.begin(), flat.hyperplanes.end(), static_cast<int>(i)) !=
            flat.hyperplanes.end())
          continue;
        const auto s = reduceAffine(stack(flat.equations, augmentedRow(arr[i])));
        if (!s.consistent || s.reduced.rows() == flat.equations.rows()) continue;
        AffineFlat f = finish(s.reduced);
        next.emplace(f.key, std::move(f));
      }
    if (next.empty()) break;
    std::vector<AffineFlat> level;
    for (auto& [k, f] : next) level.push_back(std::move(f));
    poset.byCodim.push_back(std::move(level));
  }
  std::vector<int> offset;
  for (const auto& level : poset.byCodim) {
    offset.push_back(static_cast<int>(poset.flats.size()));
    poset.flats.insert(poset.flats.end(), level.begin(), level.end());
  }
  for (std::size_t q = 0; q + 1 < poset.byCodim.size(); ++q)
    for (std::size_t a = 0; a < poset.byCodim[q].size(); ++a)
      for (std::size_t b = 0; b < poset.byCodim[q + 1].size(); ++b)
        if (flatInside(poset.byCodim[q + 1][b], poset.byCodim[q][a].equations))
          poset.covers.emplace_back(offset[q] + static_cast<int>(a), offset[q + 1] + static_cast<int>(b));
  return poset;
}

LinearMatroid localMatroid(std::span<const AffineHyperplane> arr, const AffineFlat& flat) {
  QMatrix cols(flat.equations.cols() - 1, static_cast<Eigen::Index>(flat.hyperplanes.size()));
  std::vector<int> labels;
  for (std::size_t k = 0; k < flat.hyperplanes.size(); ++k) {
    cols.col(k) = arr[flat.hyperplanes[k]].normal;
    labels.push_back(arr[flat.hyperplanes[k]].label);
  }
  return LinearMatroid(std::move(cols), std::move(labels));
}

}  // namespace arrform::matroid
