#pragma once

// Linear matroids, their lattices of flats and Orlik-Solomon algebras, plus
// the intersection poset of an affine hyperplane arrangement.

#include "arrform/exactalg.hpp"
#include "arrform/weighted.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arrform::matroid {

/// Subset of the ground set, bit i standing for element i (input order).
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 20;

/// Elements are the columns of a rational matrix. Parallel and repeated
/// columns stay distinct elements.
class LinearMatroid {
 public:
  LinearMatroid(QMatrix columns, std::vector<int> labels);

  int size() const { return static_cast<int>(columns_.cols()); }
  int ambientDim() const { return static_cast<int>(columns_.rows()); }
  const QMatrix& columns() const { return columns_; }
  const std::vector<int>& labels() const { return labels_; }
  Mask groundSet() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }

  int rank() const { return rank(groundSet()); }
  int rank(Mask subset) const;
  bool independent(Mask subset) const;
  Mask closure(Mask subset) const;
  /// Minimal dependent subsets, sorted by mask. Exhaustive; small ground sets only.
  std::vector<Mask> circuits() const;

 private:
  QMatrix columns_;
  std::vector<int> labels_;
};

/// Columns of `vectors` (one per element); labels default to 0..n-1.
LinearMatroid buildMatroid(const QMatrix& vectors, std::vector<int> labels = {});
LinearMatroid buildMatroid(std::span<const QVector> vectors, std::vector<int> labels = {});

struct Flat {
  Mask elements = 0;
  int rank = 0;
  long mobius = 0;  // mu(bottom, this flat)
};

struct FlatLattice {
  int rank = 0;
  /// Sorted by rank, then mask; flats.front() is the bottom, flats.back() the top.
  std::vector<Flat> flats;
  /// (lower index, upper index) covering pairs.
  std::vector<std::pair<int, int>> covers;

  int indexOf(Mask elements) const;
  const Flat& bottom() const { return flats.front(); }
  const Flat& top() const { return flats.back(); }
};

FlatLattice flatLattice(const LinearMatroid& m);

/// No-broken-circuit sets, graded by size, for the input element order.
std::vector<std::vector<Mask>> nbcBasis(const LinearMatroid& m);

/// Coefficients in ascending powers of t: sum_X mu(X) t^(rank - rank X).
std::vector<long> characteristicPolynomial(const FlatLattice& l);

/// "t^2 - 3t + 2" style rendering.
std::string polynomialString(const std::vector<long>& ascending, char var = 't');

/// dim A_X = |mu(bottom, X)| for every flat, keyed by flat mask.
std::map<Mask, long> localComponentDims(const FlatLattice& l);

/// Orlik-Solomon algebra in the no-broken-circuit basis.
class OSAlgebra {
 public:
  /// Sparse element: NBC monomial -> coefficient.
  using Element = std::map<Mask, Rational>;

  explicit OSAlgebra(LinearMatroid m);

  const LinearMatroid& matroid() const { return matroid_; }
  const std::vector<std::vector<Mask>>& basis() const { return basis_; }
  int dimension(int degree) const;
  int totalDimension() const;

  Element unit() const { return {{Mask{0}, Rational(1)}}; }
  Element generator(int i) const { return {{Mask{1} << i, Rational(1)}}; }

  /// The exterior monomial e_{i1} ... e_{ik} (ascending) rewritten in the
  /// NBC basis using the circuit relations.
  Element normalForm(Mask monomial) const;

  Element product(const Element& a, const Element& b) const;

  /// NBC monomials grouped by the flat they span.
  std::map<Mask, std::vector<Mask>> localBasis() const;

 private:
  LinearMatroid matroid_;
  std::vector<std::vector<Mask>> basis_;
};

OSAlgebra::Element osProduct(const OSAlgebra& alg, const OSAlgebra::Element& a,
                             const OSAlgebra::Element& b);

/// Sign of the permutation sorting the concatenation of a then b; 0 if they meet.
int shuffleSign(Mask a, Mask b);

// ---------------------------------------------------------------------------
// Affine hyperplane arrangements

struct AffineHyperplane {
  QVector normal;
  Rational constant;  // normal . x = constant
  int label = 0;
};

struct AffineFlat {
  QMatrix equations;         // reduced row echelon form of [A | c]
  int dim = 0;
  std::vector<int> hyperplanes;  // indices (input order) of hyperplanes containing it
  std::string key;

  int codim() const { return static_cast<int>(equations.rows()); }
  /// Only H^0 = Q(0).
  WeightedDims cohomology() const { return {{1}, {0}}; }
};

struct AffinePoset {
  int ambientDim = 0;
  std::vector<std::vector<AffineFlat>> byCodim;
  std::vector<AffineFlat> flats;  // codim-major
  std::vector<std::pair<int, int>> covers;  // (larger, smaller)
};

/// Nonempty intersections of subsets of hyperplanes, deduplicated.
AffinePoset affineIntersectionPoset(std::span<const AffineHyperplane> arr, int ambientDim);

/// Matroid of the normals of the hyperplanes through a flat.
LinearMatroid localMatroid(std::span<const AffineHyperplane> arr, const AffineFlat& flat);

}  // namespace arrform::matroid
