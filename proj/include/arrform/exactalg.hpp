#pragma once

// Exact dense linear algebra over the rationals and the integers.
//
// Field routines are templated on the scalar and only rely on exact ring
// operations plus division; every comparison is exact. Lattice routines
// (Smith and Hermite normal forms, saturation) work on Integer matrices.

#include "arrform/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace arrform {

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;              // reduced row echelon form
  std::vector<Eigen::Index> pivots;    // pivot column of each nonzero row
};

/// Reduced row echelon form. The pivot of each column is the first row (in
/// row order, among rows without a pivot yet) holding a nonzero entry.
template <typename Derived>
Echelon<typename Derived::Scalar> rowReduce(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e{m, {}};
  Matrix<Scalar>& a = e.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rowReduce(m).pivots.size());
}

/// Basis of the right kernel, one vector per non-pivot column.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernelBasis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rowReduce(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto c : e.pivots) isPivot[c] = true;
  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Columns forming a basis of the column space, chosen greedily left to right.
template <typename Derived>
Matrix<typename Derived::Scalar> columnSpaceBasis(const Eigen::MatrixBase<Derived>& m) {
  const auto e = rowReduce(m);
  Matrix<typename Derived::Scalar> out(m.rows(), static_cast<Eigen::Index>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.col(k) = m.col(e.pivots[k]);
  return out;
}

/// Some x with a·x = b, or nothing when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = rowReduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(r, a.cols());
  return x;
}

template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  const auto e = rowReduce(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  return Matrix<Scalar>(e.reduced.rightCols(n));
}

// ---------------------------------------------------------------------------
// Integer lattices

struct SmithDecomposition {
  ZMatrix left;    // unimodular, rows x rows
  std::vector<Integer> diag;  // min(rows, cols) invariants, d_i | d_{i+1}
  ZMatrix right;   // unimodular, cols x cols
  ZMatrix rightInverse;

  /// left * original * right.
  ZMatrix diagonal(Eigen::Index rows, Eigen::Index cols) const;
};

/// Pivots on the smallest nonzero absolute value, ties broken by lowest
/// (row, col).
SmithDecomposition smithNormalForm(const ZMatrix& m);
/// Rejects matrices with a non-integral entry (std::invalid_argument).
SmithDecomposition smithNormalForm(const QMatrix& m);

/// Row-style Hermite basis of the lattice spanned by the rows of `rows`:
/// positive pivots, entries above each pivot in [0, pivot), zero rows dropped.
ZMatrix hermiteBasis(const ZMatrix& rows);

/// Saturation of the lattice spanned by independent rows, in Hermite form.
ZMatrix saturate(const ZMatrix& basis);

/// Index of the row lattice of `basis` in its saturation.
Integer saturationIndex(const ZMatrix& basis);

/// Smith invariants strictly greater than one.
std::vector<Integer> torsionInvariants(const ZMatrix& m);

/// Integer coordinates c with c^T * basis = v, when v lies in the row lattice.
std::optional<ZVector> latticeCoordinates(const ZMatrix& basis, const ZVector& v);

Integer floorDiv(const Integer& a, const Integer& b);

}  // namespace arrform
