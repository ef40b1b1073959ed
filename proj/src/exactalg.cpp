#include "arrform/exactalg.hpp"

#include <stdexcept>

namespace arrform {

ZMatrix toInteger(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!isIntegral(m(i, j)))
        throw std::invalid_argument("non-integral entry " + m(i, j).str() + " at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

ZMatrix SmithDecomposition::diagonal(Eigen::Index rows, Eigen::Index cols) const {
  ZMatrix d = ZMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

namespace {

struct SmithState {
  ZMatrix a, u, v, vinv;

  void swapRows(Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swapCols(Eigen::Index i, Eigen::Index j) {
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    vinv.row(i).swap(vinv.row(j));
  }
  // row i -= q * row t
  void subRow(Eigen::Index i, Eigen::Index t, const Integer& q) {
    a.row(i) -= q * a.row(t);
    u.row(i) -= q * u.row(t);
  }
  // col j -= q * col t
  void subCol(Eigen::Index j, Eigen::Index t, const Integer& q) {
    a.col(j) -= q * a.col(t);
    v.col(j) -= q * v.col(t);
    vinv.row(t) += q * vinv.row(j);
  }
};

}  // namespace

SmithDecomposition smithNormalForm(const ZMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithState s{m, ZMatrix::Identity(rows, rows), ZMatrix::Identity(cols, cols),
               ZMatrix::Identity(cols, cols)};
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    bool zeroBlock = false;
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      Integer best;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (s.a(i, j) == 0) continue;
          const Integer mag = abs(s.a(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        zeroBlock = true;
        break;
      }
      if (pi != t) s.swapRows(pi, t);
      if (pj != t) s.swapCols(pj, t);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        s.subRow(i, t, floorDiv(s.a(i, t), s.a(t, t)));
        if (s.a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        s.subCol(j, t, floorDiv(s.a(t, j), s.a(t, t)));
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (s.a(i, j) % s.a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      s.subRow(t, bad, Integer(-1));
    }
    if (zeroBlock) break;
    if (s.a(t, t) < 0) {
      s.a.row(t) *= Integer(-1);
      s.u.row(t) *= Integer(-1);
    }
  }
  SmithDecomposition out;
  out.left = std::move(s.u);
  out.right = std::move(s.v);
  out.rightInverse = std::move(s.vinv);
  out.diag.reserve(steps);
  for (Eigen::Index i = 0; i < steps; ++i) out.diag.push_back(s.a(i, i));
  return out;
}

SmithDecomposition smithNormalForm(const QMatrix& m) { return smithNormalForm(toInteger(m)); }

ZMatrix hermiteBasis(const ZMatrix& rowsIn) {
  ZMatrix h = rowsIn;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (h(i, c) != 0 && (p < 0 || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p < 0) break;
      if (p != r) h.row(p).swap(h.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        h.row(i) -= floorDiv(h(i, c), h(r, c)) * h.row(r);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.row(r) *= Integer(-1);
    for (Eigen::Index i = 0; i < r; ++i)
      if (h(i, c) != 0) h.row(i) -= floorDiv(h(i, c), h(r, c)) * h.row(r);
    ++r;
  }
  return h.topRows(r);
}

ZMatrix saturate(const ZMatrix& basis) {
  if (basis.rows() == 0) return ZMatrix(0, basis.cols());
  const auto snf = smithNormalForm(basis);
  Eigen::Index k = 0;
  while (k < static_cast<Eigen::Index>(snf.diag.size()) && snf.diag[k] != 0) ++k;
  return hermiteBasis(snf.rightInverse.topRows(k));
}

Integer saturationIndex(const ZMatrix& basis) {
  Integer index = 1;
  for (const auto& d : smithNormalForm(basis).diag)
    if (d != 0) index *= d;
  return index;
}

std::vector<Integer> torsionInvariants(const ZMatrix& m) {
  std::vector<Integer> out;
  for (const auto& d : smithNormalForm(m).diag)
    if (d > 1) out.push_back(d);
  return out;
}

std::optional<ZVector> latticeCoordinates(const ZMatrix& basis, const ZVector& v) {
  if (basis.rows() == 0) {
    if (isZero(v)) return ZVector(0);
    return std::nullopt;
  }
  const QMatrix bt = toRational(basis.transpose());
  const auto x = solve(bt, toRational(v));
  if (!x) return std::nullopt;
  // Rows are independent, so the rational solution is unique.
  if (rank(bt) != basis.rows()) throw std::invalid_argument("lattice basis rows are dependent");
  ZVector c(x->size());
  for (Eigen::Index i = 0; i < x->size(); ++i) {
    if (!isIntegral((*x)(i))) return std::nullopt;
    c(i) = numerator((*x)(i));
  }
  return c;
}

}  // namespace arrform
