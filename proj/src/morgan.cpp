#include "arrform/morgan.hpp"

#include "arrform/errors.hpp"
#include "arrform/exactalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace arrform::morgan {

int popcount(Subset s) { return std::popcount(s); }

std::string subsetString(Subset s) {
  std::string out = "{";
  for (int i = 0; i < 64; ++i)
    if (s >> i & 1) {
      if (out.size() > 1) out += ",";
      out += std::to_string(i + 1);
    }
  return out + "}";
}

int shuffleSign(Subset i, Subset iPrime) {
  if (i & iPrime) return 0;
  int inversions = 0;
  for (int b = 0; b < 64; ++b)
    if (iPrime >> b & 1) inversions += std::popcount(i >> b >> 1);
  return inversions % 2 ? -1 : 1;
}

namespace {

int dimensionOf(const CompactificationDatum& cd, Subset s) {
  const auto it = cd.strata.find(s);
  if (it == cd.strata.end()) throw std::invalid_argument("D_" + subsetString(s) + " is not a stratum of the datum");
  return it->second.dimension();
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::string witness(int k, int q) { return "(k=" + std::to_string(k) + ", q=" + std::to_string(q) + ")"; }

}  // namespace

QMatrix CompactificationDatum::restriction(Subset i, Subset j) const {
  const int di = dimensionOf(*this, i), dj = dimensionOf(*this, j);
  if ((i & j) != i) throw std::invalid_argument("no restriction from D_" + subsetString(i) + " to D_" + subsetString(j));
  if (i == j) return QMatrix::Identity(di, di);
  const auto it = restrictions.find({i, j});
  if (it != restrictions.end()) return it->second;
  if (di == 0 || dj == 0) return QMatrix::Zero(dj, di);
  throw std::invalid_argument("missing restriction map for (I=" + subsetString(i) + ", J=" + subsetString(j) + ")");
}

QMatrix CompactificationDatum::gysinMap(Subset i, int component) const {
  if (component < 0 || component >= 64 || !(i >> component & 1))
    throw std::invalid_argument("component " + std::to_string(component + 1) + " is not in " + subsetString(i));
  const Subset smaller = i & ~(Subset{1} << component);
  const int di = dimensionOf(*this, i), ds = dimensionOf(*this, smaller);
  const auto it = gysin.find({i, component});
  if (it != gysin.end()) return it->second;
  if (di == 0 || ds == 0) return QMatrix::Zero(ds, di);
  throw std::invalid_argument("missing Gysin map for (I=" + subsetString(i) + ", i=" + std::to_string(component + 1) +
                              ")");
}

std::vector<std::string> verifyDatum(const CompactificationDatum& cd) {
  std::vector<std::string> out;
  if (cd.componentCount < 0 || cd.componentCount > kMaxComponents)
    out.push_back("component count out of range");
  if (!cd.hasStratum(0)) {
    out.push_back("missing H(X)");
    return out;
  }
  const Subset all = cd.componentCount >= 64 ? ~Subset{0} : (Subset{1} << cd.componentCount) - 1;
  for (const auto& [s, alg] : cd.strata) {
    const std::string name = "D_" + subsetString(s);
    if (s & ~all) out.push_back(name + " uses a component beyond " + std::to_string(cd.componentCount));
    for (int i = 0; i < 64; ++i)
      if (s >> i & 1 && !cd.hasStratum(s & ~(Subset{1} << i)))
        out.push_back(name + " is nonempty but D_" + subsetString(s & ~(Subset{1} << i)) + " is missing");
    if (!checkAlgebraAxioms(alg).ok()) out.push_back("H(" + name + ") violates the algebra axioms");
  }

  auto degreeShift = [&](const QMatrix& m, Subset from, Subset to, int shift, const std::string& what) {
    const auto& a = cd.strata.at(from);
    const auto& b = cd.strata.at(to);
    if (m.rows() != b.dimension() || m.cols() != a.dimension()) {
      out.push_back(what + " has the wrong shape");
      return false;
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0 && b.degree(r) != a.degree(c) + shift) {
          out.push_back(what + " does not have degree " + std::to_string(shift));
          return false;
        }
    return true;
  };

  for (const auto& [key, m] : cd.restrictions) {
    const auto [i, j] = key;
    const std::string what = "restriction (I=" + subsetString(i) + ", J=" + subsetString(j) + ")";
    if ((i & j) != i || i == j || !cd.hasStratum(i) || !cd.hasStratum(j)) {
      out.push_back(what + " does not connect two strata I strictly inside J");
      continue;
    }
    if (!degreeShift(m, i, j, 0, what)) continue;
    const auto& a = cd.strata.at(i);
    const auto& b = cd.strata.at(j);
    for (int x = 0; x < a.dimension(); ++x)
      for (int y = 0; y < a.dimension(); ++y) {
        Element left;
        for (const auto& [z, c] : a.product(x, y)) addScaled(left, toElement(m.col(z)), c);
        if (left != b.multiply(toElement(m.col(x)), toElement(m.col(y)))) {
          out.push_back(what + " is not multiplicative");
          x = a.dimension();
          break;
        }
      }
  }
  for (const auto& [key, m] : cd.gysin) {
    const auto [i, c] = key;
    const std::string what = "Gysin map (I=" + subsetString(i) + ", i=" + std::to_string(c + 1) + ")";
    if (c < 0 || c >= 64 || !(i >> c & 1) || !cd.hasStratum(i)) {
      out.push_back(what + " does not name a component of a stratum");
      continue;
    }
    degreeShift(m, i, i & ~(Subset{1} << c), 2, what);
  }

  for (const auto& [j, alg] : cd.strata) {
    for (int c = 0; c < 64; ++c)
      if (j >> c & 1) try {
          cd.gysinMap(j, c);
        } catch (const std::invalid_argument& e) {
          out.push_back(e.what());
        }
    for (const auto& [i, ai] : cd.strata) {
      if ((i & j) != i || i == j) continue;
      QMatrix rij;
      try {
        rij = cd.restriction(i, j);
      } catch (const std::invalid_argument& e) {
        out.push_back(e.what());
        continue;
      }
      for (const auto& [k, ak] : cd.strata) {
        if ((j & k) != j || j == k) continue;
        try {
          if (cd.restriction(j, k) * rij != cd.restriction(i, k))
            out.push_back("restrictions do not compose along " + subsetString(i) + " < " + subsetString(j) + " < " +
                          subsetString(k));
        } catch (const std::invalid_argument&) {
          // reported by the pair loop
        }
      }
    }
  }
  return out;
}

std::vector<int> BigradedModel::indicesOf(int degree, int weight) const {
  std::vector<int> out;
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (basis[t].degree == degree && basis[t].weight == weight) out.push_back(static_cast<int>(t));
  return out;
}

BigradedModel buildModel(const CompactificationDatum& cd) {
  BigradedModel m;
  for (const auto& [s, alg] : cd.strata)
    for (int e = 0; e < alg.dimension(); ++e) {
      const int deg = alg.degree(e), n = popcount(s);
      m.basis.push_back({s, e, deg + n, deg + 2 * n});
    }
  std::sort(m.basis.begin(), m.basis.end(), [](const auto& a, const auto& b) {
    return std::tie(a.degree, a.weight, a.subset, a.element) < std::tie(b.degree, b.weight, b.subset, b.element);
  });
  std::map<std::pair<Subset, int>, int> index;
  std::vector<int> degrees;
  for (std::size_t t = 0; t < m.basis.size(); ++t) {
    index[{m.basis[t].subset, m.basis[t].element}] = static_cast<int>(t);
    degrees.push_back(m.basis[t].degree);
  }
  GradedAlgebra algebra(std::move(degrees));

  std::map<std::pair<Subset, Subset>, std::vector<Element>> restricted;
  auto restrictedColumns = [&](Subset i, Subset j) -> const std::vector<Element>& {
    auto it = restricted.find({i, j});
    if (it == restricted.end()) {
      const QMatrix r = cd.restriction(i, j);
      std::vector<Element> cols;
      for (Eigen::Index c = 0; c < r.cols(); ++c) cols.push_back(toElement(r.col(c)));
      it = restricted.emplace(std::make_pair(i, j), std::move(cols)).first;
    }
    return it->second;
  };

  const int n = static_cast<int>(m.basis.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& bx = m.basis[x];
      const auto& by = m.basis[y];
      if (bx.subset & by.subset) continue;
      const Subset j = bx.subset | by.subset;
      const auto target = cd.strata.find(j);
      if (target == cd.strata.end()) continue;
      const Element prod = target->second.multiply(restrictedColumns(bx.subset, j)[bx.element],
                                                   restrictedColumns(by.subset, j)[by.element]);
      if (prod.empty()) continue;
      // (-1)^{(q - k) q'} sgn(I, I') with q - k = |I|
      int sign = shuffleSign(bx.subset, by.subset);
      if ((popcount(bx.subset) * by.weight) % 2) sign = -sign;
      Element value;
      for (const auto& [c, coeff] : prod) value[index.at({j, c})] = sign * coeff;
      algebra.setProduct(x, y, std::move(value));
    }

  m.cdga = Cdga(std::move(algebra));
  for (int x = 0; x < n; ++x) m.cdga.weights[x] = m.basis[x].weight;
  for (int x = 0; x < n; ++x) {
    const auto& bx = m.basis[x];
    for (int c = 0; c < 64; ++c) {
      if (!(bx.subset >> c & 1)) continue;
      const Subset smaller = bx.subset & ~(Subset{1} << c);
      const QMatrix g = cd.gysinMap(bx.subset, c);
      // (-1)^q sgn({i}, I - {i})
      int sign = shuffleSign(Subset{1} << c, smaller);
      if (bx.weight % 2) sign = -sign;
      for (Eigen::Index r = 0; r < g.rows(); ++r)
        if (g(r, bx.element) != 0) m.cdga.differential(index.at({smaller, static_cast<int>(r)}), x) += sign * g(r, bx.element);
    }
  }
  return m;
}

AxiomReport verifyCdgaAxioms(const BigradedModel& m) { return checkCdgaAxioms(m.cdga); }

BigradedDims cohomologyOfModel(const BigradedModel& m) { return cohomologyDims(m.cdga); }

namespace {

int maxDegree(const BigradedModel& m) {
  int top = 0;
  for (const auto& b : m.basis) top = std::max(top, b.degree);
  return top;
}

std::vector<long> degreeDims(const Cdga& c) {
  std::vector<long> dims(c.dimension() ? c.algebra.maxDegree() + 1 : 0, 0);
  for (int d : c.algebra.degrees()) ++dims[d];
  return dims;
}

}  // namespace

FormalityWitness extractKernelModel(const BigradedModel& m, FormalityIndex r) {
  std::vector<std::string> witnesses;
  for (const auto& [kq, dim] : cohomologyOfModel(m))
    if (kq.second != 2 * kq.first && r.covers(kq.first)) witnesses.push_back(witness(kq.first, kq.second));
  if (!witnesses.empty())
    throw Refusal("H^k(M_q) is nonzero for some q != 2k with k <= " + r.str(), witnesses);

  // K^k is the kernel of d on the block M_{2k}^k. Kernel vectors carry an
  // identity pattern on the free columns, so coordinates are read off there.
  struct Block {
    std::vector<int> indices;
    std::vector<int> free;
    int offset = 0;
  };
  std::vector<Block> blocks;
  std::vector<QVector> vectors;
  std::vector<int> degrees;
  for (int k = 0; k <= maxDegree(m); ++k) {
    Block b;
    b.indices = m.indicesOf(k, 2 * k);
    b.offset = static_cast<int>(vectors.size());
    QMatrix restricted(m.dimension(), static_cast<Eigen::Index>(b.indices.size()));
    for (std::size_t t = 0; t < b.indices.size(); ++t) restricted.col(t) = m.cdga.differential.col(b.indices[t]);
    const auto e = rowReduce(restricted);
    std::vector<bool> pivot(b.indices.size(), false);
    for (auto p : e.pivots) pivot[p] = true;
    for (std::size_t t = 0; t < b.indices.size(); ++t)
      if (!pivot[t]) b.free.push_back(static_cast<int>(t));
    for (const auto& v : kernelBasis(restricted)) {
      QVector full = QVector::Zero(m.dimension());
      for (std::size_t t = 0; t < b.indices.size(); ++t) full(b.indices[t]) = v(t);
      vectors.push_back(std::move(full));
      degrees.push_back(k);
    }
    blocks.push_back(std::move(b));
  }

  FormalityWitness w;
  w.kind = WitnessKind::Kernel;
  const int dimK = static_cast<int>(vectors.size());
  w.map = QMatrix::Zero(m.dimension(), dimK);
  for (int j = 0; j < dimK; ++j) w.map.col(j) = vectors[j];

  GradedAlgebra algebra(degrees);
  std::vector<Element> elems(dimK);
  for (int j = 0; j < dimK; ++j) elems[j] = toElement(vectors[j]);
  for (int a = 0; a < dimK; ++a)
    for (int b = 0; b < dimK; ++b) {
      const Element prod = m.cdga.algebra.multiply(elems[a], elems[b]);
      if (prod.empty()) continue;
      const int k = degrees[a] + degrees[b];
      Element coords;
      Element rebuilt;
      if (k < static_cast<int>(blocks.size())) {
        const Block& blk = blocks[k];
        for (std::size_t f = 0; f < blk.free.size(); ++f) {
          const auto it = prod.find(blk.indices[blk.free[f]]);
          if (it == prod.end()) continue;
          coords[blk.offset + static_cast<int>(f)] = it->second;
          addScaled(rebuilt, elems[blk.offset + f], it->second);
        }
      }
      if (rebuilt != prod) {
        w.productClosed = false;
        w.productFailures.push_back("the product of K basis vectors " + std::to_string(a) + " and " +
                                    std::to_string(b) + " leaves K");
        continue;
      }
      algebra.setProduct(a, b, std::move(coords));
    }
  w.carrier = Cdga(std::move(algebra));
  for (int j = 0; j < dimK; ++j) w.carrier.weights[j] = 2 * degrees[j];
  w.dims = degreeDims(w.carrier);
  w.quasiIso = checkRQuasiIso(w.carrier, m.cdga, w.map, r);
  return w;
}

FormalityWitness extractCokernelModel(const BigradedModel& m, FormalityIndex r) {
  std::vector<std::string> witnesses;
  for (const auto& [kq, dim] : cohomologyOfModel(m))
    if (kq.second != kq.first && (r.isInfinite() || kq.first <= r.value() + 1))
      witnesses.push_back(witness(kq.first, kq.second));
  if (!witnesses.empty())
    throw Refusal("H^k(M_q) is nonzero for some q != k with k <= " +
                      (r.isInfinite() ? std::string("inf") : std::to_string(r.value() + 1)),
                  witnesses);

  FormalityWitness w;
  w.kind = WitnessKind::Cokernel;
  std::vector<int> degrees;
  std::vector<int> reps;  // model index representing each C basis element
  std::vector<std::vector<int>> blockIndices;
  std::vector<QMatrix> projections;  // block coordinates -> C coordinates of the block
  std::vector<QMatrix> images;       // basis of im d inside each block, block coordinates
  for (int k = 0; k <= maxDegree(m); ++k) {
    const auto idx = m.indicesOf(k, k);
    const auto below = m.indicesOf(k - 1, k);
    const Eigen::Index n = static_cast<Eigen::Index>(idx.size());
    QMatrix im(n, static_cast<Eigen::Index>(below.size()));
    for (std::size_t c = 0; c < below.size(); ++c)
      for (Eigen::Index t = 0; t < n; ++t) im(t, c) = m.cdga.differential(idx[t], below[c]);
    const QMatrix imBasis = columnSpaceBasis(im);
    // complete the image to a basis of the block with unit vectors
    QMatrix full(n, n);
    full.leftCols(imBasis.cols()) = imBasis;
    Eigen::Index filled = imBasis.cols();
    std::vector<int> chosen;
    for (Eigen::Index t = 0; t < n && filled < n; ++t) {
      full.col(filled) = QVector::Unit(n, t);
      if (rank(full.leftCols(filled + 1)) == filled + 1) {
        chosen.push_back(static_cast<int>(t));
        ++filled;
      }
    }
    const QMatrix inv = n ? *inverse(full) : QMatrix(0, 0);
    projections.push_back(inv.bottomRows(static_cast<Eigen::Index>(chosen.size())));
    images.push_back(imBasis);
    blockIndices.push_back(idx);
    for (int t : chosen) {
      reps.push_back(idx[t]);
      degrees.push_back(k);
    }
  }

  const int dimC = static_cast<int>(reps.size());
  w.map = QMatrix::Zero(dimC, m.dimension());
  int offset = 0;
  for (std::size_t k = 0; k < blockIndices.size(); ++k) {
    const QMatrix& p = projections[k];
    for (std::size_t t = 0; t < blockIndices[k].size(); ++t)
      for (Eigen::Index c = 0; c < p.rows(); ++c) w.map(offset + c, blockIndices[k][t]) = p(c, t);
    offset += static_cast<int>(p.rows());
  }
  auto project = [&](const Element& x) {
    Element out;
    for (const auto& [i, c] : x)
      for (int row = 0; row < dimC; ++row)
        if (w.map(row, i) != 0) addScaled(out, {{row, w.map(row, i)}}, c);
    return out;
  };

  GradedAlgebra algebra(degrees);
  for (int a = 0; a < dimC; ++a)
    for (int b = 0; b < dimC; ++b)
      algebra.setProduct(a, b, project(m.cdga.algebra.product(reps[a], reps[b])));

  // The product descends to the quotient only if im d is an ideal there.
  for (std::size_t k = 0; k < images.size(); ++k)
    for (Eigen::Index c = 0; c < images[k].cols(); ++c) {
      Element x;
      for (std::size_t t = 0; t < blockIndices[k].size(); ++t)
        if (images[k](t, c) != 0) x[blockIndices[k][t]] = images[k](t, c);
      for (const auto& idx : blockIndices)
        for (int y : idx) {
          const Element left = project(m.cdga.algebra.multiply(x, {{y, Rational(1)}}));
          const Element right = project(m.cdga.algebra.multiply({{y, Rational(1)}}, x));
          if (!left.empty() || !right.empty()) {
            w.productClosed = false;
            w.productFailures.push_back("im d in degree " + std::to_string(k) + " times e" + std::to_string(y) +
                                        " is not in im d");
          }
        }
    }

  w.carrier = Cdga(std::move(algebra));
  for (int j = 0; j < dimC; ++j) w.carrier.weights[j] = degrees[j];
  w.dims = degreeDims(w.carrier);
  w.quasiIso = checkRQuasiIso(m.cdga, w.carrier, w.map, r);
  return w;
}

CompactificationDatum kunnethProduct(const CompactificationDatum& a, const CompactificationDatum& b) {
  if (a.componentCount + b.componentCount > kMaxComponents)
    throw std::invalid_argument("too many divisor components for a product datum");
  const int shift = a.componentCount;
  auto combine = [shift](Subset x, Subset y) { return x | (y << shift); };

  CompactificationDatum out;
  out.componentCount = a.componentCount + b.componentCount;
  out.dimension = a.dimension + b.dimension;
  for (const auto& [sa, alga] : a.strata)
    for (const auto& [sb, algb] : b.strata) out.strata.emplace(combine(sa, sb), tensorProduct(alga, algb));

  for (const auto& [ia, x] : a.strata)
    for (const auto& [ja, y] : a.strata) {
      if ((ia & ja) != ia) continue;
      const QMatrix ra = a.restriction(ia, ja);
      for (const auto& [ib, z] : b.strata)
        for (const auto& [jb, t] : b.strata) {
          if ((ib & jb) != ib || (ia == ja && ib == jb)) continue;
          out.restrictions[{combine(ia, ib), combine(ja, jb)}] = kron(ra, b.restriction(ib, jb));
        }
    }

  // Gysin maps have even degree, so no Koszul sign appears when one passes
  // the first tensor factor.
  for (const auto& [sa, alga] : a.strata)
    for (const auto& [sb, algb] : b.strata) {
      const Subset s = combine(sa, sb);
      for (int c = 0; c < a.componentCount; ++c)
        if (sa >> c & 1)
          out.gysin[{s, c}] = kron(a.gysinMap(sa, c), QMatrix::Identity(algb.dimension(), algb.dimension()));
      for (int c = 0; c < b.componentCount; ++c)
        if (sb >> c & 1)
          out.gysin[{s, c + shift}] =
              kron(QMatrix::Identity(alga.dimension(), alga.dimension()), b.gysinMap(sb, c));
    }
  return out;
}

CompactificationDatum builderPoint() {
  CompactificationDatum cd;
  cd.strata.emplace(0, pointAlgebra());
  return cd;
}

CompactificationDatum builderProjectiveLineMarked(int s) {
  if (s < 0 || s > kMaxComponents) throw std::invalid_argument("marked point count out of range");
  CompactificationDatum cd;
  cd.componentCount = s;
  cd.dimension = 1;
  GradedAlgebra line({0, 2});
  line.setProduct(0, 0, {{0, Rational(1)}});
  line.setProduct(0, 1, {{1, Rational(1)}});
  line.setProduct(1, 0, {{1, Rational(1)}});
  cd.strata.emplace(0, std::move(line));
  QMatrix restrict(1, 2);
  restrict << Rational(1), Rational(0);
  QMatrix fundamental(2, 1);
  fundamental << Rational(0), Rational(1);
  for (int i = 0; i < s; ++i) {
    const Subset p = Subset{1} << i;
    cd.strata.emplace(p, pointAlgebra());
    cd.restrictions[{0, p}] = restrict;
    cd.gysin[{p, i}] = fundamental;
  }
  return cd;
}

WeightedDims localizationBetti(const std::vector<long>& bettiOfX, int d) {
  if (d < 1) throw std::invalid_argument("X - p needs complex dimension d >= 1");
  if (static_cast<int>(bettiOfX.size()) != 2 * d + 1)
    throw std::invalid_argument("expected Betti numbers in degrees 0 .. 2d");
  if (bettiOfX.front() != 1 || bettiOfX.back() != 1)
    throw std::invalid_argument("a connected compact X has b_0 = b_2d = 1");
  for (long b : bettiOfX)
    if (b < 0) throw std::invalid_argument("negative Betti number");
  WeightedDims out;
  out.dims = bettiOfX;
  out.dims.back() = 0;
  for (int k = 0; k <= 2 * d; ++k) out.weights.push_back(k);
  return out;
}

}  // namespace arrform::morgan
