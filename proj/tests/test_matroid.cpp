#include "arrform/matroid.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <bit>
#include <random>

using namespace arrform;
using namespace arrform::matroid;

namespace {

QMatrix columns(std::initializer_list<std::initializer_list<long>> vecs) {
  const auto n = static_cast<Eigen::Index>(vecs.size());
  const auto d = static_cast<Eigen::Index>(vecs.begin()->size());
  QMatrix m(d, n);
  Eigen::Index j = 0;
  for (const auto& v : vecs) {
    Eigen::Index i = 0;
    for (long x : v) m(i++, j) = Rational(x);
    ++j;
  }
  return m;
}

LinearMatroid concurrentLines() { return buildMatroid(columns({{1, 0}, {0, 1}, {1, 1}})); }

LinearMatroid braid(int n) {
  std::vector<QVector> vecs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVector v = QVector::Zero(n);
      v(i) = 1;
      v(j) = -1;
      vecs.push_back(v);
    }
  return buildMatroid(vecs);
}

LinearMatroid boolean(int n) { return buildMatroid(QMatrix(QMatrix::Identity(n, n))); }

std::vector<LinearMatroid> corpus() {
  std::vector<LinearMatroid> out{boolean(1),        boolean(2),
                                 boolean(3),        concurrentLines(),
                                 braid(3),          braid(4),
                                 buildMatroid(columns({{1, 0}, {1, 0}})),
                                 buildMatroid(columns({{1, 0}, {0, 1}, {1, 1}, {1, -1}})),
                                 buildMatroid(columns({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}})),
                                 buildMatroid(columns({{1, 0}, {2, 0}, {0, 1}, {1, 1}}))};
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-1, 2);
  for (int t = 0; t < 6; ++t) {
    QMatrix m(3, 5 + t % 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = coef(rng);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (isZero(m.col(j))) m(0, j) = 1;
    out.push_back(buildMatroid(m));
  }
  return out;
}

// chi(t) = sum over all subsets S of (-1)^|S| t^(r - r(S)).
std::vector<long> characteristicBySubsets(const LinearMatroid& m) {
  const int r = m.rank();
  std::vector<long> coeffs(r + 1, 0);
  for (Mask s = 0; s <= m.groundSet(); ++s) {
    coeffs[r - m.rank(s)] += std::popcount(s) % 2 ? -1 : 1;
    if (s == m.groundSet()) break;
  }
  return coeffs;
}

OSAlgebra::Element basisElement(Mask m) { return {{m, Rational(1)}}; }

OSAlgebra::Element scale(const OSAlgebra::Element& e, int s) {
  OSAlgebra::Element out;
  for (const auto& [k, v] : e) out[k] = v * Rational(s);
  return out;
}

}  // namespace

TEST_CASE("build matroid") {
  const auto b = boolean(2);
  CHECK(b.rank() == 2);
  CHECK(b.circuits().empty());

  const auto parallel = buildMatroid(columns({{1, 0}, {1, 0}}));
  CHECK(parallel.rank() == 1);
  CHECK(parallel.circuits() == std::vector<Mask>{0b11});

  const auto three = concurrentLines();
  CHECK(three.rank() == 2);
  for (Mask pair : {Mask{0b011}, Mask{0b101}, Mask{0b110}}) CHECK(three.rank(pair) == 2);
  CHECK(three.circuits() == std::vector<Mask>{0b111});
}

TEST_CASE("flat lattice examples") {
  const auto l = flatLattice(concurrentLines());
  CHECK(l.flats.size() == 5);
  CHECK(l.bottom().elements == 0);
  CHECK(l.top().elements == 0b111);
  CHECK(l.top().mobius == 2);
  for (int i = 1; i <= 3; ++i) CHECK(l.flats[i].mobius == -1);

  const auto single = flatLattice(boolean(1));
  REQUIRE(single.flats.size() == 2);
  CHECK(single.flats[1].mobius == -1);

  // inclusion-exclusion on the boolean lattice: mu(top) = (-1)^2
  CHECK(flatLattice(boolean(2)).top().mobius == 1);
}

TEST_CASE("nbc basis examples") {
  const auto ind = nbcBasis(boolean(2));
  REQUIRE(ind.size() == 3);
  CHECK(ind[2] == std::vector<Mask>{0b11});

  const auto three = nbcBasis(concurrentLines());
  REQUIRE(three.size() == 3);
  CHECK(three[2] == std::vector<Mask>{0b011, 0b101});

  const auto parallel = nbcBasis(buildMatroid(columns({{1, 0}, {1, 0}})));
  // {2} is a broken circuit, so e2 = e1 and only e1 survives; |mu| of the rank-1 flat is 1
  CHECK(parallel[1] == std::vector<Mask>{0b01});
  CHECK(parallel.size() == 2);  // nothing in degree 2
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristicPolynomial(flatLattice(boolean(2))) == std::vector<long>{1, -2, 1});
  CHECK(characteristicPolynomial(flatLattice(concurrentLines())) == std::vector<long>{2, -3, 1});
  const auto empty = buildMatroid(QMatrix(2, 0));
  CHECK(characteristicPolynomial(flatLattice(empty)) == std::vector<long>{1});
  CHECK(polynomialString({2, -3, 1}) == "t^2 - 3t + 2");
  CHECK(polynomialString({1, 3, 2}) == "2t^2 + 3t + 1");
}

TEST_CASE("mobius, Whitney numbers and local components agree across routes") {
  for (const auto& m : corpus()) {
    const auto lattice = flatLattice(m);
    CHECK(characteristicPolynomial(lattice) == characteristicBySubsets(m));

    for (std::size_t x = 1; x < lattice.flats.size(); ++x) {
      long sum = 0;
      for (std::size_t y = 0; y <= x; ++y)
        if ((lattice.flats[y].elements & lattice.flats[x].elements) == lattice.flats[y].elements)
          sum += lattice.flats[y].mobius;
      CHECK(sum == 0);
    }

    const OSAlgebra os(m);
    const auto chi = characteristicPolynomial(lattice);
    for (int k = 0; k <= lattice.rank; ++k) {
      const long w = chi[lattice.rank - k];
      CHECK(os.dimension(k) == (w < 0 ? -w : w));
    }

    const auto dims = localComponentDims(lattice);
    const auto local = os.localBasis();
    for (const auto& f : lattice.flats) {
      const auto it = local.find(f.elements);
      const long nbcCount = it == local.end() ? 0 : static_cast<long>(it->second.size());
      CHECK(dims.at(f.elements) == nbcCount);
    }
  }
}

TEST_CASE("local component dims") {
  const auto dims = localComponentDims(flatLattice(concurrentLines()));
  CHECK(dims.at(0b111) == 2);
  CHECK(dims.at(0b001) == 1);
  CHECK(dims.at(0) == 1);
}

TEST_CASE("nbc dimension does not depend on element order") {
  const QMatrix cols = columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}});
  const auto reference = OSAlgebra(buildMatroid(cols));
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::mt19937 rng(9);
  for (int t = 0; t < 8; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    QMatrix p(cols.rows(), cols.cols());
    for (int j = 0; j < 5; ++j) p.col(j) = cols.col(perm[j]);
    const OSAlgebra os(buildMatroid(p));
    for (int k = 0; k <= 3; ++k) CHECK(os.dimension(k) == reference.dimension(k));
  }
}

TEST_CASE("os product examples") {
  const OSAlgebra os(concurrentLines());
  CHECK(osProduct(os, os.generator(0), os.generator(0)).empty());
  CHECK(osProduct(os, os.generator(0), os.generator(1)) == basisElement(0b011));
  // e2 e3 = e1 e3 - e1 e2, from d(e1 e2 e3) = e2e3 - e1e3 + e1e2 = 0
  OSAlgebra::Element expected{{0b011, Rational(-1)}, {0b101, Rational(1)}};
  CHECK(osProduct(os, os.generator(1), os.generator(2)) == expected);
  CHECK(osProduct(os, os.generator(2), os.generator(1)) == scale(expected, -1));
}

TEST_CASE("circuit relations vanish in normal form") {
  for (const auto& m : corpus()) {
    const OSAlgebra os(m);
    for (Mask c : m.circuits()) {
      OSAlgebra::Element sum;
      int sign = 1;
      for (Mask rest = c; rest; rest &= rest - 1) {
        const Mask bit = rest & -rest;
        for (const auto& [mono, coef] : os.normalForm(c & ~bit)) {
          sum[mono] += Rational(sign) * coef;
          if (sum[mono] == 0) sum.erase(mono);
        }
        sign = -sign;
      }
      CHECK(sum.empty());
    }
  }
}

TEST_CASE("os product is associative and graded commutative on basis monomials") {
  for (const auto& m : corpus()) {
    if (m.size() > 6) continue;
    const OSAlgebra os(m);
    std::vector<Mask> all;
    for (const auto& level : os.basis()) all.insert(all.end(), level.begin(), level.end());
    for (Mask a : all)
      for (Mask b : all) {
        const auto ab = os.product(basisElement(a), basisElement(b));
        const auto ba = os.product(basisElement(b), basisElement(a));
        const int s = (std::popcount(a) * std::popcount(b)) % 2 ? -1 : 1;
        CHECK(ab == scale(ba, s));
        for (Mask c : all) {
          const auto left = os.product(ab, basisElement(c));
          const auto right = os.product(basisElement(a), os.product(basisElement(b), basisElement(c)));
          CHECK(left == right);
        }
      }
  }
}

TEST_CASE("affine intersection poset") {
  auto line = [](long a, long b, long c) {
    AffineHyperplane h;
    h.normal = QVector(2);
    h.normal << Rational(a), Rational(b);
    h.constant = c;
    return h;
  };
  const std::vector<AffineHyperplane> parallel{line(1, 0, 0), line(1, 0, 1)};
  const auto p = affineIntersectionPoset(parallel, 2);
  REQUIRE(p.byCodim.size() == 2);
  CHECK(p.byCodim[1].size() == 2);

  const std::vector<AffineHyperplane> generic{line(1, 0, 0), line(0, 1, 0), line(1, 1, 1)};
  const auto g = affineIntersectionPoset(generic, 2);
  REQUIRE(g.byCodim.size() == 3);
  CHECK(g.byCodim[1].size() == 3);
  CHECK(g.byCodim[2].size() == 3);
  for (const auto& pt : g.byCodim[2]) CHECK(pt.hyperplanes.size() == 2);
  CHECK(g.covers.size() == 3 + 6);

  std::vector<AffineHyperplane> braid3;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      AffineHyperplane h;
      h.normal = QVector::Zero(3);
      h.normal(i) = 1;
      h.normal(j) = -1;
      h.constant = 0;
      braid3.push_back(h);
    }
  const auto b = affineIntersectionPoset(braid3, 3);
  // partition lattice of a 3-set: 1 + 3 + 1
  REQUIRE(b.byCodim.size() == 3);
  CHECK(b.byCodim[1].size() == 3);
  CHECK(b.byCodim[2].size() == 1);
  CHECK(b.byCodim[2][0].hyperplanes.size() == 3);
  CHECK(b.byCodim[2][0].dim == 1);
  CHECK(b.byCodim[2][0].cohomology().dims == std::vector<long>{1});
  const auto local = localMatroid(braid3, b.byCodim[2][0]);
  CHECK(std::abs(flatLattice(local).top().mobius) == 2);
}
