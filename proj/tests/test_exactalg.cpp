#include "arrform/exactalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace arrform;

namespace {

QMatrix q(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  QMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

ZMatrix z(std::initializer_list<std::initializer_list<long>> rows) { return toInteger(q(rows)); }

ZMatrix randomMatrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  ZMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

ZMatrix randomUnimodular(std::mt19937& rng, int n) {
  ZMatrix u = ZMatrix::Identity(n, n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = pick(rng), j = pick(rng);
    if (i == j) {
      u.row(i) *= Integer(-1);
      continue;
    }
    u.row(i) += Integer(coef(rng)) * u.row(j);
  }
  return u;
}

bool sameLattice(const ZMatrix& a, const ZMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (!latticeCoordinates(b, a.row(i).transpose())) return false;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    if (!latticeCoordinates(a, b.row(i).transpose())) return false;
  return true;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(QMatrix::Identity(2, 2)) == 2);
  CHECK(rank(q({{1, 2}, {2, 4}})) == 1);
  const QMatrix m = q({{2, -1, 3}, {0, 4, 1}, {5, 2, -2}});
  // Laplace expansion: 2*(4*-2 - 1*2) + 1*(0*-2 - 1*5) + 3*(0*2 - 4*5) = -85
  CHECK(oracle::cofactorDeterminant(m) == -85);
  CHECK(rank(m) == 3);
  CHECK(rank(QMatrix(0, 3)) == 0);
}

TEST_CASE("kernel basis") {
  CHECK(kernelBasis(QMatrix::Identity(3, 3)).empty());

  const auto k1 = kernelBasis(q({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0](0) == -k1[0](1));

  const QMatrix m = q({{1, 2}, {2, 4}});
  const auto k2 = kernelBasis(m);
  REQUIRE(k2.size() == 1);
  CHECK(isZero(m * k2[0]));
  QVector expected(2);
  expected << Rational(2), Rational(-1);
  CHECK(isZero(m * expected));
  // proportional to (2, -1)
  CHECK(k2[0](0) * expected(1) == k2[0](1) * expected(0));
}

TEST_CASE("rank plus nullity, rank agrees with minors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    ZMatrix zm = randomMatrix(rng, rows, cols, 2);
    if (trial % 3 == 0 && rows > 1) zm.row(rows - 1) = zm.row(0) * Integer(2);
    const QMatrix m = toRational(zm);
    const auto kernel = kernelBasis(m);
    CHECK(rank(m) + static_cast<Eigen::Index>(kernel.size()) == m.cols());
    CHECK(rank(m) == oracle::rankByMinors(m));
    for (const auto& v : kernel) CHECK(isZero(m * v));
  }
}

TEST_CASE("solve and inverse") {
  const QMatrix a = q({{1, 2}, {3, 4}});
  QVector b(2);
  b << Rational(5), Rational(6);
  const auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(q({{1, 1}, {1, 1}}), b));
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == QMatrix::Identity(2, 2));
  CHECK_FALSE(inverse(q({{1, 2}, {2, 4}})));
}

TEST_CASE("smith normal form examples") {
  CHECK(smithNormalForm(z({{2}})).diag == std::vector<Integer>{2});
  CHECK(smithNormalForm(z({{2, 0}, {0, 3}})).diag == std::vector<Integer>{1, 6});
  CHECK(oracle::smithByMinors(z({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(smithNormalForm(ZMatrix(ZMatrix::Zero(2, 2))).diag == std::vector<Integer>{0, 0});
  QMatrix frac = q({{1, 0}});
  frac(0, 1) = Rational(1, 2);
  CHECK_THROWS_AS(smithNormalForm(frac), std::invalid_argument);
}

TEST_CASE("smith decomposition invariants on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    ZMatrix m = randomMatrix(rng, rows, cols, 4);
    if (trial % 5 == 0) m.row(0) = ZVector::Zero(cols).transpose();
    const auto snf = smithNormalForm(m);
    CHECK(snf.left * m * snf.right == snf.diagonal(rows, cols));
    CHECK(abs(oracle::cofactorDeterminant(snf.left)) == 1);
    CHECK(abs(oracle::cofactorDeterminant(snf.right)) == 1);
    CHECK(snf.right * snf.rightInverse == ZMatrix::Identity(cols, cols));
    for (std::size_t i = 0; i + 1 < snf.diag.size(); ++i) {
      CHECK(snf.diag[i] >= 0);
      if (snf.diag[i] == 0) CHECK(snf.diag[i + 1] == 0);
      else CHECK(snf.diag[i + 1] % snf.diag[i] == 0);
    }
    CHECK(snf.diag == oracle::smithByMinors(m));
  }
}

TEST_CASE("hermite basis") {
  CHECK(hermiteBasis(z({{2, 4}})) == z({{2, 4}}));
  const ZMatrix h = hermiteBasis(z({{1, 1}, {1, -1}}));
  CHECK(h == z({{1, 1}, {0, 2}}));
  CHECK(sameLattice(h, z({{1, 1}, {1, -1}})));
  CHECK(hermiteBasis(ZMatrix(0, 3)).rows() == 0);
  CHECK(hermiteBasis(z({{-3, 0}, {0, 0}})) == z({{3, 0}}));
}

TEST_CASE("hermite basis is canonical under unimodular change of basis") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + trial % 3, n = k + trial % 2;
    const ZMatrix b = randomMatrix(rng, k, n, 3);
    if (rank(toRational(b)) != k) continue;
    const ZMatrix h = hermiteBasis(b);
    CHECK(hermiteBasis(h) == h);
    const ZMatrix moved = randomUnimodular(rng, k) * b;
    CHECK(hermiteBasis(moved) == h);
    CHECK(sameLattice(h, b));
    // pivots positive, entries above pivots reduced
    Eigen::Index col = 0;
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      while (h(r, col) == 0) ++col;
      CHECK(h(r, col) > 0);
      for (Eigen::Index above = 0; above < r; ++above) {
        CHECK(h(above, col) >= 0);
        CHECK(h(above, col) < h(r, col));
      }
    }
  }
}

TEST_CASE("saturation") {
  CHECK(saturate(z({{2, 4}})) == z({{1, 2}}));
  const ZMatrix full = saturate(z({{1, 1}, {1, -1}}));
  CHECK(full == z({{1, 0}, {0, 1}}));
  CHECK(saturationIndex(z({{1, 1}, {1, -1}})) == 2);
  CHECK(saturate(z({{1, 2}})) == z({{1, 2}}));
  CHECK(saturate(ZMatrix(0, 2)).rows() == 0);
}

TEST_CASE("saturation is idempotent and its index is the torsion product") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + trial % 3, n = 3;
    ZMatrix b = randomMatrix(rng, k, n, 4);
    if (rank(toRational(b)) != k) continue;
    const ZMatrix s = saturate(b);
    CHECK(s.rows() == k);
    CHECK(saturate(s) == s);
    Integer prod = 1;
    for (const auto& t : torsionInvariants(b)) prod *= t;
    CHECK(saturationIndex(b) == prod);
    // every input row is in the saturation
    for (Eigen::Index i = 0; i < b.rows(); ++i) CHECK(latticeCoordinates(s, b.row(i).transpose()));
  }
}

TEST_CASE("torsion invariants") {
  CHECK(torsionInvariants(z({{2}})) == std::vector<Integer>{2});
  CHECK(torsionInvariants(z({{1, 1}, {1, -1}})) == std::vector<Integer>{2});
  CHECK(oracle::smithByMinors(z({{1, 1}, {1, -1}})) == std::vector<Integer>{1, 2});
  CHECK(torsionInvariants(ZMatrix(ZMatrix::Identity(3, 3))).empty());
}

TEST_CASE("mod one") {
  CHECK(modOne(Rational(3, 2)) == Rational(1, 2));
  CHECK(modOne(Rational(-1, 3)) == Rational(2, 3));
  CHECK(modOne(Rational(2)) == 0);
}
