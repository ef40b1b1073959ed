#include "arrform/crosscheck.hpp"
#include "arrform/leray.hpp"
#include "arrangements.hpp"
#include "doctest.h"

#include <algorithm>
#include <complex>
#include <random>

using namespace arrform;
using namespace arrform::crosscheck;
using fixtures::toricEq;

namespace {

// Count distinct roots numerically: the points are well separated for the
// small exponents used here.
long countRootsNumerically(const std::vector<std::pair<long, Rational>>& eqs) {
  std::vector<std::complex<double>> roots;
  for (const auto& [k, t] : eqs) {
    const long n = k < 0 ? -k : k;
    const double phase = t.convert_to<double>();
    for (long m = 0; m < n; ++m) {
      const double angle = 2 * M_PI * (phase + static_cast<double>(m)) / static_cast<double>(k);
      const std::complex<double> z = std::polar(1.0, angle);
      bool seen = false;
      for (const auto& r : roots) seen = seen || std::abs(r - z) < 1e-9;
      if (!seen) roots.push_back(z);
    }
  }
  return static_cast<long>(roots.size());
}

std::vector<toric::ToricHypersurface> randomLine(std::mt19937& rng, int count) {
  std::uniform_int_distribution<int> exp(-3, 3), den(1, 4);
  std::vector<toric::ToricHypersurface> out;
  while (static_cast<int>(out.size()) < count) {
    const int k = exp(rng);
    if (k == 0) continue;
    const int q = den(rng);
    std::uniform_int_distribution<int> num(0, q - 1);
    out.push_back(toricEq({k}, Rational(num(rng), q), static_cast<int>(out.size())));
  }
  return out;
}

std::vector<toric::ToricHypersurface> square(const std::vector<toric::ToricHypersurface>& line) {
  std::vector<toric::ToricHypersurface> out;
  for (int c = 0; c < 2; ++c)
    for (const auto& h : line) {
      std::vector<long> chi{0, 0};
      chi[c] = static_cast<long>(h.chi(0));
      out.push_back(toricEq(chi, h.phase.value(), static_cast<int>(out.size())));
    }
  return out;
}

}  // namespace

TEST_CASE("puncture points") {
  const std::vector<toric::ToricHypersurface> arr{toricEq({2}, 0), toricEq({1}, Rational(1, 2)),
                                                  toricEq({-3}, Rational(1, 4))};
  const auto p = puncturePhases(arr);
  CHECK(static_cast<long>(p.size()) ==
        countRootsNumerically({{2, Rational(0)}, {1, Rational(1, 2)}, {-3, Rational(1, 4)}}));
  CHECK(p.count(Rational(1, 2)) == 1);
  CHECK(p.count(Rational(0)) == 1);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto line = randomLine(rng, 1 + trial % 5);
    std::vector<std::pair<long, Rational>> eqs;
    for (const auto& h : line) eqs.push_back({static_cast<long>(h.chi(0)), h.phase.value()});
    CHECK(static_cast<long>(puncturePhases(line).size()) == countRootsNumerically(eqs));
  }

  ZVector chi(3);
  chi << 0, -2, 0;
  CHECK(coordinateOf(chi) == 1);
  chi(0) = 1;
  CHECK_FALSE(coordinateOf(chi));
}

TEST_CASE("the two engines agree on punctured lines and their squares") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const auto line = randomLine(rng, 1 + trial % 5);
    const auto r1 = crossEngineCheck(line, 1);
    CHECK(r1.applicable);
    CHECK(r1.agree);
    CHECK(r1.markedPoints[0] == static_cast<int>(puncturePhases(line).size()) + 2);
    if (line.size() <= 3) {
      const auto r2 = crossEngineCheck(square(line), 2);
      CHECK(r2.applicable);
      CHECK(r2.agree);
    }
  }
}

TEST_CASE("cross-engine rows carry degree and weight") {
  const std::vector<toric::ToricHypersurface> two{toricEq({2}, 0)};
  const auto r = crossEngineCheck(two, 1);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].degree == 0);
  CHECK(r.rows[0].weight == 0);
  CHECK(r.rows[1].degree == 1);
  CHECK(r.rows[1].weight == 2);
  CHECK(r.rows[1].model == 3);
  CHECK(r.rows[1].leray == 3);

  const std::vector<toric::ToricHypersurface> diag{toricEq({1, 1}, 0)};
  CHECK_FALSE(crossEngineCheck(diag, 2).applicable);

  const auto torus = crossEngineCheck(std::vector<toric::ToricHypersurface>{}, 2);
  CHECK(torus.agree);
  CHECK(torus.rows.size() == 3);
}

TEST_CASE("model self-test") {
  const auto lines = modelSelfTest();
  CHECK(lines.size() > 20);
  for (const auto& l : lines) {
    INFO(l.name << ": " << l.detail);
    CHECK(l.passed);
  }
  const std::vector<toric::ToricHypersurface> diag{toricEq({1, 1}, 0)};
  const auto withExtra = modelSelfTest(diag, 2);
  const auto input = std::find_if(withExtra.begin(), withExtra.end(),
                                  [](const auto& l) { return l.name == "cross-engine: input arrangement"; });
  REQUIRE(input != withExtra.end());
  CHECK_FALSE(input->passed);
  CHECK(input->detail == "some character involves more than one coordinate");
}
