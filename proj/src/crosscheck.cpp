#include "arrform/crosscheck.hpp"

#include "arrform/errors.hpp"
#include "arrform/leray.hpp"

#include <map>

namespace arrform::crosscheck {

using toric::Phase;
using toric::ToricHypersurface;

namespace {

void addRoots(std::set<Rational>& out, const Integer& k, const Phase& t) {
  const Integer n = k < 0 ? Integer(-k) : k;
  for (Integer m = 0; m < n; ++m) out.insert(modOne((t.value() + Rational(m)) / Rational(k)));
}

ToricHypersurface eq(int n, int coord, long k, const Rational& t, int label) {
  ToricHypersurface h;
  h.chi = ZVector::Zero(n);
  h.chi(coord) = k;
  h.phase = Phase(t);
  h.label = label;
  return h;
}

// The same equations in each of the n coordinates.
std::vector<ToricHypersurface> power(const std::vector<ToricHypersurface>& line, int n) {
  std::vector<ToricHypersurface> out;
  for (int c = 0; c < n; ++c)
    for (const auto& h : line) out.push_back(eq(n, c, static_cast<long>(h.chi(0)), h.phase.value(),
                                                static_cast<int>(out.size())));
  return out;
}

std::string dimsString(const std::vector<long>& dims) {
  std::string s = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
  return s + ")";
}

}  // namespace

std::set<Rational> puncturePhases(std::span<const ToricHypersurface> arr) {
  std::set<Rational> out;
  for (const auto& h : arr) {
    if (h.chi.size() != 1 || h.chi(0) == 0) throw std::invalid_argument("expected nonzero characters of length 1");
    addRoots(out, h.chi(0), h.phase);
  }
  return out;
}

std::optional<int> coordinateOf(const ZVector& chi) {
  std::optional<int> coord;
  for (Eigen::Index i = 0; i < chi.size(); ++i)
    if (chi(i) != 0) {
      if (coord) return std::nullopt;
      coord = static_cast<int>(i);
    }
  return coord;
}

namespace {

std::optional<std::vector<int>> markedCounts(std::span<const ToricHypersurface> arr, int ambientDim) {
  std::vector<std::set<Rational>> points(ambientDim);
  for (const auto& h : arr) {
    const auto c = coordinateOf(h.chi);
    if (!c) return std::nullopt;
    addRoots(points[*c], h.chi(*c), h.phase);
  }
  std::vector<int> counts;
  for (const auto& p : points) counts.push_back(static_cast<int>(p.size()) + 2);
  return counts;
}

}  // namespace

std::optional<morgan::CompactificationDatum> productCompactification(std::span<const ToricHypersurface> arr,
                                                                     int ambientDim) {
  const auto counts = markedCounts(arr, ambientDim);
  if (!counts) return std::nullopt;
  auto cd = morgan::builderPoint();
  for (int s : *counts) cd = morgan::kunnethProduct(cd, morgan::builderProjectiveLineMarked(s));
  return cd;
}

BigradedDims lerayGradedDims(std::span<const ToricHypersurface> arr, int ambientDim) {
  const auto table = leray::assembleE2(leray::strataDataFromToric(arr, ambientDim));
  const auto deg = leray::degenerationByWeights(table);
  if (deg.verdict != leray::DegenerationVerdict::Degenerate)
    throw Refusal("degeneration not established", {deg.reason});
  BigradedDims out;
  for (const auto& [pq, e] : table.entries) out[{pq.first + pq.second, *table.weight(pq.first, pq.second)}] += e.dim;
  return out;
}

CrossCheckReport crossEngineCheck(std::span<const ToricHypersurface> arr, int ambientDim) {
  CrossCheckReport report;
  const auto counts = markedCounts(arr, ambientDim);
  if (!counts) {
    report.reason = "some character involves more than one coordinate";
    return report;
  }
  report.applicable = true;
  report.markedPoints = *counts;
  const auto model = cohomologyOfModel(morgan::buildModel(*productCompactification(arr, ambientDim)));
  const auto leray = lerayGradedDims(arr, ambientDim);
  std::set<std::pair<int, int>> keys;
  for (const auto& [kq, d] : model) keys.insert(kq);
  for (const auto& [kq, d] : leray) keys.insert(kq);
  report.agree = true;
  for (const auto& kq : keys) {
    GradedRow row{kq.first, kq.second, model.count(kq) ? model.at(kq) : 0, leray.count(kq) ? leray.at(kq) : 0};
    report.agree = report.agree && row.model == row.leray;
    report.rows.push_back(row);
  }
  report.reason = report.agree ? "graded dimensions agree" : "graded dimensions differ";
  return report;
}

std::vector<SelfTestLine> modelSelfTest(std::span<const ToricHypersurface> extra, int extraAmbientDim) {
  std::vector<SelfTestLine> out;
  const FormalityIndex inf = FormalityIndex::infinite();

  std::vector<std::pair<std::string, morgan::CompactificationDatum>> builders;
  for (int s = 0; s <= 4; ++s)
    builders.push_back({"P1 marked at " + std::to_string(s), morgan::builderProjectiveLineMarked(s)});
  for (int s = 0; s <= 3; ++s)
    builders.push_back({"square of P1 marked at " + std::to_string(s),
                        morgan::kunnethProduct(morgan::builderProjectiveLineMarked(s),
                                               morgan::builderProjectiveLineMarked(s))});
  for (const auto& [name, cd] : builders) {
    const auto datum = morgan::verifyDatum(cd);
    const auto m = morgan::buildModel(cd);
    const auto axioms = morgan::verifyCdgaAxioms(m);
    out.push_back({"axioms: " + name, datum.empty() && axioms.ok(),
                   "dim " + std::to_string(m.dimension()) + ", " + std::to_string(axioms.checkedTriples) +
                       " triples, " + std::to_string(axioms.violationCount) + " violations"});
    const bool compact = cd.componentCount == 0;
    try {
      const auto w = compact ? morgan::extractCokernelModel(m, inf) : morgan::extractKernelModel(m, inf);
      out.push_back({std::string(compact ? "cokernel model: " : "kernel model: ") + name,
                     w.productClosed && w.quasiIso.passed, "dims " + dimsString(w.dims) + ", " + w.quasiIso.reason});
    } catch (const Refusal& e) {
      out.push_back({"formality witness: " + name, false, e.what()});
    }
  }

  auto faulty = morgan::kunnethProduct(morgan::builderProjectiveLineMarked(2), morgan::builderProjectiveLineMarked(2));
  {
    auto& g = faulty.gysin.at({1, 0});
    const auto& src = faulty.strata.at(1);
    for (int c = 0; c < src.dimension(); ++c)
      if (src.degree(c) == 0) g.col(c) = -g.col(c);
  }
  const auto fr = morgan::verifyCdgaAxioms(morgan::buildModel(faulty));
  out.push_back({"fault injection: degree-0 Gysin sign flip", fr.dSquaredZero && !fr.leibniz,
                 "d o d = 0 " + std::string(fr.dSquaredZero ? "holds" : "fails") + ", Leibniz " +
                     (fr.leibniz ? "holds" : "fails")});

  const std::vector<std::pair<std::string, std::vector<ToricHypersurface>>> lines{
      {"z = 1", {eq(1, 0, 1, 0, 0)}},
      {"z^2 = 1", {eq(1, 0, 2, 0, 0)}},
      {"z = 1, z = -1", {eq(1, 0, 1, 0, 0), eq(1, 0, 1, Rational(1, 2), 1)}},
      {"z^3 = i, z^-2 = 1", {eq(1, 0, 3, Rational(1, 4), 0), eq(1, 0, -2, 0, 1)}},
      {"z^2 = 1, z^4 = 1", {eq(1, 0, 2, 0, 0), eq(1, 0, 4, 0, 1)}}};
  auto crossLine = [&out](const std::string& name, std::span<const ToricHypersurface> arr, int n) {
    const auto r = crossEngineCheck(arr, n);
    std::string detail;
    for (const auto& row : r.rows)
      detail += "H^" + std::to_string(row.degree) + " w" + std::to_string(row.weight) + ": " +
                std::to_string(row.model) + "/" + std::to_string(row.leray) + " ";
    out.push_back({"cross-engine: " + name, r.applicable && r.agree, r.applicable ? detail + r.reason : r.reason});
  };
  for (const auto& [name, arr] : lines) {
    crossLine(name, arr, 1);
    crossLine("square of " + name, power(arr, 2), 2);
  }
  if (!extra.empty() || extraAmbientDim > 0) crossLine("input arrangement", extra, extraAmbientDim);

  const auto loc1 = morgan::localizationBetti({1, 0, 1}, 1);
  const auto loc2 = morgan::localizationBetti({1, 0, 2, 0, 1}, 2);
  out.push_back({"localization: P1 minus a point", loc1.dims == std::vector<long>{1, 0, 0}, dimsString(loc1.dims)});
  out.push_back({"localization: P1 x P1 minus a point", loc2.dims == std::vector<long>{1, 0, 2, 0, 0},
                 dimsString(loc2.dims)});
  return out;
}

}  // namespace arrform::crosscheck
