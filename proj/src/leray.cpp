#include "arrform/leray.hpp"

#include "arrform/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrform::leray {

std::string toString(Source s) {
  switch (s) {
    case Source::Toric: return "toric";
    case Source::Hyperplane: return "hyperplane";
    case Source::Synthetic: return "strata";
  }
  return "unknown";
}

void validate(const StrataData& sd) {
  int ambient = 0;
  for (const auto& s : sd.strata) {
    if (s.codim < 0) throw std::invalid_argument("stratum " + s.key + " has negative codimension");
    if (s.dims.size() != s.weights.size())
      throw std::invalid_argument("stratum " + s.key + " needs one weight per degree");
    for (long d : s.dims)
      if (d < 0) throw std::invalid_argument("stratum " + s.key + " has a negative dimension");
    if (s.localDim < 0) throw std::invalid_argument("stratum " + s.key + " has negative dim A");
    if (s.codim == 0) {
      ++ambient;
      if (s.localDim != 1) throw std::invalid_argument("the ambient stratum must have dim A = 1");
    }
  }
  if (ambient != 1)
    throw std::invalid_argument("expected exactly one codimension-0 stratum, found " +
                                std::to_string(ambient));
}

namespace {

long localDimension(const matroid::LinearMatroid& m) {
  const long mu = matroid::flatLattice(m).top().mobius;
  return mu < 0 ? -mu : mu;
}

}  // namespace

StrataData strataDataFromToric(std::span<const toric::ToricHypersurface> arr, int ambientDim) {
  StrataData sd;
  sd.source = Source::Toric;
  sd.ambientDim = ambientDim;
  const auto poset = toric::buildLayerPoset(arr, ambientDim);
  for (const auto& layer : poset.layers) {
    const auto local = toric::localSubarrangement(arr, layer);
    QMatrix cols(ambientDim, static_cast<Eigen::Index>(local.size()));
    std::vector<int> labels;
    for (std::size_t k = 0; k < local.size(); ++k) {
      cols.col(k) = toRational(local[k].chi);
      labels.push_back(local[k].label);
    }
    const auto coh = toric::layerCohomology(layer);
    sd.strata.push_back({layer.key(), layer.codim(), coh.dims, coh.weights,
                         localDimension(matroid::LinearMatroid(cols, labels))});
  }
  return sd;
}

StrataData strataDataFromHyperplanes(std::span<const matroid::AffineHyperplane> arr,
                                     int ambientDim) {
  StrataData sd;
  sd.source = Source::Hyperplane;
  sd.ambientDim = ambientDim;
  const auto poset = matroid::affineIntersectionPoset(arr, ambientDim);
  for (const auto& flat : poset.flats) {
    const auto coh = flat.cohomology();
    sd.strata.push_back(
        {flat.key, flat.codim(), coh.dims, coh.weights, localDimension(matroid::localMatroid(arr, flat))});
  }
  return sd;
}

long LerayTable::dim(int p, int q) const {
  const auto it = entries.find({p, q});
  return it == entries.end() ? 0 : it->second.dim;
}

std::optional<int> LerayTable::weight(int p, int q) const {
  const auto it = entries.find({p, q});
  if (it == entries.end() || it->second.weights.size() != 1) return std::nullopt;
  return *it->second.weights.begin();
}

int LerayTable::maxTotalDegree() const {
  int top = 0;
  for (const auto& [pq, e] : entries) top = std::max(top, pq.first + pq.second);
  return top;
}

LerayTable assembleE2(const StrataData& sd) {
  validate(sd);
  LerayTable t;
  for (const auto& s : sd.strata)
    for (std::size_t p = 0; p < s.dims.size(); ++p) {
      const long d = s.dims[p] * s.localDim;
      if (d == 0) continue;
      auto& e = t.entries[{static_cast<int>(p), s.codim}];
      e.dim += d;
      e.weights.insert(s.weights[p] + 2 * s.codim);
    }
  t.filtrationNote = "E_inf^{p,q} = gr_L^p H^{p+q}(U) for the decreasing Leray filtration L";
  return t;
}

PurityReport purityHypothesisCheck(const StrataData& sd, FormalityIndex r) {
  validate(sd);
  PurityReport report;
  report.r = r;
  for (const auto& s : sd.strata)
    for (std::size_t k = 0; k < s.dims.size(); ++k) {
      if (s.dims[k] == 0) continue;
      PurityVerdict v;
      v.stratum = s.key;
      v.codim = s.codim;
      v.degree = static_cast<int>(k);
      v.declaredWeight = s.weights[k];
      v.constrained = r.covers(s.codim + v.degree);
      v.pure = v.declaredWeight == 2 * v.degree;
      if (v.constrained && !v.pure) report.failures.push_back(v);
      report.verdicts.push_back(std::move(v));
    }
  report.passed = report.failures.empty();
  return report;
}

DegenerationReport degenerationByWeights(const LerayTable& t) {
  DegenerationReport report;
  for (const auto& [pq, e] : t.entries) {
    const auto [p, q] = pq;
    if (e.weights.size() != 1 || *e.weights.begin() != 2 * (p + q)) {
      report.verdict = DegenerationVerdict::Unknown;
      report.reason = "E2^{" + std::to_string(p) + "," + std::to_string(q) +
                      "} is not pure of weight " + std::to_string(2 * (p + q));
      report.forcedZero.clear();
      return report;
    }
  }
  for (const auto& [pq, e] : t.entries) {
    const auto [p, q] = pq;
    for (int page = 2; q - page + 1 >= 0; ++page) {
      const int tp = p + page, tq = q - page + 1;
      if (t.dim(tp, tq) == 0) continue;
      report.forcedZero.push_back({page, p, q, tp, tq, 2 * (p + q), 2 * (tp + tq)});
    }
  }
  report.verdict = DegenerationVerdict::Degenerate;
  report.reason = "every differential changes the weight by 2, so E_inf = E_2";
  return report;
}

BettiReport bettiAndPoincare(const LerayTable& t) {
  const auto deg = degenerationByWeights(t);
  if (deg.verdict != DegenerationVerdict::Degenerate)
    throw Refusal("degeneration not established; E2 sums would only bound the Betti numbers",
                  {deg.reason});
  BettiReport out;
  out.betti.assign(t.maxTotalDegree() + 1, 0);
  for (const auto& [pq, e] : t.entries) out.betti[pq.first + pq.second] += e.dim;
  for (std::size_t k = 0; k < out.betti.size(); ++k) out.weights.push_back(2 * static_cast<int>(k));
  std::vector<long> ascending = out.betti;
  std::string poly;
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    if (ascending[k] == 0) continue;
    if (!poly.empty()) poly += " + ";
    if (k == 0 || ascending[k] != 1) poly += std::to_string(ascending[k]);
    if (k >= 1) poly += "t";
    if (k >= 2) poly += "^" + std::to_string(k);
  }
  out.poincare = poly.empty() ? "0" : poly;
  out.typeNote = "each H^k is pure of weight 2k, hence of Hodge type (k,k)";
  return out;
}

CertificateOutcome formalityCertificate(const StrataData& sd, FormalityIndex r) {
  CertificateOutcome outcome;
  outcome.report = purityHypothesisCheck(sd, r);
  if (!outcome.report.passed) return outcome;

  FormalityCertificate c;
  c.r = r;
  c.source = sd.source;
  c.purity = outcome.report;
  c.table = assembleE2(sd);
  c.degeneration = degenerationByWeights(c.table);
  switch (sd.source) {
    case Source::Toric:
      c.reasoning.push_back("strata are translated subtori (C*)^d; by Kunneth H^k is pure of weight 2k");
      break;
    case Source::Hyperplane:
      c.reasoning.push_back("strata are affine spaces; only H^0 = Q(0), pure of weight 0");
      break;
    case Source::Synthetic:
      c.reasoning.push_back("declared strata cohomology checked degree by degree");
      break;
  }
  const std::string rs = r.str();
  c.reasoning.push_back("H^k(S) pure of weight 2k whenever codim(S) + k <= " + rs);
  c.reasoning.push_back("E2^{p,q} pure of weight 2(p+q) for p + q <= " + rs +
                        "; Leray graded pieces of H^k(U) are subquotients, so H^k(U) is pure of weight 2k for k <= " + rs);
  c.reasoning.push_back("weight-2k purity through degree " + rs +
                        ": the weight-2k cocycles of the Deligne-Morgan model form a zero-differential sub-cdga whose inclusion is a " +
                        rs + "-quasi-isomorphism");
  c.reasoning.push_back("U(A) is " + (r.isInfinite() ? std::string("formal") : rs + "-formal"));
  outcome.certificate = std::move(c);
  return outcome;
}

}  // namespace arrform::leray
