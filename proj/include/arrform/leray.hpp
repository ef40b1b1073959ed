#pragma once

// The E2 page of the Leray spectral sequence of U(A) -> X for an arrangement
// of hypersurfaces:
//
//   E2^{p,q} = sum over strata S of codimension q of H^p(S) (x) A_S (-q)
//
// with its weights, the purity hypothesis on strata, weight-forced
// degeneration, Betti numbers, and the resulting formality certificate.

#include "arrform/formality_index.hpp"
#include "arrform/matroid.hpp"
#include "arrform/toric.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arrform::leray {

enum class Source { Toric, Hyperplane, Synthetic };

std::string toString(Source s);

struct Stratum {
  std::string key;
  int codim = 0;
  std::vector<long> dims;    // dim H^p(S), p = 0, 1, ...
  std::vector<int> weights;  // declared weight of H^p(S)
  long localDim = 1;         // dim A_S
};

struct StrataData {
  Source source = Source::Synthetic;
  int ambientDim = 0;
  std::vector<Stratum> strata;
};

/// Throws std::invalid_argument unless there is exactly one codimension-0
/// stratum with dim A = 1, all dimensions are nonnegative and each degree
/// carries a weight.
void validate(const StrataData& sd);

StrataData strataDataFromToric(std::span<const toric::ToricHypersurface> arr, int ambientDim);
StrataData strataDataFromHyperplanes(std::span<const matroid::AffineHyperplane> arr,
                                     int ambientDim);

struct E2Entry {
  long dim = 0;
  std::set<int> weights;  // one element when the entry is pure
};

struct LerayTable {
  std::map<std::pair<int, int>, E2Entry> entries;  // (p, q) -> entry, nonzero only
  std::string filtrationNote;

  long dim(int p, int q) const;
  /// The weight of a pure entry; nothing when the entry is zero or mixed.
  std::optional<int> weight(int p, int q) const;
  int maxTotalDegree() const;
};

LerayTable assembleE2(const StrataData& sd);

struct PurityVerdict {
  std::string stratum;
  int codim = 0;
  int degree = 0;
  int declaredWeight = 0;
  bool constrained = false;  // codim + degree <= r
  bool pure = true;          // declared weight equals 2 * degree
};

struct PurityReport {
  FormalityIndex r = FormalityIndex::infinite();
  bool passed = true;
  std::vector<PurityVerdict> verdicts;
  std::vector<PurityVerdict> failures;
};

PurityReport purityHypothesisCheck(const StrataData& sd, FormalityIndex r);

enum class DegenerationVerdict { Degenerate, Unknown };

struct ForcedZero {
  int page = 2;
  int p = 0, q = 0;          // source
  int targetP = 0, targetQ = 0;
  int sourceWeight = 0, targetWeight = 0;
};

struct DegenerationReport {
  DegenerationVerdict verdict = DegenerationVerdict::Unknown;
  std::vector<ForcedZero> forcedZero;
  std::string reason;
};

/// Every d_r : E_r^{p,q} -> E_r^{p+r,q-r+1} between nonzero pure entries
/// goes from weight 2(p+q) to weight 2(p+q+1) and vanishes. Entries that are
/// mixed or of the wrong weight leave the verdict unknown.
DegenerationReport degenerationByWeights(const LerayTable& t);

struct BettiReport {
  std::vector<long> betti;
  std::vector<int> weights;  // H^k pure of weight 2k
  std::string poincare;
  std::string typeNote;
};

/// Throws Refusal when degeneration is not established.
BettiReport bettiAndPoincare(const LerayTable& t);

struct FormalityCertificate {
  FormalityIndex r = FormalityIndex::infinite();
  Source source = Source::Synthetic;
  PurityReport purity;
  LerayTable table;
  DegenerationReport degeneration;
  std::vector<std::string> reasoning;
};

struct CertificateOutcome {
  std::optional<FormalityCertificate> certificate;
  PurityReport report;
};

CertificateOutcome formalityCertificate(const StrataData& sd, FormalityIndex r);

}  // namespace arrform::leray
