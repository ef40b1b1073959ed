#pragma once

// The Deligne-Morgan model of X - D for a smooth compact X and a simple
// normal crossing divisor D = D_1 + ... + D_s, built from the cohomology of
// the intersections D_I, their restriction maps and Gysin maps:
//
//   M_q^k = sum over |I| = q - k of H^{2k-q}(D_I)(k - q)
//
// with the signed restriction product and the Gysin differential. Also the
// kernel and cokernel sub/quotient models that witness formality under a
// purity hypothesis, and the small builders used to instantiate tori and
// punctured lines.

#include "arrform/cdga.hpp"
#include "arrform/formality_index.hpp"
#include "arrform/weighted.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrform::morgan {

/// Subset of divisor components, bit i for component i (0-based).
using Subset = std::uint64_t;
constexpr int kMaxComponents = 63;

int popcount(Subset s);
/// "{1,3}" with components numbered from 1.
std::string subsetString(Subset s);

/// Sign of the permutation sorting I (ascending) followed by I' (ascending).
/// Zero when the sets meet.
int shuffleSign(Subset i, Subset iPrime);

struct CompactificationDatum {
  int componentCount = 0;
  int dimension = 0;  // complex dimension of X
  std::map<Subset, GradedAlgebra> strata;  // H(D_I) for nonempty D_I; key 0 is X
  std::map<std::pair<Subset, Subset>, QMatrix> restrictions;  // (I, J), I strictly inside J
  std::map<std::pair<Subset, int>, QMatrix> gysin;  // (I, i), i in I: H(D_I) -> H(D_{I-i})

  bool hasStratum(Subset s) const { return strata.count(s) > 0; }
  /// Identity for I == J. A missing map between nonzero spaces throws
  /// std::invalid_argument naming the pair; with a zero side it is zero.
  QMatrix restriction(Subset i, Subset j) const;
  QMatrix gysinMap(Subset i, int component) const;
};

/// Structural consistency: X present, strata closed under subsets, map
/// shapes and degrees, functoriality of restrictions, restrictions are ring
/// maps, and each H(D_I) is associative and graded commutative. Projection
/// formula compatibility is not checked here; the model's axioms test it.
std::vector<std::string> verifyDatum(const CompactificationDatum& cd);

struct ModelBasisElement {
  Subset subset = 0;
  int element = 0;  // basis index in H(D_I)
  int degree = 0;   // k
  int weight = 0;   // q

  int twist() const { return degree - weight; }
};

struct BigradedModel {
  Cdga cdga;
  std::vector<ModelBasisElement> basis;

  int dimension() const { return cdga.dimension(); }
  std::vector<int> indicesOf(int degree, int weight) const;
};

BigradedModel buildModel(const CompactificationDatum& cd);
AxiomReport verifyCdgaAxioms(const BigradedModel& m);
/// dim H^k(M_q) per (k, q), nonzero entries only.
BigradedDims cohomologyOfModel(const BigradedModel& m);

enum class WitnessKind { Kernel, Cokernel };

struct FormalityWitness {
  WitnessKind kind = WitnessKind::Kernel;
  Cdga carrier;                    // zero differential
  std::vector<long> dims;          // dim per degree
  QMatrix map;                     // K -> M (inclusion) or M -> C (projection)
  bool productClosed = true;       // K: closed under products; C: product well defined
  std::vector<std::string> productFailures;
  QuasiIsoVerdict quasiIso;
};

/// K^k = ker(M_{2k}^k -> M_{2k}^{k+1}). Throws Refusal with a (k, q) witness
/// when H^k(M_q) != 0 for some q != 2k, k <= r.
FormalityWitness extractKernelModel(const BigradedModel& m, FormalityIndex r);
/// C^k = coker(M_k^{k-1} -> M_k^k). Throws Refusal with a (k, q) witness when
/// H^k(M_q) != 0 for some q != k, k <= r + 1.
FormalityWitness extractCokernelModel(const BigradedModel& m, FormalityIndex r);

/// Components of the first factor keep their numbers; those of the second
/// are shifted by its component count.
CompactificationDatum kunnethProduct(const CompactificationDatum& a, const CompactificationDatum& b);

/// A point with no divisor.
CompactificationDatum builderPoint();
/// The projective line with s distinct marked points.
CompactificationDatum builderProjectiveLineMarked(int s);

/// Betti numbers of X - p for a compact X of complex dimension d >= 1,
/// each degree pure of weight equal to the degree.
WeightedDims localizationBetti(const std::vector<long>& bettiOfX, int d);

}  // namespace arrform::morgan
