#pragma once

// Layers of toric arrangements.
//
// A hypersurface {z^chi = exp(2 pi i t)} in the torus (C*)^n is given by a
// nonzero character chi in Z^n and a phase t in Q/Z. A layer (connected
// component of an intersection) is a translated subtorus: it is described by
// a saturated sublattice of the character lattice and the homomorphism from
// that sublattice to Q/Z giving the value of each character on the layer.

#include "arrform/exactalg.hpp"
#include "arrform/weighted.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arrform::toric {

/// A rational number reduced modulo one, kept in [0, 1).
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rational& t) : value_(modOne(t)) {}

  const Rational& value() const { return value_; }
  Phase operator+(const Phase& o) const { return Phase(value_ + o.value_); }
  Phase scaled(const Integer& k) const { return Phase(value_ * Rational(k)); }

  bool operator==(const Phase& o) const { return value_ == o.value_; }
  bool operator<(const Phase& o) const { return value_ < o.value_; }

 private:
  Rational value_{0};
};

struct ToricHypersurface {
  ZVector chi;
  Phase phase;
  int label = 0;
};

class Layer {
 public:
  /// `span` must already be saturated and in Hermite form; `phases` gives the
  /// value of the homomorphism on each of its rows.
  Layer(ZMatrix span, std::vector<Phase> phases);

  static Layer ambient(int n);

  const ZMatrix& span() const { return span_; }
  const std::vector<Phase>& phases() const { return phases_; }
  int ambientDim() const { return static_cast<int>(span_.cols()); }
  int codim() const { return static_cast<int>(span_.rows()); }
  int dim() const { return ambientDim() - codim(); }

  /// Canonical identity, e.g. "[1,0;0,2]|0,1/2".
  const std::string& key() const { return key_; }

  /// Value of the phase homomorphism on v, or nothing if v is outside span.
  std::optional<Phase> phaseOf(const ZVector& v) const;

  /// True when `smaller` is a subset of *this.
  bool contains(const Layer& smaller) const;

  bool operator==(const Layer& o) const { return key_ == o.key_; }

 private:
  ZMatrix span_;
  std::vector<Phase> phases_;
  std::string key_;
};

/// Sorted by codimension, then key.
bool canonicalLess(const Layer& a, const Layer& b);

/// Components of {z : z^{row_i} = exp(2 pi i t_i)}. Empty when inconsistent.
std::vector<Layer> solveCharacterSystem(const ZMatrix& rows, std::span<const Phase> phases);

/// Connected components of the intersection of the selected hypersurfaces.
/// An empty subset gives the ambient torus.
std::vector<Layer> intersectHypersurfaces(std::span<const ToricHypersurface> arr,
                                          std::span<const int> subset, int ambientDim);

struct LayerPoset {
  int ambientDim = 0;
  /// byCodim[q] is the set of layers of codimension q, canonically sorted.
  std::vector<std::vector<Layer>> byCodim;
  /// All layers, codim-major, in the same order as byCodim.
  std::vector<Layer> layers;
  /// Covering relations (index of larger layer, index of smaller layer).
  std::vector<std::pair<int, int>> covers;

  int indexOf(const Layer& l) const;
  /// Full order reconstructed from the covers: i >= j as sets.
  bool above(int i, int j) const;
};

/// Built codimension by codimension: each layer is intersected with every
/// hypersurface not containing it.
LayerPoset buildLayerPoset(std::span<const ToricHypersurface> arr, int ambientDim);

/// H^p of a layer of dimension d: binom(d, p), pure of weight 2p.
WeightedDims layerCohomology(const Layer& l);

/// Hypersurfaces with a component containing the layer, in input order.
std::vector<ToricHypersurface> localSubarrangement(std::span<const ToricHypersurface> arr,
                                                   const Layer& l);

/// Throws std::invalid_argument on a zero or wrong-length character.
void validate(std::span<const ToricHypersurface> arr, int ambientDim);

}  // namespace arrform::toric
