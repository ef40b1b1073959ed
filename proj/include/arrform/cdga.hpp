#pragma once

// Finite-dimensional graded algebras and commutative differential graded
// algebras over Q, given by a homogeneous basis, sparse structure constants
// and a dense differential matrix. Axiom checks are exact and exhaustive over
// basis pairs and triples.

#include "arrform/formality_index.hpp"
#include "arrform/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arrform {

/// Sparse vector: basis index -> nonzero coefficient.
using Element = std::map<int, Rational>;

void addScaled(Element& acc, const Element& x, const Rational& c);
Element toElement(const QVector& v);
QVector toDense(const Element& x, int dimension);

class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  explicit GradedAlgebra(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

  int dimension() const { return static_cast<int>(degrees_.size()); }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int maxDegree() const;
  std::vector<int> basisOfDegree(int k) const;

  /// e_a * e_b. Zero coefficients are dropped; an empty value erases.
  void setProduct(int a, int b, Element value);
  const Element& product(int a, int b) const;
  const std::map<std::pair<int, int>, Element>& products() const { return products_; }
  Element multiply(const Element& x, const Element& y) const;

 private:
  std::vector<int> degrees_;
  std::map<std::pair<int, int>, Element> products_;
};

/// Q in degree 0.
GradedAlgebra pointAlgebra();

/// Graded tensor product, basis a (x) b at index a * dim(B) + b, with
/// (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'.
GradedAlgebra tensorProduct(const GradedAlgebra& a, const GradedAlgebra& b);

struct Cdga {
  GradedAlgebra algebra;
  std::vector<int> weights;  // per basis element; all zero when ungraded
  QMatrix differential;      // column j holds d(e_j)

  Cdga() = default;
  explicit Cdga(GradedAlgebra a);

  int dimension() const { return algebra.dimension(); }
  Element d(const Element& x) const;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> basis;  // the offending basis pair or triple
  std::string detail;
};

struct AxiomReport {
  bool grading = true;       // d has degree +1, products add degrees (and weights)
  bool dSquaredZero = true;
  bool leibniz = true;
  bool associative = true;
  bool commutative = true;
  long checkedTriples = 0;
  std::vector<AxiomViolation> violations;  // first few of each kind
  long violationCount = 0;

  bool ok() const { return grading && dSquaredZero && leibniz && associative && commutative; }
};

/// Associativity, graded commutativity and additivity of degrees.
AxiomReport checkAlgebraAxioms(const GradedAlgebra& a);
/// The algebra axioms plus d o d = 0, Leibniz d(xy) = (dx)y + (-1)^|x| x(dy),
/// and preservation of weights.
AxiomReport checkCdgaAxioms(const Cdga& c);

/// (degree, weight) -> dim H, nonzero entries only.
using BigradedDims = std::map<std::pair<int, int>, long>;

BigradedDims cohomologyDims(const Cdga& c);
/// Total dimension of H^k for k = 0 .. max degree.
std::vector<long> bettiNumbers(const Cdga& c);

struct DegreeComparison {
  int degree = 0;
  long sourceDim = 0;
  long targetDim = 0;
  long rank = 0;  // rank of the induced map H^k(A) -> H^k(B)

  bool injective() const { return rank == sourceDim; }
  bool surjective() const { return rank == targetDim; }
};

struct QuasiIsoVerdict {
  FormalityIndex r = FormalityIndex::infinite();
  bool isMorphism = false;
  std::vector<std::string> violations;  // violated morphism identities
  std::vector<DegreeComparison> degrees;
  bool passed = false;
  std::string reason;
};

/// The morphism identities for f : A -> B, given as a dim(B) x dim(A)
/// matrix: f preserves degrees, f d = d f, f(xy) = f(x) f(y). Returns the
/// violated identities.
std::vector<std::string> morphismViolations(const Cdga& a, const Cdga& b, const QMatrix& f);

/// f is an r-quasi-isomorphism when H^i(f) is an isomorphism for i <= r and
/// an injection for i = r + 1. Non-morphisms are rejected before any
/// cohomology is compared.
QuasiIsoVerdict checkRQuasiIso(const Cdga& a, const Cdga& b, const QMatrix& f, FormalityIndex r);

}  // namespace arrform
