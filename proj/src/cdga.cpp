#include "arrform/cdga.hpp"

#include "arrform/exactalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arrform {

void addScaled(Element& acc, const Element& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = acc.try_emplace(i, 0);
    it->second += c * v;
    if (it->second == 0) acc.erase(it);
  }
}

Element toElement(const QVector& v) {
  Element x;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) x.emplace(static_cast<int>(i), v(i));
  return x;
}

QVector toDense(const Element& x, int dimension) {
  QVector v = QVector::Zero(dimension);
  for (const auto& [i, c] : x) v(i) = c;
  return v;
}

int GradedAlgebra::maxDegree() const {
  int top = 0;
  for (int d : degrees_) top = std::max(top, d);
  return top;
}

std::vector<int> GradedAlgebra::basisOfDegree(int k) const {
  std::vector<int> out;
  for (int i = 0; i < dimension(); ++i)
    if (degrees_[i] == k) out.push_back(i);
  return out;
}

void GradedAlgebra::setProduct(int a, int b, Element value) {
  std::erase_if(value, [](const auto& kv) { return kv.second == 0; });
  if (value.empty())
    products_.erase({a, b});
  else
    products_[{a, b}] = std::move(value);
}

const Element& GradedAlgebra::product(int a, int b) const {
  static const Element zero;
  const auto it = products_.find({a, b});
  return it == products_.end() ? zero : it->second;
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y) addScaled(out, product(i, j), xi * yj);
  return out;
}

GradedAlgebra pointAlgebra() {
  GradedAlgebra a({0});
  a.setProduct(0, 0, {{0, Rational(1)}});
  return a;
}

GradedAlgebra tensorProduct(const GradedAlgebra& a, const GradedAlgebra& b) {
  const int nb = b.dimension();
  std::vector<int> degrees;
  for (int i = 0; i < a.dimension(); ++i)
    for (int j = 0; j < nb; ++j) degrees.push_back(a.degree(i) + b.degree(j));
  GradedAlgebra t(std::move(degrees));
  for (const auto& [ai, av] : a.products())
    for (const auto& [bi, bv] : b.products()) {
      const auto [a1, a2] = ai;
      const auto [b1, b2] = bi;
      const Rational sign = (b.degree(b1) * a.degree(a2)) % 2 ? -1 : 1;
      Element value;
      for (const auto& [x, cx] : av)
        for (const auto& [y, cy] : bv) value[x * nb + y] += sign * cx * cy;
      t.setProduct(a1 * nb + b1, a2 * nb + b2, std::move(value));
    }
  return t;
}

Cdga::Cdga(GradedAlgebra a) : algebra(std::move(a)) {
  weights.assign(algebra.dimension(), 0);
  differential = QMatrix::Zero(algebra.dimension(), algebra.dimension());
}

Element Cdga::d(const Element& x) const {
  Element out;
  for (const auto& [j, c] : x)
    for (Eigen::Index i = 0; i < differential.rows(); ++i)
      if (differential(i, j) != 0) {
        auto [it, inserted] = out.try_emplace(static_cast<int>(i), 0);
        it->second += c * differential(i, j);
        if (it->second == 0) out.erase(it);
      }
  return out;
}

namespace {

constexpr std::size_t kViolationsPerAxiom = 8;

std::string describe(const Element& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : x) {
    if (!s.empty()) s += " + ";
    s += "(" + toString(c) + ")e" + std::to_string(i);
  }
  return s;
}

class Recorder {
 public:
  explicit Recorder(AxiomReport& r) : report_(r) {}
  void add(const std::string& axiom, std::vector<int> basis, std::string detail) {
    ++report_.violationCount;
    std::size_t& n = perAxiom_[axiom];
    if (n++ < kViolationsPerAxiom) report_.violations.push_back({axiom, std::move(basis), std::move(detail)});
  }

 private:
  AxiomReport& report_;
  std::map<std::string, std::size_t> perAxiom_;
};

void checkProducts(const GradedAlgebra& a, const std::vector<int>* weights, AxiomReport& report,
                   Recorder& rec) {
  const int n = a.dimension();
  for (const auto& [ab, value] : a.products()) {
    const auto [x, y] = ab;
    for (const auto& [z, c] : value) {
      bool bad = a.degree(z) != a.degree(x) + a.degree(y);
      if (weights) bad = bad || (*weights)[z] != (*weights)[x] + (*weights)[y];
      if (bad) {
        report.grading = false;
        rec.add("grading", {x, y}, "e" + std::to_string(x) + " e" + std::to_string(y) + " has a component on e" +
                                       std::to_string(z));
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Element& xy = a.product(x, y);
      Element yx = a.product(y, x);
      if ((a.degree(x) * a.degree(y)) % 2) {
        for (auto& [k, v] : yx) v = -v;
      }
      if (xy != yx) {
        report.commutative = false;
        rec.add("graded commutativity", {x, y},
                "e" + std::to_string(x) + " e" + std::to_string(y) + " = " + describe(xy));
      }
    }
  report.checkedTriples = static_cast<long>(n) * n * n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Element& xy = a.product(x, y);
      for (int z = 0; z < n; ++z) {
        const Element& yz = a.product(y, z);
        if (xy.empty() && yz.empty()) continue;
        const Element left = a.multiply(xy, {{z, Rational(1)}});
        const Element right = a.multiply({{x, Rational(1)}}, yz);
        if (left != right) {
          report.associative = false;
          rec.add("associativity", {x, y, z}, "(xy)z = " + describe(left) + ", x(yz) = " + describe(right));
        }
      }
    }
}

std::vector<int> indicesWhere(const Cdga& c, int degree, int weight) {
  std::vector<int> out;
  for (int i = 0; i < c.dimension(); ++i)
    if (c.algebra.degree(i) == degree && c.weights[i] == weight) out.push_back(i);
  return out;
}

QMatrix columns(const QMatrix& m, const std::vector<int>& cols) {
  QMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(k) = m.col(cols[k]);
  return out;
}

QMatrix columnsOfDegree(const Cdga& c, int k) {
  return columns(c.differential, c.algebra.basisOfDegree(k));
}

/// Cocycles of degree k as columns of full-length vectors.
QMatrix cocycles(const Cdga& c, int k) {
  const auto idx = c.algebra.basisOfDegree(k);
  const auto ker = kernelBasis(columns(c.differential, idx));
  QMatrix z = QMatrix::Zero(c.dimension(), static_cast<Eigen::Index>(ker.size()));
  for (std::size_t j = 0; j < ker.size(); ++j)
    for (std::size_t t = 0; t < idx.size(); ++t) z(idx[t], j) = ker[j](t);
  return z;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

}  // namespace

AxiomReport checkAlgebraAxioms(const GradedAlgebra& a) {
  AxiomReport report;
  Recorder rec(report);
  checkProducts(a, nullptr, report, rec);
  return report;
}

AxiomReport checkCdgaAxioms(const Cdga& c) {
  AxiomReport report;
  Recorder rec(report);
  const int n = c.dimension();
  if (c.differential.rows() != n || c.differential.cols() != n || static_cast<int>(c.weights.size()) != n)
    throw std::invalid_argument("differential or weights do not match the basis");
  checkProducts(c.algebra, &c.weights, report, rec);

  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (c.differential(i, j) != 0 &&
          (c.algebra.degree(i) != c.algebra.degree(j) + 1 || c.weights[i] != c.weights[j])) {
        report.grading = false;
        rec.add("grading", {j}, "d(e" + std::to_string(j) + ") has a component on e" + std::to_string(i));
      }

  std::vector<Element> dcol(n);
  for (int j = 0; j < n; ++j) dcol[j] = c.d({{j, Rational(1)}});
  for (int j = 0; j < n; ++j) {
    const Element dd = c.d(dcol[j]);
    if (!dd.empty()) {
      report.dSquaredZero = false;
      rec.add("d o d = 0", {j}, "d(d(e" + std::to_string(j) + ")) = " + describe(dd));
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Element left = c.d(c.algebra.product(x, y));
      Element right = c.algebra.multiply(dcol[x], {{y, Rational(1)}});
      addScaled(right, c.algebra.multiply({{x, Rational(1)}}, dcol[y]),
                c.algebra.degree(x) % 2 ? Rational(-1) : Rational(1));
      if (left != right) {
        report.leibniz = false;
        rec.add("Leibniz", {x, y},
                "d(e" + std::to_string(x) + " e" + std::to_string(y) + ") = " + describe(left) +
                    ", (dx)y +- x(dy) = " + describe(right));
      }
    }
  return report;
}

BigradedDims cohomologyDims(const Cdga& c) {
  const int n = c.dimension();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (c.differential(i, j) != 0 && c.weights[i] != c.weights[j])
        throw std::invalid_argument("the differential does not preserve weights");
  std::set<std::pair<int, int>> gradings;
  for (int i = 0; i < n; ++i) gradings.insert({c.algebra.degree(i), c.weights[i]});
  BigradedDims out;
  for (const auto& [k, w] : gradings) {
    const auto here = indicesWhere(c, k, w);
    const long z = static_cast<long>(here.size()) - static_cast<long>(rank(columns(c.differential, here)));
    const auto below = indicesWhere(c, k - 1, w);
    const long b = below.empty() ? 0 : static_cast<long>(rank(columns(c.differential, below)));
    if (z - b != 0) out[{k, w}] = z - b;
  }
  return out;
}

std::vector<long> bettiNumbers(const Cdga& c) {
  std::vector<long> betti(c.algebra.maxDegree() + 1, 0);
  for (int k = 0; k <= c.algebra.maxDegree(); ++k) {
    const long z = static_cast<long>(c.algebra.basisOfDegree(k).size()) -
                   static_cast<long>(rank(columnsOfDegree(c, k)));
    const long b = k == 0 ? 0 : static_cast<long>(rank(columnsOfDegree(c, k - 1)));
    betti[k] = z - b;
  }
  return betti;
}

std::vector<std::string> morphismViolations(const Cdga& a, const Cdga& b, const QMatrix& f) {
  std::vector<std::string> out;
  if (f.rows() != b.dimension() || f.cols() != a.dimension()) {
    out.push_back("f has shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                  ", expected " + std::to_string(b.dimension()) + "x" + std::to_string(a.dimension()));
    return out;
  }
  for (int j = 0; j < a.dimension(); ++j)
    for (int i = 0; i < b.dimension(); ++i)
      if (f(i, j) != 0 && b.algebra.degree(i) != a.algebra.degree(j)) {
        out.push_back("deg f(e" + std::to_string(j) + ") != deg e" + std::to_string(j));
        break;
      }
  const QMatrix fd = f * a.differential, df = b.differential * f;
  for (int j = 0; j < a.dimension(); ++j)
    if (fd.col(j) != df.col(j)) out.push_back("f(d e" + std::to_string(j) + ") != d f(e" + std::to_string(j) + ")");
  std::vector<Element> image(a.dimension());
  for (int j = 0; j < a.dimension(); ++j) image[j] = toElement(f.col(j));
  for (int x = 0; x < a.dimension(); ++x)
    for (int y = 0; y < a.dimension(); ++y) {
      Element left;
      for (const auto& [z, cz] : a.algebra.product(x, y)) addScaled(left, image[z], cz);
      if (left != b.algebra.multiply(image[x], image[y]))
        out.push_back("f(e" + std::to_string(x) + " e" + std::to_string(y) + ") != f(e" + std::to_string(x) +
                      ") f(e" + std::to_string(y) + ")");
    }
  return out;
}

QuasiIsoVerdict checkRQuasiIso(const Cdga& a, const Cdga& b, const QMatrix& f, FormalityIndex r) {
  QuasiIsoVerdict v;
  v.r = r;
  v.violations = morphismViolations(a, b, f);
  v.isMorphism = v.violations.empty();
  if (!v.isMorphism) {
    v.reason = "not a cdga morphism: " + v.violations.front();
    return v;
  }
  int top = std::max(a.algebra.maxDegree(), b.algebra.maxDegree()) + 1;
  if (!r.isInfinite()) top = std::min(top, r.value() + 1);
  v.passed = true;
  for (int k = 0; k <= top; ++k) {
    DegreeComparison cmp;
    cmp.degree = k;
    const QMatrix za = cocycles(a, k), zb = cocycles(b, k);
    const QMatrix ba = columnsOfDegree(a, k - 1);
    const QMatrix bb = columnsOfDegree(b, k - 1);
    const long rankBa = static_cast<long>(rank(ba)), rankBb = static_cast<long>(rank(bb));
    cmp.sourceDim = static_cast<long>(za.cols()) - rankBa;
    cmp.targetDim = static_cast<long>(zb.cols()) - rankBb;
    cmp.rank = static_cast<long>(rank(hstack(f * za, bb))) - rankBb;
    const bool ok = r.covers(k) ? cmp.injective() && cmp.surjective() : cmp.injective();
    if (!ok && v.passed) {
      v.passed = false;
      v.reason = "H^" + std::to_string(k) + "(f) is not " +
                 (r.covers(k) ? std::string("an isomorphism") : std::string("injective"));
    }
    v.degrees.push_back(cmp);
  }
  if (v.passed) v.reason = "H^i(f) is an isomorphism for i <= " + r.str() +
                           (r.isInfinite() ? std::string() : " and injective for i = " + std::to_string(r.value() + 1));
  return v;
}

}  // namespace arrform
