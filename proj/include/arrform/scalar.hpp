#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <vector>

namespace arrform {

// Expression templates are disabled so the scalars compose cleanly with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using ZMatrix = Matrix<Integer>;
using ZVector = Vector<Integer>;

inline bool isZero(const Rational& x) { return x == 0; }
inline bool isZero(const Integer& x) { return x == 0; }

template <typename Derived>
bool isZero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

/// Fractional part in [0, 1).
inline Rational modOne(const Rational& x) {
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  Integer r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

inline Rational toRational(const Integer& x) { return Rational(x); }

inline bool isIntegral(const Rational& x) { return denominator(x) == 1; }

template <typename Derived>
QMatrix toRational(const Eigen::MatrixBase<Derived>& m) {
  QMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Throws std::invalid_argument when an entry has a nontrivial denominator.
ZMatrix toInteger(const QMatrix& m);

inline std::string toString(const Rational& x) { return x.str(); }
inline std::string toString(const Integer& x) { return x.str(); }

/// Compact row-major rendering "[a,b;c,d]"; used for canonical keys.
template <typename Derived>
std::string toString(const Eigen::MatrixBase<Derived>& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m(i, j).str();
    }
  }
  return s + "]";
}

}  // namespace arrform
