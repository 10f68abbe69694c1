#include "orbsurf/lattice.hpp"

#include <string>

#include "orbsurf/errors.hpp"

namespace orbsurf {

bool is_symmetric(const QMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  return true;
}

Rational eval_form(const QMatrix& a, const QVector& u, const QVector& v) {
  if (a.rows() != u.size() || a.cols() != v.size()) {
    throw DimensionMismatch("eval_form: form is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", vectors are " +
                            std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  Rational acc;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (u(i).is_zero()) continue;
    Rational row;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!v(j).is_zero()) row += a(i, j) * v(j);
    }
    acc += u(i) * row;
  }
  return acc;
}

QVector solve_linear(const QMatrix& a, const QVector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("solve_linear: matrix is not square");
  if (b.size() != n) throw DimensionMismatch("solve_linear: right-hand side has wrong length");

  QMatrix m = a;
  QVector rhs = b;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix("solve_linear: singular matrix");
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      std::swap(rhs(pivot), rhs(k));
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) / m(k, k);
      for (Eigen::Index c = k; c < n; ++c) m(r, c) -= f * m(k, c);
      rhs(r) -= f * rhs(k);
    }
  }
  QVector x(n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    Rational acc = rhs(k);
    for (Eigen::Index c = k + 1; c < n; ++c) acc -= m(k, c) * x(c);
    x(k) = acc / m(k, k);
  }
  return x;
}

bool is_negative_definite(const QMatrix& a) {
  if (a.rows() != a.cols()) throw NotSymmetric("is_negative_definite: matrix is not square");
  if (!is_symmetric(a)) throw NotSymmetric("is_negative_definite: matrix is not symmetric");
  const Eigen::Index n = a.rows();
  QMatrix m = -a;
  // -A positive definite iff elimination without row swaps meets only
  // positive pivots; any nonpositive pivot corresponds to a failing minor.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k).sign() <= 0) return false;
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) / m(k, k);
      for (Eigen::Index c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return true;
}

Rational determinant(QMatrix a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("determinant: matrix is not square");
  Rational det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (!a(r, k).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Rational f = a(r, k) / a(k, k);
      for (Eigen::Index c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const QMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("leading_principal_minors: matrix is not square");
  std::vector<Rational> minors;
  minors.reserve(static_cast<size_t>(a.rows()));
  for (Eigen::Index k = 1; k <= a.rows(); ++k) {
    minors.push_back(determinant(a.topLeftCorner(k, k)));
  }
  return minors;
}

}  // namespace orbsurf
