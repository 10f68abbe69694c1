#pragma once

#include <Eigen/Core>

#include <vector>

#include "orbsurf/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<orbsurf::Rational> : GenericNumTraits<orbsurf::Rational> {
  using Real = orbsurf::Rational;
  using NonInteger = orbsurf::Rational;
  using Nested = orbsurf::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return orbsurf::Rational(0); }
  static inline Real dummy_precision() { return orbsurf::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace orbsurf {

// Dense exact types over the divisor lattice. Matrices stay small (one row
// per tracked curve class), so everything below is plain O(n^3) elimination
// with exact pivot tests.
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

bool is_symmetric(const QMatrix& a);

// u^T A v. Dimensions must agree; symmetric and bilinear when A is symmetric.
Rational eval_form(const QMatrix& a, const QVector& u, const QVector& v);

// Unique exact solution of A x = b; throws SingularMatrix when none exists.
QVector solve_linear(const QMatrix& a, const QVector& b);

// Sylvester test, exact: (-1)^k D_k > 0 for every leading principal minor
// D_k, realized as positive-pivot elimination on -A. Throws NotSymmetric.
bool is_negative_definite(const QMatrix& a);

Rational determinant(QMatrix a);

// D_1, ..., D_n for callers that want the minors themselves.
std::vector<Rational> leading_principal_minors(const QMatrix& a);

}  // namespace orbsurf
