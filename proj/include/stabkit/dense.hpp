#pragma once

// Eigen dense containers over the exact scalars, plus exact elimination
// templates. Eigen's floating-point decompositions are never used on these
// types; all algorithms below pivot on exact nonzeros.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "stabkit/error.hpp"
#include "stabkit/integer.hpp"
#include "stabkit/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<stabkit::Rational> : GenericNumTraits<stabkit::Rational> {
  using Real = stabkit::Rational;
  using NonInteger = stabkit::Rational;
  using Literal = stabkit::Rational;
  using Nested = stabkit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<stabkit::Integer> : GenericNumTraits<stabkit::Integer> {
  using Real = stabkit::Integer;
  using NonInteger = stabkit::Rational;
  using Literal = stabkit::Integer;
  using Nested = stabkit::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace stabkit {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }

template <class Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class Scalar>
Scalar dot(const Vec<Scalar>& a, const Vec<Scalar>& b) {
  Scalar s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!is_zero(a(i)) && !is_zero(b(i))) s += a(i) * b(i);
  return s;
}

// In-place reduced row echelon form over a field. Returns pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(Mat<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    if (!(m(row, col) == Scalar(1))) {
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(row, j) *= inv;
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Scalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix work = to_rational(m);
  return static_cast<Eigen::Index>(rref_in_place(work).size());
}

// Basis of {x : m x = 0}, one column per free variable (free variable set to 1).
template <class Derived>
RatMatrix nullspace(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix work = to_rational(m);
  auto pivots = rref_in_place(work);
  const Eigen::Index n = work.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  RatMatrix basis(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    for (Eigen::Index i = 0; i < n; ++i) basis(i, k) = Rational(0);
    basis(f, k) = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -work(static_cast<Eigen::Index>(r), f);
    ++k;
  }
  return basis;
}

// Particular solution of m x = b with free variables set to zero, if consistent.
template <class DerivedA, class DerivedB>
std::optional<RatVector> solve_particular(const Eigen::MatrixBase<DerivedA>& m,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RatMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = to_rational(m);
  aug.col(cols) = to_rational(b);
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x = RatVector::Constant(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), cols);
  return x;
}

// Determinant by Gaussian elimination over Q.
template <class Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::BadShape, "determinant of non-square matrix");
  RatMatrix a = to_rational(m);
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = inverse(a(c, c));
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Rational f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j)
        if (!is_zero(a(c, j))) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// Bareiss fraction-free determinant of a square integer matrix; destroys m.
template <class Scalar>
Scalar bareiss_determinant_in_place(Mat<Scalar>& m) {
  const Eigen::Index n = m.rows();
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return Scalar(0);
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar v = m(k, k) * m(i, j);
        if (!is_zero(m(i, k)) && !is_zero(m(k, j))) v -= m(i, k) * m(k, j);
        m(i, j) = divexact(v, prev);
      }
    }
    prev = m(k, k);
  }
  if (n == 0) return Scalar(1);
  return sign > 0 ? m(n - 1, n - 1) : Scalar(-m(n - 1, n - 1));
}

// Exact inverse; nullopt if singular.
template <class Derived>
std::optional<RatMatrix> inverse_matrix(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::BadShape, "inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = to_rational(m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) aug(i, n + j) = Rational(i == j ? 1 : 0);
  auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<size_t>(n - 1)] != n - 1))
    return std::nullopt;
  return RatMatrix(aug.rightCols(n));
}

}  // namespace stabkit
