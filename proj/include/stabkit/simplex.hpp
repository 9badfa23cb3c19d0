#pragma once

// Exact Phase-I simplex for {x >= 0 : A x = b} on a dense tableau with
// Bland's rule, returning either a feasible point or a Farkas certificate.

#include <vector>

#include "stabkit/dense.hpp"

namespace stabkit {

template <class Scalar>
struct FeasibilityResult {
  bool feasible = false;
  Vec<Scalar> x;       // A x = b, x >= 0 (when feasible)
  Vec<Scalar> farkas;  // A^T y >= 0 and b^T y < 0 (when infeasible)
};

template <class Scalar>
FeasibilityResult<Scalar> nonnegative_feasibility(const Mat<Scalar>& A, const Vec<Scalar>& b) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m) throw Error(ErrorCode::BadShape, "right-hand side length differs from row count");
  const Eigen::Index cols = n + m;  // structural then artificial columns
  Mat<Scalar> T(m, cols + 1);
  std::vector<int> flip(static_cast<size_t>(m), 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    bool neg = b(i) < Scalar(0);
    flip[static_cast<size_t>(i)] = neg ? -1 : 1;
    for (Eigen::Index j = 0; j < n; ++j) T(i, j) = neg ? Scalar(-A(i, j)) : A(i, j);
    for (Eigen::Index j = 0; j < m; ++j) T(i, n + j) = Scalar(i == j ? 1 : 0);
    T(i, cols) = neg ? Scalar(-b(i)) : b(i);
  }
  // Reduced costs of the Phase-I objective (sum of artificials).
  Vec<Scalar> cost(cols + 1);
  for (Eigen::Index j = 0; j <= cols; ++j) {
    Scalar s(0);
    if (j < n || j == cols)
      for (Eigen::Index i = 0; i < m; ++i)
        if (!is_zero(T(i, j))) s -= T(i, j);
    cost(j) = s;
  }
  std::vector<Eigen::Index> basis(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;

  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j)
      if (cost(j) < Scalar(0)) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Scalar best_ratio(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!(T(i, enter) > Scalar(0))) continue;
      Scalar ratio = T(i, cols) / T(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase I is bounded below by zero, so a leaving row always exists.
    Scalar inv = Scalar(1) / T(leave, enter);
    for (Eigen::Index j = 0; j <= cols; ++j)
      if (!is_zero(T(leave, j))) T(leave, j) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave || is_zero(T(i, enter))) continue;
      Scalar f = T(i, enter);
      for (Eigen::Index j = 0; j <= cols; ++j)
        if (!is_zero(T(leave, j))) T(i, j) -= f * T(leave, j);
    }
    if (!is_zero(cost(enter))) {
      Scalar f = cost(enter);
      for (Eigen::Index j = 0; j <= cols; ++j)
        if (!is_zero(T(leave, j))) cost(j) -= f * T(leave, j);
    }
    basis[static_cast<size_t>(leave)] = enter;
  }

  FeasibilityResult<Scalar> out;
  out.feasible = is_zero(cost(cols));
  if (out.feasible) {
    out.x = Vec<Scalar>::Constant(n, Scalar(0));
    for (Eigen::Index i = 0; i < m; ++i)
      if (basis[static_cast<size_t>(i)] < n) out.x(basis[static_cast<size_t>(i)]) = T(i, cols);
  } else {
    // Simplex multipliers pi_i = 1 - reduced cost of artificial i; y = -S pi.
    out.farkas.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Scalar pi = Scalar(1) - cost(n + i);
      out.farkas(i) = flip[static_cast<size_t>(i)] > 0 ? Scalar(-pi) : pi;
    }
  }
  return out;
}

}  // namespace stabkit
