#pragma once

// Independent feasibility oracle: fraction-free Gaussian substitution for
// equalities, then Fourier-Motzkin elimination for inequalities, all in
// checked int64 arithmetic. Shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Row = std::vector<std::int64_t>;  // coefficients a_0..a_{n-1}, then right-hand side

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("oracle overflow");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("oracle overflow");
  return r;
}

inline void normalise(Row& r) {
  std::int64_t g = 0;
  for (auto v : r) g = std::gcd(g, v);
  if (g > 1)
    for (auto& v : r) v /= g;
}

// a * x + b * y
inline Row combine(std::int64_t a, const Row& x, std::int64_t b, const Row& y) {
  Row r(x.size());
  for (size_t c = 0; c < x.size(); ++c) r[c] = checked_add(checked_mul(a, x[c]), checked_mul(b, y[c]));
  normalise(r);
  return r;
}

// Feasibility over the rationals of { x : E x = e, G x >= g }.
inline bool fm_feasible(std::vector<Row> eqs, std::vector<Row> ineqs, size_t n) {
  for (size_t e = 0; e < eqs.size(); ++e) {
    Row row = eqs[e];
    size_t j = 0;
    while (j < n && row[j] == 0) ++j;
    if (j == n) {
      if (row[n] != 0) return false;
      continue;
    }
    if (row[j] < 0)
      for (auto& v : row) v = -v;
    auto substitute = [&](Row& other) {
      if (other[j] != 0) other = combine(row[j], other, -other[j], row);
    };
    for (size_t o = e + 1; o < eqs.size(); ++o) substitute(eqs[o]);
    for (auto& g : ineqs) substitute(g);
  }
  for (size_t j = 0; j < n; ++j) {
    std::vector<Row> pos, neg, keep;
    for (auto& g : ineqs) {
      if (g[j] > 0) {
        pos.push_back(g);
      } else if (g[j] < 0) {
        neg.push_back(g);
      } else {
        keep.push_back(g);
      }
    }
    for (const auto& p : pos)
      for (const auto& q : neg) keep.push_back(combine(-q[j], p, p[j], q));
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    ineqs = std::move(keep);
  }
  for (const auto& g : ineqs)
    if (g[n] > 0) return false;  // needs 0 >= g[n]
  return true;
}

inline size_t rank_of(std::vector<Row> m) {
  size_t rank = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (size_t i = 0; i < rows; ++i)
      if (i != rank && m[i][c] != 0) m[i] = combine(m[rank][c], m[i], -m[i][c], m[rank]);
    ++rank;
  }
  return rank;
}

enum class Origin { Outside, Boundary, Interior };

// points: integer vectors of common length r.
inline Origin classify_origin(const std::vector<std::vector<long>>& points) {
  const size_t k = points.size(), r = points[0].size();
  std::vector<Row> eqs, ineqs;
  for (size_t i = 0; i < r; ++i) {
    Row row(k + 1, 0);
    for (size_t j = 0; j < k; ++j) row[j] = points[j][i];
    eqs.push_back(row);
  }
  eqs.push_back(Row(k + 1, 1));  // sum c = 1
  for (size_t j = 0; j < k; ++j) {
    Row g(k + 1, 0);
    g[j] = 1;
    ineqs.push_back(g);
  }
  if (!fm_feasible(eqs, ineqs, k)) return Origin::Outside;
  std::vector<Row> P(r, Row(k));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < k; ++j) P[i][j] = points[j][i];
  if (rank_of(P) < r) return Origin::Boundary;
  // Strictly positive dependency; homogeneous, so c >= 1 suffices.
  eqs.pop_back();
  for (auto& g : ineqs) g[k] = 1;
  return fm_feasible(eqs, ineqs, k) ? Origin::Interior : Origin::Boundary;
}

}  // namespace oracle
