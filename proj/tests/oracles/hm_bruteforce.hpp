#pragma once

// Brute-force Hilbert-Mumford sign check over all primitive 1-PS in a box,
// in plain int64 arithmetic.

#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

using IVec = std::vector<long>;

inline std::vector<IVec> primitive_box(size_t rank, long radius) {
  std::vector<IVec> out;
  IVec v(rank, -radius);
  for (;;) {
    long g = 0;
    for (long c : v) g = std::gcd(g, std::labs(c));
    if (g == 1) out.push_back(v);
    size_t i = 0;
    while (i < rank && v[i] == radius) v[i++] = -radius;
    if (i == rank) break;
    ++v[i];
  }
  return out;
}

// mu(x, lambda) = -min <w, lambda> over the weight set.
inline long hm_weight(const std::vector<IVec>& weights, const IVec& lambda) {
  long lo = 0;
  bool first = true;
  for (const auto& w : weights) {
    long p = 0;
    for (size_t i = 0; i < w.size(); ++i) p += w[i] * lambda[i];
    if (first || p < lo) lo = p;
    first = false;
  }
  return -lo;
}

struct HmSigns {
  bool all_nonnegative = true;
  bool all_positive = true;
};

inline HmSigns hm_signs(const std::vector<IVec>& weights, const std::vector<IVec>& box) {
  HmSigns s;
  for (const auto& l : box) {
    long mu = hm_weight(weights, l);
    if (mu < 0) s.all_nonnegative = false;
    if (mu <= 0) s.all_positive = false;
    if (!s.all_nonnegative) break;
  }
  return s;
}

}  // namespace oracle
