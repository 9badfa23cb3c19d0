#include "stabkit/torus.hpp"

#include <algorithm>
#include <functional>

#include "stabkit/simplex.hpp"

namespace stabkit {

TorusAction TorusAction::projective(std::vector<LatticeVector> weights, Integer scale) {
  TorusAction a;
  a.rank = weights.empty() ? 0 : weights[0].size();
  a.weights = std::move(weights);
  a.ambient = Ambient::Projective;
  a.scale = std::move(scale);
  a.validate();
  return a;
}

TorusAction TorusAction::affine(std::vector<LatticeVector> weights, LatticeVector rho) {
  TorusAction a;
  a.rank = rho.size();
  a.weights = std::move(weights);
  a.ambient = Ambient::AffineWithCharacter;
  a.rho = std::move(rho);
  a.validate();
  return a;
}

void TorusAction::validate() const {
  if (weights.empty()) throw Error(ErrorCode::BadShape, "torus action needs at least one coordinate");
  if (rank <= 0) throw Error(ErrorCode::BadShape, "torus rank must be positive");
  for (const auto& w : weights)
    if (w.size() != rank) throw Error(ErrorCode::ArityMismatch, "weight length differs from torus rank");
  if (ambient == Ambient::AffineWithCharacter && rho.size() != rank)
    throw Error(ErrorCode::ArityMismatch, "character length differs from torus rank");
  if (scale.sign() <= 0) throw Error(ErrorCode::BadShape, "linearisation scale must be positive");
}

IntMatrix TorusAction::weight_matrix() const {
  IntMatrix W(rank, static_cast<Eigen::Index>(weights.size()));
  for (size_t j = 0; j < weights.size(); ++j) W.col(static_cast<Eigen::Index>(j)) = weights[j];
  return W;
}

PointSupport PointSupport::of(std::vector<std::size_t> support) {
  PointSupport p;
  p.support = std::move(support);
  return p;
}

PointSupport PointSupport::from_coordinates(const std::vector<Rational>& values) {
  PointSupport p;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) continue;
    p.support.push_back(i);
    p.coords.push_back(values[i]);
  }
  return p;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Unstable: return "Unstable";
    case StabilityClass::StrictlySemistable: return "StrictlySemistable";
    case StabilityClass::Stable: return "Stable";
  }
  return "?";
}

namespace {

void check_support(const TorusAction& action, const PointSupport& x) {
  for (size_t i : x.support)
    if (i >= action.size()) throw Error(ErrorCode::BadIndex, "support index out of range");
  if (!x.coords.empty()) {
    if (x.coords.size() != x.support.size())
      throw Error(ErrorCode::ArityMismatch, "coordinate values must match the support");
    for (const auto& c : x.coords)
      if (c.is_zero()) throw Error(ErrorCode::BadShape, "coordinate on the support must be nonzero");
  }
}

void check_lambda(const TorusAction& action, const LatticeVector& lambda) {
  if (lambda.size() != action.rank) throw Error(ErrorCode::ArityMismatch, "1-PS length differs from torus rank");
  if (lambda.isZero()) throw Error(ErrorCode::ZeroOneParamSubgroup, "trivial one-parameter subgroup");
}

}  // namespace

std::vector<LatticeVector> weight_set(const TorusAction& action, const PointSupport& x) {
  check_support(action, x);
  if (x.support.empty() && action.ambient == Ambient::Projective)
    throw Error(ErrorCode::EmptySet, "a projective point needs nonempty support");
  std::vector<LatticeVector> out;
  for (size_t i : x.support) {
    const auto& w = action.weights[i];
    bool seen = false;
    for (const auto& e : out) seen = seen || equal(e, w);
    if (!seen) out.push_back(w);
  }
  return out;
}

Rational hm_weight(const TorusAction& action, const PointSupport& x, const LatticeVector& lambda) {
  check_lambda(action, lambda);
  auto ws = weight_set(action, x);
  if (ws.empty()) throw Error(ErrorCode::EmptySet, "HM weight of the origin is undefined");
  Integer lo = pairing(ws[0], lambda);
  for (const auto& w : ws) lo = std::min(lo, pairing(w, lambda));
  return Rational(-lo, action.scale);
}

ProjectiveClassification classify_projective_certified(const TorusAction& action, const PointSupport& x) {
  if (action.ambient != Ambient::Projective) throw Error(ErrorCode::WrongAmbient, "action is not projective");
  auto cert = classify_origin_certified(weight_set(action, x));
  ProjectiveClassification out;
  switch (cert.cls) {
    case OriginClass::Outside:
      out.cls = StabilityClass::Unstable;
      out.destabilizer = cert.separating;  // every pairing positive, so mu < 0
      break;
    case OriginClass::Boundary: out.cls = StabilityClass::StrictlySemistable; break;
    case OriginClass::Interior: out.cls = StabilityClass::Stable; break;
  }
  return out;
}

StabilityClass classify_projective(const TorusAction& action, const PointSupport& x) {
  return classify_projective_certified(action, x).cls;
}

TorusAction twist_by_character(const TorusAction& action, const RatVector& chi) {
  if (chi.size() != action.rank) throw Error(ErrorCode::ArityMismatch, "character length differs from torus rank");
  Integer L(1);
  for (Eigen::Index i = 0; i < chi.size(); ++i) L = lcm(L, chi(i).denominator());
  TorusAction out = action;
  out.scale = action.scale * L;
  // New integer weights w' with w'/N' = w/N - chi: w' = L w - N' chi.
  for (auto& w : out.weights) {
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      Rational shifted = Rational(w(i) * L) - Rational(out.scale) * chi(i);
      w(i) = shifted.numerator();
    }
  }
  if (out.ambient == Ambient::AffineWithCharacter)
    for (Eigen::Index i = 0; i < out.rho.size(); ++i) out.rho(i) *= L;
  return out;
}

AffineCharResult affine_char_test(const TorusAction& action, const PointSupport& x, const LatticeVector& lambda) {
  if (action.ambient != Ambient::AffineWithCharacter)
    throw Error(ErrorCode::WrongAmbient, "action has no affine character");
  check_lambda(action, lambda);
  check_support(action, x);
  AffineCharResult out;
  for (size_t i : x.support)
    if (pairing(action.weights[i], lambda).sign() < 0) return out;
  out.limit_exists = true;
  out.pairing = pairing(action.rho, lambda);
  return out;
}

AffineClassification classify_affine_char(const TorusAction& action, const PointSupport& x) {
  if (action.ambient != Ambient::AffineWithCharacter)
    throw Error(ErrorCode::WrongAmbient, "action has no affine character");
  auto ws = weight_set(action, x);
  const Eigen::Index r = action.rank, k = static_cast<Eigen::Index>(ws.size());
  RatMatrix W(r, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < r; ++i) W(i, j) = Rational(ws[static_cast<size_t>(j)](i));
  RatVector rho = to_rational_vector(action.rho);

  AffineClassification out;
  auto cone = nonnegative_feasibility(W, rho);
  if (!cone.feasible) {
    out.cls = StabilityClass::Unstable;
    out.destabilizer = clear_denominators(cone.farkas);
    return out;
  }
  out.cls = StabilityClass::StrictlySemistable;
  if (rank(W) < r) return out;
  // rho = sum c_i w_i with all c_i > 0: W d - e rho = rho - sum w_i, d, e >= 0.
  RatMatrix A(r, k + 1);
  A.leftCols(k) = W;
  A.col(k) = -rho;
  RatVector b = rho;
  for (Eigen::Index j = 0; j < k; ++j) b -= W.col(j);
  if (nonnegative_feasibility(A, b).feasible) out.cls = StabilityClass::Stable;
  return out;
}

void sort_exponents(std::vector<Exponent>& v) {
  std::sort(v.begin(), v.end(), [](const Exponent& a, const Exponent& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
}

namespace {

// Calls f(m) for every m in N^n with |m| = degree and W m = target.
void for_each_exponent(const IntMatrix& W, const LatticeVector& target, unsigned degree,
                       const std::function<void(const Exponent&)>& f) {
  const size_t n = static_cast<size_t>(W.cols());
  Exponent m(n, 0);
  LatticeVector acc = LatticeVector::Constant(W.rows(), Integer(0));
  std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned left) {
    if (i + 1 == n) {
      m[i] = left;
      LatticeVector total = acc + W.col(static_cast<Eigen::Index>(i)) * Integer(static_cast<long>(left));
      if (equal(total, target)) f(m);
      m[i] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = e;
      LatticeVector step = W.col(static_cast<Eigen::Index>(i)) * Integer(static_cast<long>(e));
      acc += step;
      rec(i + 1, left - e);
      acc -= step;
    }
    m[i] = 0;
  };
  if (n == 0) return;
  rec(0, degree);
}

}  // namespace

HilbertBasis hilbert_basis_kernel(const TorusAction& action, unsigned bound) {
  action.validate();
  const IntMatrix W = action.weight_matrix();
  const size_t n = action.size();
  const LatticeVector zero = LatticeVector::Constant(action.rank, Integer(0));

  HilbertBasis hb;
  hb.bound = bound;
  for (unsigned d = 1; d <= bound; ++d) {
    std::vector<Exponent> found;
    for_each_exponent(W, zero, d, [&](const Exponent& m) {
      for (const auto& b : hb.elements) {
        bool dominated = true;
        for (size_t i = 0; i < n && dominated; ++i) dominated = b[i] <= m[i];
        if (dominated) return;
      }
      found.push_back(m);
    });
    hb.elements.insert(hb.elements.end(), found.begin(), found.end());
  }
  sort_exponents(hb.elements);

  // Extreme rays of the cone {m >= 0 : W m = 0} are its minimal-support
  // elements; every Hilbert basis element is either a ray or a combination of
  // at most dim(ker W) rays with coefficients in [0, 1).
  const Eigen::Index kernel_dim = static_cast<Eigen::Index>(n) - stabkit::rank(W);
  const size_t max_support = std::min(n, static_cast<size_t>(stabkit::rank(W)) + 1);
  std::vector<unsigned> ray_degrees;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if (static_cast<size_t>(__builtin_popcountl(mask)) > max_support) continue;
    std::vector<Eigen::Index> cols;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) cols.push_back(static_cast<Eigen::Index>(i));
    IntMatrix sub(W.rows(), static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) sub.col(static_cast<Eigen::Index>(j)) = W.col(cols[j]);
    RatMatrix ker = nullspace(sub);
    if (ker.cols() != 1) continue;
    int sign = 0;
    bool ok = true;
    for (Eigen::Index i = 0; i < ker.rows() && ok; ++i) {
      int s = ker(i, 0).sign();
      if (s == 0 || (sign != 0 && s != sign)) ok = false;
      sign = s;
    }
    if (!ok) continue;
    LatticeVector ray = clear_denominators(sign > 0 ? RatVector(ker.col(0)) : RatVector(-ker.col(0)));
    Integer deg(0);
    for (Eigen::Index i = 0; i < ray.size(); ++i) deg += ray(i);
    ray_degrees.push_back(static_cast<unsigned>(deg.to_int64()));
  }
  std::sort(ray_degrees.rbegin(), ray_degrees.rend());
  unsigned cert = ray_degrees.empty() ? 0 : ray_degrees.front();
  unsigned sum = 0;
  for (size_t i = 0; i < ray_degrees.size() && static_cast<Eigen::Index>(i) < kernel_dim; ++i) sum += ray_degrees[i];
  if (sum > 0) cert = std::max(cert, sum - 1);
  hb.certifying_bound = cert;
  hb.complete = bound >= cert;
  return hb;
}

std::vector<Exponent> semi_invariant_monomials(const TorusAction& action, unsigned weight_multiple, unsigned bound) {
  if (action.ambient != Ambient::AffineWithCharacter)
    throw Error(ErrorCode::WrongAmbient, "semi-invariants need an affine character");
  const IntMatrix W = action.weight_matrix();
  LatticeVector target = action.rho * Integer(static_cast<long>(weight_multiple));
  std::vector<Exponent> out;
  for (unsigned d = 0; d <= bound; ++d) for_each_exponent(W, target, d, [&](const Exponent& m) { out.push_back(m); });
  sort_exponents(out);
  return out;
}

}  // namespace stabkit
