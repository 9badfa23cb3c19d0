#include "stabkit/convex.hpp"

#include <algorithm>

#include "stabkit/simplex.hpp"

namespace stabkit {

NormForm::NormForm(IntMatrix Q) : Q_(std::move(Q)) {
  if (Q_.rows() != Q_.cols() || Q_.rows() == 0) throw Error(ErrorCode::BadShape, "norm form must be square and nonempty");
  for (Eigen::Index i = 0; i < Q_.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (!(Q_(i, j) == Q_(j, i))) throw Error(ErrorCode::NotPositiveDefinite, "norm form is not symmetric");
  for (Eigen::Index k = 1; k <= Q_.rows(); ++k)
    if (stabkit::determinant(Q_.topLeftCorner(k, k)).sign() <= 0)
      throw Error(ErrorCode::NotPositiveDefinite, "norm form has a non-positive leading principal minor");
  det_ = stabkit::determinant(Q_).numerator();
}

NormForm NormForm::identity(Eigen::Index rank) {
  IntMatrix I(rank, rank);
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) I(i, j) = Integer(i == j ? 1 : 0);
  return NormForm(I);
}

Rational NormForm::inner(const RatVector& a, const RatVector& b) const {
  Rational s(0);
  for (Eigen::Index i = 0; i < Q_.rows(); ++i) {
    if (a(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < Q_.cols(); ++j)
      if (!Q_(i, j).is_zero() && !b(j).is_zero()) s += a(i) * Rational(Q_(i, j)) * b(j);
  }
  return s;
}

Rational NormForm::norm2(const RatVector& v) const { return inner(v, v); }

Integer NormForm::norm2(const LatticeVector& v) const {
  Integer s(0);
  for (Eigen::Index i = 0; i < Q_.rows(); ++i)
    for (Eigen::Index j = 0; j < Q_.cols(); ++j) s += v(i) * Q_(i, j) * v(j);
  return s;
}

RatVector NormForm::solve(const RatVector& v) const {
  auto x = solve_particular(Q_, v);
  return *x;  // Q is nonsingular
}

NormForm NormForm::adjugate() const {
  RatMatrix inv = *inverse_matrix(Q_);
  IntMatrix adj(Q_.rows(), Q_.cols());
  for (Eigen::Index i = 0; i < Q_.rows(); ++i)
    for (Eigen::Index j = 0; j < Q_.cols(); ++j) adj(i, j) = (inv(i, j) * Rational(det_)).numerator();
  return NormForm(adj);
}

const char* to_string(OriginClass c) {
  switch (c) {
    case OriginClass::Outside: return "Outside";
    case OriginClass::Boundary: return "Boundary";
    case OriginClass::Interior: return "Interior";
  }
  return "?";
}

RatVector to_rational_vector(const LatticeVector& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

namespace {

Eigen::Index check_points(const std::vector<LatticeVector>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptySet, "empty point set");
  Eigen::Index r = points[0].size();
  for (const auto& p : points)
    if (p.size() != r) throw Error(ErrorCode::ArityMismatch, "points of different lengths");
  return r;
}

}  // namespace

OriginCertificate classify_origin_certified(const std::vector<LatticeVector>& points) {
  const Eigen::Index r = check_points(points);
  const Eigen::Index k = static_cast<Eigen::Index>(points.size());
  OriginCertificate cert;

  // 0 in conv(P): x >= 0, P x = 0, 1^T x = 1.
  RatMatrix A(r + 1, k);
  RatVector b = RatVector::Constant(r + 1, Rational(0));
  b(r) = Rational(1);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) A(i, j) = Rational(points[static_cast<size_t>(j)](i));
    A(r, j) = Rational(1);
  }
  auto hull = nonnegative_feasibility(A, b);
  if (!hull.feasible) {
    cert.cls = OriginClass::Outside;
    cert.separating = clear_denominators(RatVector(hull.farkas.head(r)));
    return cert;
  }
  cert.convex_weights = hull.x;
  cert.cls = OriginClass::Boundary;
  if (rank(A.topRows(r)) < r) return cert;

  // Strictly positive combination: sum d_i p_i = -sum p_i with d >= 0.
  RatMatrix P = A.topRows(r);
  RatVector rhs(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    Rational s(0);
    for (Eigen::Index j = 0; j < k; ++j) s -= P(i, j);
    rhs(i) = s;
  }
  auto strict = nonnegative_feasibility(P, rhs);
  if (strict.feasible) {
    cert.cls = OriginClass::Interior;
    RatVector c(k);
    Rational total(0);
    for (Eigen::Index j = 0; j < k; ++j) {
      c(j) = strict.x(j) + Rational(1);
      total += c(j);
    }
    Rational inv = inverse(total);
    for (Eigen::Index j = 0; j < k; ++j) c(j) *= inv;
    cert.convex_weights = c;
  }
  return cert;
}

OriginClass classify_origin(const std::vector<LatticeVector>& points) {
  return classify_origin_certified(points).cls;
}

bool satisfies_min_norm_certificate(const std::vector<LatticeVector>& points, const NormForm& norm,
                                    const RatVector& q) {
  const IntMatrix& Q = norm.matrix();
  const Eigen::Index r = Q.rows();
  RatVector Qq = RatVector::Constant(r, Rational(0));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      if (!Q(i, j).is_zero() && !q(j).is_zero()) Qq(i) += Rational(Q(i, j)) * q(j);
  Rational qq(0);
  for (Eigen::Index i = 0; i < r; ++i)
    if (!q(i).is_zero()) qq += Qq(i) * q(i);
  for (const auto& p : points) {
    Rational s(0);
    for (Eigen::Index i = 0; i < r; ++i)
      if (!p(i).is_zero() && !Qq(i).is_zero()) s += Qq(i) * Rational(p(i));
    if (s < qq) return false;
  }
  return true;
}

RatVector min_norm_point(const std::vector<LatticeVector>& input, const NormForm& norm) {
  const Eigen::Index r = check_points(input);
  if (norm.rank() != r) throw Error(ErrorCode::ArityMismatch, "norm form rank differs from point length");

  std::vector<LatticeVector> points;
  for (const auto& p : input) {
    bool dup = false;
    for (const auto& e : points) dup = dup || equal(e, p);
    if (!dup) points.push_back(p);
  }
  std::sort(points.begin(), points.end(), LexLess{});
  const size_t k = points.size();

  // Gram matrix G_ij = p_i^T Q p_j.
  const IntMatrix& Q = norm.matrix();
  std::vector<LatticeVector> Qp;
  for (const auto& p : points) Qp.push_back(Q * p);
  IntMatrix G(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      Integer g = pairing(points[i], Qp[j]);
      G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g;
      G(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = g;
    }

  const size_t max_size = std::min(k, static_cast<size_t>(r) + 1);
  std::vector<size_t> idx;
  IntMatrix K, work;
  std::vector<Integer> alpha;
  for (size_t s = 1; s <= max_size; ++s) {
    idx.resize(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    const Eigen::Index n = static_cast<Eigen::Index>(s);
    K.resize(n + 1, n + 1);
    alpha.resize(s);
    for (;;) {
      // Bordered KKT system [G_S 1; 1^T 0] [alpha; mu] = [0; 1], solved by
      // Cramer's rule: alpha_i = det(K with column i := e_n) / det(K).
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j)
          K(i, j) = G(static_cast<Eigen::Index>(idx[static_cast<size_t>(i)]),
                      static_cast<Eigen::Index>(idx[static_cast<size_t>(j)]));
        K(i, n) = Integer(1);
        K(n, i) = Integer(1);
      }
      K(n, n) = Integer(0);
      work = K;
      Integer D = bareiss_determinant_in_place(work);
      bool candidate = !D.is_zero();
      for (Eigen::Index i = 0; candidate && i < n; ++i) {
        work = K;
        for (Eigen::Index row = 0; row <= n; ++row) work(row, i) = Integer(row == n ? 1 : 0);
        alpha[static_cast<size_t>(i)] = bareiss_determinant_in_place(work);
        candidate = alpha[static_cast<size_t>(i)].sign() * D.sign() >= 0;
      }
      if (candidate) {
        // Scaled candidate qs = D q, integral.
        LatticeVector qs = LatticeVector::Constant(r, Integer(0));
        for (Eigen::Index i = 0; i < n; ++i) {
          const Integer& a = alpha[static_cast<size_t>(i)];
          if (a.is_zero()) continue;
          const auto& p = points[idx[static_cast<size_t>(i)]];
          for (Eigen::Index c = 0; c < r; ++c)
            if (!p(c).is_zero()) qs(c) += a * p(c);
        }
        // Certificate (Q q)^T p >= q^T Q q, multiplied through by D^2.
        LatticeVector Qqs = Q * qs;
        Integer qq = pairing(qs, Qqs);
        bool optimal = true;
        for (size_t j = 0; optimal && j < k; ++j) optimal = pairing(points[j], Qqs) * D >= qq;
        if (optimal) {
          RatVector q(r);
          for (Eigen::Index c = 0; c < r; ++c) q(c) = Rational(qs(c), D);
          return q;
        }
      }
      // Next combination in lexicographic order.
      size_t pos = s;
      while (pos > 0 && idx[pos - 1] == k - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error(ErrorCode::EmptySet, "no minimum-norm candidate found");  // unreachable for valid input
}

LatticeVector primitive_ray(const RatVector& q, const NormForm& norm) {
  if (q.size() != norm.rank()) throw Error(ErrorCode::ArityMismatch, "norm form rank differs from vector length");
  if (all_zero(q)) throw Error(ErrorCode::ZeroVector, "primitive_ray of the zero vector");
  return clear_denominators(norm.solve(q));
}

}  // namespace stabkit
