#pragma once

#include <vector>

#include "stabkit/lattice.hpp"

namespace stabkit {

// Symmetric positive-definite integer form; ||v||^2 = v^T Q v.
class NormForm {
 public:
  // Throws BadShape or NotPositiveDefinite.
  explicit NormForm(IntMatrix Q);
  static NormForm identity(Eigen::Index rank);

  const IntMatrix& matrix() const { return Q_; }
  Eigen::Index rank() const { return Q_.rows(); }
  Rational norm2(const RatVector& v) const;
  Integer norm2(const LatticeVector& v) const;
  Rational inner(const RatVector& a, const RatVector& b) const;
  // Q^{-1} v.
  RatVector solve(const RatVector& v) const;
  // The form on the dual lattice with matrix adj(Q) = det(Q) Q^{-1}.
  NormForm adjugate() const;
  Integer determinant() const { return det_; }
  bool operator==(const NormForm& o) const { return Q_ == o.Q_; }

 private:
  IntMatrix Q_;
  Integer det_;
};

enum class OriginClass { Outside, Boundary, Interior };

const char* to_string(OriginClass c);

struct OriginCertificate {
  OriginClass cls = OriginClass::Outside;
  // Convex weights with sum_i c_i p_i = 0 (Boundary/Interior); strictly
  // positive in the Interior case.
  RatVector convex_weights;
  // Primitive lambda with <p, lambda> > 0 for every p (Outside).
  LatticeVector separating;
};

// Throws EmptySet for no points, ArityMismatch for mixed lengths.
OriginCertificate classify_origin_certified(const std::vector<LatticeVector>& points);
OriginClass classify_origin(const std::vector<LatticeVector>& points);

// Minimiser of q^T Q q over conv(points) via Caratheodory enumeration.
RatVector min_norm_point(const std::vector<LatticeVector>& points, const NormForm& norm);

// Primitive lattice vector on the ray through Q^{-1} q. Throws ZeroVector.
LatticeVector primitive_ray(const RatVector& q, const NormForm& norm);

// (Q q)^T (p - q) >= 0 for all p.
bool satisfies_min_norm_certificate(const std::vector<LatticeVector>& points, const NormForm& norm,
                                    const RatVector& q);

RatVector to_rational_vector(const LatticeVector& v);

}  // namespace stabkit
