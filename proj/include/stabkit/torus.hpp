#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stabkit/convex.hpp"
#include "stabkit/polynomial.hpp"

namespace stabkit {

enum class Ambient { Projective, AffineWithCharacter };

// Linear action of a rank-r torus on V = k^n, one weight per coordinate.
// Effective weights are weights[i] / scale.
struct TorusAction {
  Eigen::Index rank = 0;
  std::vector<LatticeVector> weights;
  Ambient ambient = Ambient::Projective;
  LatticeVector rho;  // affine-with-character mode only
  Integer scale{1};

  static TorusAction projective(std::vector<LatticeVector> weights, Integer scale = Integer(1));
  static TorusAction affine(std::vector<LatticeVector> weights, LatticeVector rho);

  std::size_t size() const { return weights.size(); }
  // Throws BadShape / ArityMismatch on malformed data.
  void validate() const;
  // Integer weight matrix with the weights as columns.
  IntMatrix weight_matrix() const;
};

// Nonzero coordinates of a point (0-based), with optional exact values.
struct PointSupport {
  std::vector<std::size_t> support;
  std::vector<Rational> coords;  // empty, or one nonzero value per support entry

  static PointSupport of(std::vector<std::size_t> support);
  // Support read off from a full coordinate vector.
  static PointSupport from_coordinates(const std::vector<Rational>& values);
};

enum class StabilityClass { Unstable, StrictlySemistable, Stable };

const char* to_string(StabilityClass c);

// Distinct weights on the support, in first-occurrence order.
std::vector<LatticeVector> weight_set(const TorusAction& action, const PointSupport& x);

// -min <w, lambda> over the weight set, divided by the scale.
Rational hm_weight(const TorusAction& action, const PointSupport& x, const LatticeVector& lambda);

struct ProjectiveClassification {
  StabilityClass cls = StabilityClass::Unstable;
  // A 1-PS with hm_weight < 0, present when unstable.
  std::optional<LatticeVector> destabilizer;
};

ProjectiveClassification classify_projective_certified(const TorusAction& action, const PointSupport& x);
StabilityClass classify_projective(const TorusAction& action, const PointSupport& x);

// Shifts effective weights by -chi (chi in effective units) by passing to the
// scale N * lcm(denominators of chi).
TorusAction twist_by_character(const TorusAction& action, const RatVector& chi);

struct AffineCharResult {
  bool limit_exists = false;
  Integer pairing;  // <rho, lambda>, meaningful when the limit exists
};

AffineCharResult affine_char_test(const TorusAction& action, const PointSupport& x, const LatticeVector& lambda);

struct AffineClassification {
  StabilityClass cls = StabilityClass::Unstable;
  // A 1-PS whose limit exists with <rho, lambda> < 0, present when unstable.
  std::optional<LatticeVector> destabilizer;
};

// King's criterion over the torus: semistable iff rho lies in the cone of the
// support weights; stable iff rho lies in its ambient interior.
AffineClassification classify_affine_char(const TorusAction& action, const PointSupport& x);

struct HilbertBasis {
  std::vector<Exponent> elements;
  // True when the bound provably covers every Hilbert basis element.
  bool complete = false;
  unsigned bound = 0;
  // Degree bound that would certify completeness.
  unsigned certifying_bound = 0;
};

HilbertBasis hilbert_basis_kernel(const TorusAction& action, unsigned bound);

std::vector<Exponent> semi_invariant_monomials(const TorusAction& action, unsigned weight_multiple, unsigned bound);

// Exponent vectors in increasing total degree, then decreasing lex.
void sort_exponents(std::vector<Exponent>& v);

}  // namespace stabkit
