#pragma once

#include <optional>
#include <vector>

#include "stabkit/torus.hpp"

namespace stabkit {

// sum a_i x^{d-i} y^i, coeffs = (a_0, ..., a_d).
struct BinaryForm {
  unsigned degree = 0;
  std::vector<Rational> coeffs;

  // Throws BadShape unless coeffs has d + 1 entries.
  static BinaryForm of(std::vector<Rational> coeffs);
  // prod (x - r_j y) times x^a y^b, for the given rational roots r_j.
  static BinaryForm from_roots(const std::vector<Rational>& roots, unsigned x_power = 0, unsigned y_power = 0);
  bool is_zero() const;
};

unsigned max_root_multiplicity(const BinaryForm& f);

// Throws ZeroForm.
StabilityClass classify_binary_form(const BinaryForm& f);

// Torus of SL_2 on binary forms of degree d: a_i has weight 2i - d.
TorusAction binary_form_torus(unsigned degree);

// Moves a root of highest multiplicity to [0 : 1] by x -> x + r y, when that
// root is rational (always the case when the multiplicity exceeds d / 2).
// A worst root already at [1 : 0] is swapped there by x <-> y first.
std::optional<BinaryForm> move_worst_root_to_zero(const BinaryForm& f);

bool gl2_orbit_closure_equal(const RatMatrix& a, const RatMatrix& b);

struct GrassmannResult {
  bool semistable = false;
  // Invertible g with the left kernel of A in its first rows; present on failure.
  std::optional<RatMatrix> basis_change;
  // -1 on the kernel rows of g A, 0 elsewhere; present on failure.
  std::optional<LatticeVector> destabilizer;
};

// det-semistability of A (r x n, r <= n) under GL_r acting on the left.
GrassmannResult grassmann_semistable(const RatMatrix& a);

// Diagonal torus of GL_r acting on r x n matrices with character det.
TorusAction grassmann_torus(Eigen::Index r, Eigen::Index n);
// Nonzero entries of A in row-major coordinates.
PointSupport matrix_support(const RatMatrix& a);

}  // namespace stabkit
