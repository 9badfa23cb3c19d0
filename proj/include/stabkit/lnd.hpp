#pragma once

#include <optional>
#include <vector>

#include "stabkit/polynomial.hpp"

namespace stabkit {

// A derivation of Q[x1..xn], determined by the images of the variables.
class Derivation {
 public:
  explicit Derivation(std::vector<Polynomial> images);
  static Derivation zero(std::size_t n);
  // d/dx_i, 0-based.
  static Derivation partial(std::size_t n, std::size_t index);

  std::size_t num_vars() const { return images_.size(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

 private:
  std::vector<Polynomial> images_;
};

Polynomial apply(const Derivation& d, const Polynomial& f);
// D^k(f).
Polynomial apply_power(const Derivation& d, const Polynomial& f, unsigned k);

struct NilpotencyResult {
  bool nilpotent = false;
  // Least k with D^k(x_i) = 0; empty when the bound was exceeded.
  std::vector<unsigned> orders;
};

NilpotencyResult verify_locally_nilpotent(const Derivation& d, unsigned bound);

// sum_k D^k(f) t^k / k! in n + 1 variables, t being the last one. The series
// length is bounded from the generator orders found within nilpotency_bound.
Polynomial exp_coaction(const Derivation& d, const Polynomial& f, unsigned nilpotency_bound = 64);

bool invariant_test(const Derivation& d, const Polynomial& f);

// Some s of least degree <= degree_bound with D(s) = 1; free coefficients are
// set to zero in descending grlex column order.
std::optional<Polynomial> find_slice(const Derivation& d, unsigned degree_bound);

// exp(tD)(f) at t = -s. Throws NotASlice unless D(s) = 1.
Polynomial phi_projection(const Derivation& d, const Polynomial& slice, const Polynomial& f);

std::vector<Polynomial> invariant_generators_via_slice(const Derivation& d, const Polynomial& slice);

bool fixed_point_test(const Derivation& d, const std::vector<Rational>& point);

// The common degree shift deg D(x_i) - deg x_i; zero for the zero derivation.
std::optional<long> homogeneity_degree(const Derivation& d, const std::vector<long>& weights);

// dim of ker D on polynomials of total degree <= k.
std::size_t kernel_dimension_by_degree(const Derivation& d, unsigned k);

}  // namespace stabkit
