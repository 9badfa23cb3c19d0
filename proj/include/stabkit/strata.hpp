#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/torus.hpp"

namespace stabkit {

// The user's norm form is the form on cocharacters. Minimum-norm points live
// in character space and are measured with the dual form Q^{-1}, so that
// m = M(x) = inf mu(x, lambda) / ||lambda||_Q exactly.

// Unstable stratum index (lambda, m) with m < 0 stored as m^2.
struct StratumIndex {
  LatticeVector lambda;
  Rational m_squared;
  RatVector q;  // witnessing minimum-norm point in character space

  // "-2" when m is rational, otherwise "-sqrt(9/2)".
  std::string m_string() const;
  std::optional<Rational> m_rational() const;
};

bool operator==(const StratumIndex& a, const StratumIndex& b);
// Orders by increasing |m|, then lexicographically by lambda.
bool operator<(const StratumIndex& a, const StratumIndex& b);

// A finite group of lattice automorphisms of the cocharacter lattice.
class WeylGroup {
 public:
  // Closes the generators under composition. Throws BadShape when a
  // generator is not unimodular.
  static WeylGroup generated_by(const std::vector<IntMatrix>& generators);
  // Coordinate permutations of Z^r.
  static WeylGroup symmetric(Eigen::Index rank);
  // {1, -1}.
  static WeylGroup sign(Eigen::Index rank);

  const std::vector<IntMatrix>& elements() const { return elements_; }
  Eigen::Index rank() const { return elements_.front().rows(); }
  // Throws NotWeylInvariant unless g^T Q g = Q for every element.
  void check_invariant(const NormForm& norm) const;
  // Throws NotWeylInvariant unless every element permutes the weight
  // multiset; folding is meaningless otherwise.
  void check_invariant(const TorusAction& action) const;

 private:
  std::vector<IntMatrix> elements_;
};

// Squared dual norm q^T Q^{-1} q.
Rational dual_norm2(const RatVector& q, const NormForm& norm);

StratumIndex make_index(const RatVector& q, const NormForm& norm);

// Orbit representative with lexicographically least lambda.
StratumIndex fold_index(const StratumIndex& index, const WeylGroup& weyl);

// Sorted, distinct unstable indices over all weight subsets whose hull misses
// the origin; folded by the Weyl group when given.
std::vector<StratumIndex> enumerate_indices(const TorusAction& action, const NormForm& norm,
                                            const std::optional<WeylGroup>& weyl = std::nullopt);

struct Semistable {};
using StratumResult = std::variant<Semistable, StratumIndex>;

StratumResult stratum_of_point(const TorusAction& action, const NormForm& norm, const PointSupport& x);

// Restriction of x to the support coordinates minimising <w_i, lambda>.
PointSupport limit_point(const TorusAction& action, const PointSupport& x, const LatticeVector& lambda);

enum class BladeMembership { InZbeta, InYbeta, Neither };
const char* to_string(BladeMembership b);

BladeMembership blade_membership(const TorusAction& action, const NormForm& norm, const PointSupport& x,
                                 const StratumIndex& index);

// Index groups of a diagonal 1-PS in GL_n, by strictly decreasing weight.
struct ParabolicBlocks {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> weights;  // the lambda value on each block

  // Entry (i, j) of g survives lim lambda(t) g lambda(t)^{-1}.
  static bool in_parabolic(const std::vector<long>& lambda, std::size_t i, std::size_t j);
  static bool in_levi(const std::vector<long>& lambda, std::size_t i, std::size_t j);
  static bool in_unipotent_radical(const std::vector<long>& lambda, std::size_t i, std::size_t j);
};

ParabolicBlocks parabolic_blocks(const std::vector<long>& lambda_diag);

struct StratumQuotientReport {
  StratumIndex index;
  std::vector<std::size_t> z_coordinates;     // weights on the hyperplane <w, lambda> = <q, lambda>
  std::vector<LatticeVector> z_weights;       // distinct weights of Z_beta
  std::vector<std::size_t> y_coordinates;     // weights with <w, lambda> >= <q, lambda>
  Rational twist_coefficient;                 // -m / ||lambda||, rational by construction
  RatVector twist_character;                  // q
  TorusAction residual;                       // Z_beta coordinates, linearisation twisted by q
};

// Throws InvalidIndex when the index is inconsistent with the action and norm.
StratumQuotientReport stratum_quotient_report(const TorusAction& action, const NormForm& norm,
                                              const StratumIndex& index);

}  // namespace stabkit
