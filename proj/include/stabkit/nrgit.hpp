#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabkit/lnd.hpp"
#include "stabkit/torus.hpp"
#include "stabkit/univariate.hpp"

namespace stabkit {

// Linear action of U x| G_m on V = Q^n. Lie U is spanned by the nilpotents,
// N_j raising G_m-weight by grading_degrees[j]; effective weights are
// gm_weights[i] / scale, and grading degrees use the same integer units.
struct GradedUnipotentAction {
  std::vector<long> gm_weights;
  std::vector<RatMatrix> nilpotents;
  std::vector<long> grading_degrees;
  Integer scale{1};
  // Acts on the minimal-weight coordinates, in increasing index order.
  std::optional<TorusAction> residual_torus;

  std::size_t size() const { return gm_weights.size(); }
  // Throws BadShape, NotNilpotent or InvalidGrading.
  void validate() const;
};

struct MinData {
  Rational omega_min;
  std::vector<std::size_t> vmin_indices;
  std::optional<Rational> omega_next;
};

MinData min_data(const GradedUnipotentAction& action);

enum class Attracting { InZmin, InXmin, Outside };
const char* to_string(Attracting a);

Attracting attracting_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x);

struct TwistInterval {
  Rational lo, hi;  // open interval of adapted characters
  bool contains(const Rational& chi) const { return lo < chi && chi < hi; }
};

// Throws NoPositivePart when all weights are equal.
TwistInterval adapted_twist_interval(const GradedUnipotentAction& action);
// lo + epsilon (hi - lo), epsilon in (0, 1).
Rational well_adapted_choice(const TwistInterval& interval, const Rational& epsilon = Rational(1, 100));
// Effective weights after shifting by -chi.
std::vector<Rational> twisted_weights(const GradedUnipotentAction& action, const Rational& chi);
// The same action with the linearisation twisted by chi, rescaled to integer weights.
GradedUnipotentAction twist(const GradedUnipotentAction& action, const Rational& chi);

enum class Decision { Holds, Fails, Undetermined };
const char* to_string(Decision d);

struct StabiliserCheck {
  Decision decision = Decision::Undetermined;
  std::optional<RatVector> witness;  // v in V_min with a nontrivial Lie stabiliser
  bool exact = false;
};

// [U]_0: injectivity of u -> (sum u_j N_j) v on Lie U for every 0 != v in V_min.
// Exact for one generator or a one-dimensional V_min, otherwise sampled.
StabiliserCheck check_U0(const GradedUnipotentAction& action, unsigned samples = 256, unsigned seed = 1);

// [R]_0 for a residual torus: every semistable support of Z_min is stable.
StabiliserCheck check_R0(const GradedUnipotentAction& action);

// exp(-uN) x coordinatewise, as polynomials in u. Requires one generator.
std::vector<UPoly> sweep_polynomials(const GradedUnipotentAction& action, const std::vector<Rational>& x);

struct SweepResult {
  bool member = false;
  // Support inside V_min (global indices) of exp(-uN)x at the common roots,
  // one entry per class of roots sharing a support.
  std::vector<std::vector<std::size_t>> landing_supports;
  // Squarefree factor of the gcd carrying each class of roots; 0 for "all u".
  std::vector<UPoly> root_factors;
};

// Membership of x in U Z_min. Throws NotInAttractingSet, BadShape for k != 1.
SweepResult u_sweep_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x);

enum class Reason { Ok, NotInAttractingSet, InUZmin, LimitUnstable, SweepLandsSemistable, MultipleGenerators };
const char* to_string(Reason r);

struct StableVerdict {
  Decision stable = Decision::Undetermined;  // Holds = stable
  Reason reason = Reason::Ok;
};

StableVerdict uhat_stable_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x);
// Throws MissingResidualTorus.
StableVerdict g_stable_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x);

// D(x_i) = (N x)_i.
Derivation linear_derivation(const RatMatrix& n);

// Borel subgroup of SL_2 acting on Mat_2x2 + k by conjugation; coordinates
// (a11, a12, a21, a22, z).
GradedUnipotentAction borel_2x2_action();

struct WeightedPoint {
  Rational z, tr, det;
  bool swept = false;  // (z, tr, det) = 0: the point lies in U Z_min
};

// [z : tr A : det A] in P(1,1,2), first nonzero of (z, tr) scaled to 1.
// Throws Unstable when a21 = 0.
WeightedPoint borel_2x2_quotient(const RatMatrix& a, const Rational& z);

// (mu, t^2, u) with diag(t, 1/t) [[1, u], [0, 1]] (mu A) (...)^{-1} = A'
// and mu z = z'; t itself may be irrational.
struct BorelConjugator {
  Rational mu, t_squared, u;
};

// nullopt when the classes differ, or when z = tr = 0 and det'/det is not a
// rational square so that mu would be irrational.
std::optional<BorelConjugator> borel_conjugator(const RatMatrix& a, const Rational& z, const RatMatrix& a2,
                                                const Rational& z2);
// Applies the conjugator to (A, z).
std::pair<RatMatrix, Rational> apply_borel(const BorelConjugator& b, const RatMatrix& a, const Rational& z);

}  // namespace stabkit
