#include "stabkit/nrgit.hpp"

#include <algorithm>
#include <random>

#include "stabkit/dense.hpp"
#include "stabkit/error.hpp"

namespace stabkit {

void GradedUnipotentAction::validate() const {
  const auto n = static_cast<Eigen::Index>(size());
  if (n == 0) throw Error(ErrorCode::BadShape, "graded action needs n >= 1");
  if (nilpotents.empty()) throw Error(ErrorCode::BadShape, "graded action needs at least one nilpotent");
  if (grading_degrees.size() != nilpotents.size())
    throw Error(ErrorCode::InvalidGrading, "one grading degree per nilpotent is required");
  if (scale.sign() <= 0) throw Error(ErrorCode::BadShape, "scale must be positive");
  for (std::size_t j = 0; j < nilpotents.size(); ++j) {
    const RatMatrix& m = nilpotents[j];
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::BadShape, "nilpotent must be n x n");
    if (grading_degrees[j] <= 0) throw Error(ErrorCode::InvalidGrading, "grading degrees must be positive");
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        if (!m(r, c).is_zero() && gm_weights[r] != gm_weights[c] + grading_degrees[j])
          throw Error(ErrorCode::InvalidGrading, "nilpotent does not raise weights by its grading degree");
    RatMatrix p = m;
    for (Eigen::Index k = 1; k < n; ++k) p = RatMatrix(p * m);
    if (!all_zero(p)) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
  }
  if (residual_torus) {
    // Rank 0 stands for the trivial residual group.
    if (residual_torus->rank > 0) residual_torus->validate();
    if (residual_torus->ambient != Ambient::Projective || residual_torus->size() != min_data(*this).vmin_indices.size())
      throw Error(ErrorCode::BadShape, "residual torus must act projectively on the minimal-weight coordinates");
  }
}

MinData min_data(const GradedUnipotentAction& action) {
  if (action.gm_weights.empty()) throw Error(ErrorCode::BadShape, "graded action needs n >= 1");
  long lo = *std::min_element(action.gm_weights.begin(), action.gm_weights.end());
  MinData d;
  d.omega_min = Rational(Integer(lo), action.scale);
  std::optional<long> next;
  for (std::size_t i = 0; i < action.size(); ++i) {
    long w = action.gm_weights[i];
    if (w == lo) d.vmin_indices.push_back(i);
    else if (!next || w < *next) next = w;
  }
  if (next) d.omega_next = Rational(Integer(*next), action.scale);
  return d;
}

const char* to_string(Attracting a) {
  switch (a) {
    case Attracting::InZmin: return "InZmin";
    case Attracting::InXmin: return "InXmin";
    case Attracting::Outside: return "Outside";
  }
  return "?";
}

namespace {

std::vector<std::size_t> support_of(const GradedUnipotentAction& action, const std::vector<Rational>& x) {
  if (x.size() != action.size()) throw Error(ErrorCode::ArityMismatch, "point length differs from dimension");
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s.push_back(i);
  if (s.empty()) throw Error(ErrorCode::ZeroVector, "the zero vector is not a projective point");
  return s;
}

RatVector as_vector(const std::vector<Rational>& x) {
  RatVector v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = x[i];
  return v;
}

bool contains(const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); }

// Matrix with columns N_j v.
RatMatrix orbit_tangents(const GradedUnipotentAction& action, const RatVector& v) {
  RatMatrix m(v.size(), static_cast<Eigen::Index>(action.nilpotents.size()));
  for (std::size_t j = 0; j < action.nilpotents.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = action.nilpotents[j] * v;
  return m;
}

// Residual-torus semistability of a point of Z_min given by its global support.
bool residual_semistable(const GradedUnipotentAction& action, const std::vector<std::size_t>& vmin,
                         const std::vector<std::size_t>& global_support) {
  const TorusAction& r = *action.residual_torus;
  if (r.rank == 0) return true;
  std::vector<std::size_t> local;
  for (std::size_t k = 0; k < vmin.size(); ++k)
    if (contains(global_support, vmin[k])) local.push_back(k);
  return classify_projective(r, PointSupport::of(local)) != StabilityClass::Unstable;
}

}  // namespace

Attracting attracting_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x) {
  auto s = support_of(action, x);
  auto md = min_data(action);
  bool any = false, all = true;
  for (std::size_t i : s) {
    bool in = contains(md.vmin_indices, i);
    any = any || in;
    all = all && in;
  }
  if (!any) return Attracting::Outside;
  return all ? Attracting::InZmin : Attracting::InXmin;
}

TwistInterval adapted_twist_interval(const GradedUnipotentAction& action) {
  auto md = min_data(action);
  if (!md.omega_next) throw Error(ErrorCode::NoPositivePart, "all weights are equal, no adapted twist exists");
  return {md.omega_min, *md.omega_next};
}

Rational well_adapted_choice(const TwistInterval& interval, const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) throw Error(ErrorCode::BadShape, "epsilon must lie in (0, 1)");
  return interval.lo + epsilon * (interval.hi - interval.lo);
}

std::vector<Rational> twisted_weights(const GradedUnipotentAction& action, const Rational& chi) {
  std::vector<Rational> out;
  for (long w : action.gm_weights) out.push_back(Rational(Integer(w), action.scale) - chi);
  return out;
}

GradedUnipotentAction twist(const GradedUnipotentAction& action, const Rational& chi) {
  const Integer l = chi.denominator();
  GradedUnipotentAction out = action;
  out.scale = action.scale * l;
  const Integer shift = (Rational(out.scale) * chi).numerator();
  for (std::size_t i = 0; i < action.size(); ++i)
    out.gm_weights[i] = (Integer(action.gm_weights[i]) * l - shift).to_int64();
  for (auto& d : out.grading_degrees) d = (Integer(d) * l).to_int64();
  return out;
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Holds: return "Holds";
    case Decision::Fails: return "Fails";
    case Decision::Undetermined: return "Undetermined";
  }
  return "?";
}

StabiliserCheck check_U0(const GradedUnipotentAction& action, unsigned samples, unsigned seed) {
  action.validate();
  const auto vmin = min_data(action).vmin_indices;
  const auto n = static_cast<Eigen::Index>(action.size());
  const auto k = static_cast<Eigen::Index>(action.nilpotents.size());
  StabiliserCheck out;
  if (k == 1) {
    RatMatrix restricted(n, static_cast<Eigen::Index>(vmin.size()));
    for (std::size_t c = 0; c < vmin.size(); ++c)
      restricted.col(static_cast<Eigen::Index>(c)) = action.nilpotents[0].col(static_cast<Eigen::Index>(vmin[c]));
    RatMatrix ker = nullspace(restricted);
    out.exact = true;
    if (ker.cols() == 0) {
      out.decision = Decision::Holds;
    } else {
      RatVector w = RatVector::Zero(n);
      for (std::size_t c = 0; c < vmin.size(); ++c) w(static_cast<Eigen::Index>(vmin[c])) = ker(static_cast<Eigen::Index>(c), 0);
      out.decision = Decision::Fails;
      out.witness = clear_denominators(w).cast<Rational>();
    }
    return out;
  }
  if (vmin.size() == 1) {
    RatVector v = RatVector::Zero(n);
    v(static_cast<Eigen::Index>(vmin[0])) = Rational(1);
    out.exact = true;
    out.decision = rank(orbit_tangents(action, v)) == k ? Decision::Holds : Decision::Fails;
    if (out.decision == Decision::Fails) out.witness = v;
    return out;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(-7, 7);
  const unsigned total = std::max(samples, 200u) + static_cast<unsigned>(vmin.size());
  for (unsigned s = 0; s < total; ++s) {
    RatVector v = RatVector::Zero(n);
    if (s < vmin.size()) {
      v(static_cast<Eigen::Index>(vmin[s])) = Rational(1);
    } else {
      for (std::size_t i : vmin) v(static_cast<Eigen::Index>(i)) = Rational(coord(rng));
    }
    if (all_zero(v)) continue;
    if (rank(orbit_tangents(action, v)) < k) {
      out.decision = Decision::Fails;
      out.witness = v;
      return out;
    }
  }
  return out;
}

StabiliserCheck check_R0(const GradedUnipotentAction& action) {
  action.validate();
  if (!action.residual_torus) throw Error(ErrorCode::MissingResidualTorus, "no residual torus given");
  const auto vmin = min_data(action).vmin_indices;
  const TorusAction& r = *action.residual_torus;
  StabiliserCheck out;
  out.exact = true;
  out.decision = Decision::Holds;
  if (r.rank == 0) {
    // Every point of Z_min is semistable and its stabiliser is all of the trivial group.
    return out;
  }
  if (vmin.size() > 20) throw Error(ErrorCode::BadShape, "too many minimal-weight coordinates to enumerate");
  for (unsigned long mask = 1; mask < (1ul << vmin.size()); ++mask) {
    std::vector<std::size_t> local;
    for (std::size_t k = 0; k < vmin.size(); ++k)
      if (mask & (1ul << k)) local.push_back(k);
    if (classify_projective(r, PointSupport::of(local)) == StabilityClass::StrictlySemistable) {
      RatVector w = RatVector::Zero(static_cast<Eigen::Index>(action.size()));
      for (std::size_t k : local) w(static_cast<Eigen::Index>(vmin[k])) = Rational(1);
      out.decision = Decision::Fails;
      out.witness = w;
      return out;
    }
  }
  return out;
}

std::vector<UPoly> sweep_polynomials(const GradedUnipotentAction& action, const std::vector<Rational>& x) {
  if (action.nilpotents.size() != 1) throw Error(ErrorCode::BadShape, "the sweep needs exactly one nilpotent");
  if (x.size() != action.size()) throw Error(ErrorCode::ArityMismatch, "point length differs from dimension");
  std::vector<std::vector<Rational>> coeffs(action.size());
  RatVector v = as_vector(x);
  Rational fact(1);
  for (long k = 0; !all_zero(v); ++k) {
    if (k > 0) fact *= Rational(k);
    Rational c = inverse(fact);
    if (k % 2) c = -c;
    for (std::size_t i = 0; i < action.size(); ++i) coeffs[i].push_back(c * v(static_cast<Eigen::Index>(i)));
    v = action.nilpotents[0] * v;
  }
  std::vector<UPoly> out;
  for (auto& c : coeffs) out.emplace_back(std::move(c));
  return out;
}

SweepResult u_sweep_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x) {
  action.validate();
  if (attracting_membership(action, x) == Attracting::Outside)
    throw Error(ErrorCode::NotInAttractingSet, "point is not in the minimal attracting set");
  const auto vmin = min_data(action).vmin_indices;
  auto g = sweep_polynomials(action, x);
  UPoly common;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!contains(vmin, i)) common = gcd(common, g[i]);
  SweepResult out;
  if (common.is_zero()) {
    out.member = true;
    std::vector<std::size_t> land;
    for (std::size_t i : vmin)
      if (!x[i].is_zero()) land.push_back(i);
    out.landing_supports.push_back(land);
    out.root_factors.push_back(UPoly());
    return out;
  }
  if (common.degree() < 1) return out;
  out.member = true;
  // Split the squarefree part of the gcd into classes of roots on which each
  // minimal-weight coordinate either always or never vanishes.
  std::vector<UPoly> pieces{divmod(common, gcd(common, common.derivative())).first.monic()};
  for (std::size_t j : vmin) {
    std::vector<UPoly> next;
    for (const auto& p : pieces) {
      UPoly a = gcd(p, g[j]);
      if (a.degree() >= 1 && a.degree() < p.degree()) {
        next.push_back(a);
        next.push_back(divmod(p, a).first.monic());
      } else {
        next.push_back(p);
      }
    }
    pieces = std::move(next);
  }
  std::vector<std::pair<std::vector<std::size_t>, UPoly>> classes;
  for (const auto& p : pieces) {
    std::vector<std::size_t> land;
    for (std::size_t j : vmin)
      if (gcd(p, g[j]).degree() < p.degree()) land.push_back(j);
    classes.emplace_back(land, p);
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.to_string() < b.second.to_string();
  });
  for (auto& [land, p] : classes) {
    out.landing_supports.push_back(land);
    out.root_factors.push_back(p);
  }
  return out;
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::Ok: return "Ok";
    case Reason::NotInAttractingSet: return "NotInAttractingSet";
    case Reason::InUZmin: return "InUZmin";
    case Reason::LimitUnstable: return "LimitUnstable";
    case Reason::SweepLandsSemistable: return "SweepLandsSemistable";
    case Reason::MultipleGenerators: return "MultipleGenerators";
  }
  return "?";
}

StableVerdict uhat_stable_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x) {
  action.validate();
  if (action.nilpotents.size() != 1) return {Decision::Undetermined, Reason::MultipleGenerators};
  if (attracting_membership(action, x) == Attracting::Outside) return {Decision::Fails, Reason::NotInAttractingSet};
  if (u_sweep_membership(action, x).member) return {Decision::Fails, Reason::InUZmin};
  return {Decision::Holds, Reason::Ok};
}

StableVerdict g_stable_membership(const GradedUnipotentAction& action, const std::vector<Rational>& x) {
  if (!action.residual_torus) throw Error(ErrorCode::MissingResidualTorus, "no residual torus given");
  action.validate();
  if (action.nilpotents.size() != 1) return {Decision::Undetermined, Reason::MultipleGenerators};
  if (attracting_membership(action, x) == Attracting::Outside) return {Decision::Fails, Reason::NotInAttractingSet};
  const auto vmin = min_data(action).vmin_indices;
  if (!residual_semistable(action, vmin, support_of(action, x))) return {Decision::Fails, Reason::LimitUnstable};
  auto sweep = u_sweep_membership(action, x);
  if (sweep.member)
    for (const auto& land : sweep.landing_supports)
      if (residual_semistable(action, vmin, land)) return {Decision::Fails, Reason::SweepLandsSemistable};
  return {Decision::Holds, Reason::Ok};
}

Derivation linear_derivation(const RatMatrix& n) {
  if (n.rows() != n.cols()) throw Error(ErrorCode::BadShape, "matrix must be square");
  const auto dim = static_cast<std::size_t>(n.rows());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < dim; ++i) {
    Polynomial p(dim);
    for (std::size_t j = 0; j < dim; ++j)
      if (!n(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).is_zero())
        p += Polynomial::variable(dim, j) * n(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    images.push_back(p);
  }
  return Derivation(images);
}

GradedUnipotentAction borel_2x2_action() {
  // [E12, A] = (a21, a22 - a11, 0, -a21) in the coordinates (a11, a12, a21, a22).
  RatMatrix n = RatMatrix::Zero(5, 5);
  n(0, 2) = Rational(1);
  n(1, 3) = Rational(1);
  n(1, 0) = Rational(-1);
  n(3, 2) = Rational(-1);
  GradedUnipotentAction a;
  a.gm_weights = {0, 2, -2, 0, 0};
  a.nilpotents = {n};
  a.grading_degrees = {2};
  return a;
}

WeightedPoint borel_2x2_quotient(const RatMatrix& a, const Rational& z) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::BadShape, "expected a 2x2 matrix");
  if (a(1, 0).is_zero()) throw Error(ErrorCode::Unstable, "a21 = 0: the point is unstable");
  WeightedPoint p{z, a(0, 0) + a(1, 1), a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0), false};
  Rational c;
  if (!p.z.is_zero()) c = p.z;
  else if (!p.tr.is_zero()) c = p.tr;
  if (!c.is_zero()) {
    p.z /= c;
    p.tr /= c;
    p.det /= c * c;
  } else if (!p.det.is_zero()) {
    p.det = Rational(1);
  } else {
    p.swept = true;
  }
  return p;
}

std::pair<RatMatrix, Rational> apply_borel(const BorelConjugator& b, const RatMatrix& a, const Rational& z) {
  RatMatrix m = a * b.mu;
  RatMatrix p = RatMatrix::Identity(2, 2), pinv = RatMatrix::Identity(2, 2);
  p(0, 1) = b.u;
  pinv(0, 1) = -b.u;
  m = p * m * pinv;
  m(0, 1) *= b.t_squared;
  m(1, 0) /= b.t_squared;
  return {m, z * b.mu};
}

std::optional<BorelConjugator> borel_conjugator(const RatMatrix& a, const Rational& z, const RatMatrix& a2,
                                                const Rational& z2) {
  if (a(1, 0).is_zero() || a2(1, 0).is_zero()) return std::nullopt;
  const Rational tr = a(0, 0) + a(1, 1), tr2 = a2(0, 0) + a2(1, 1);
  const Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Rational det2 = a2(0, 0) * a2(1, 1) - a2(0, 1) * a2(1, 0);
  BorelConjugator b;
  if (!z.is_zero()) {
    b.mu = z2 / z;
  } else if (!tr.is_zero()) {
    b.mu = tr2 / tr;
  } else if (!det.is_zero()) {
    if (!exact_sqrt(det2 / det, b.mu)) return std::nullopt;  // scaling needs an irrational factor
  } else {
    b.mu = Rational(1);
  }
  if (b.mu.is_zero()) return std::nullopt;
  b.u = (a2(0, 0) - b.mu * a(0, 0)) / (b.mu * a(1, 0));
  b.t_squared = b.mu * a(1, 0) / a2(1, 0);
  auto [m, zz] = apply_borel(b, a, z);
  if (!(m == a2) || !(zz == z2)) return std::nullopt;
  return b;
}

}  // namespace stabkit
