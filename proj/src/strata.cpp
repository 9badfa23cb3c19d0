#include "stabkit/strata.hpp"

#include <algorithm>
#include <map>

namespace stabkit {

std::optional<Rational> StratumIndex::m_rational() const {
  Rational root;
  if (exact_sqrt(m_squared, root)) return -root;
  return std::nullopt;
}

std::string StratumIndex::m_string() const {
  if (auto m = m_rational()) return m->to_string();
  return "-sqrt(" + m_squared.to_string() + ")";
}

bool operator==(const StratumIndex& a, const StratumIndex& b) {
  return a.m_squared == b.m_squared && equal(a.lambda, b.lambda);
}

bool operator<(const StratumIndex& a, const StratumIndex& b) {
  if (a.m_squared != b.m_squared) return a.m_squared < b.m_squared;
  return lex_less(a.lambda, b.lambda);
}

WeylGroup WeylGroup::generated_by(const std::vector<IntMatrix>& generators) {
  if (generators.empty()) throw Error(ErrorCode::BadShape, "Weyl group needs at least one generator");
  const Eigen::Index r = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != r || g.cols() != r) throw Error(ErrorCode::BadShape, "Weyl generators must be square of equal size");
    Rational d = determinant(g);
    if (!(d == Rational(1) || d == Rational(-1))) throw Error(ErrorCode::BadShape, "Weyl generator is not unimodular");
  }
  auto same = [](const IntMatrix& a, const IntMatrix& b) { return a == b; };
  WeylGroup w;
  IntMatrix id = IntMatrix::Identity(r, r);
  w.elements_.push_back(id);
  for (size_t i = 0; i < w.elements_.size(); ++i) {
    for (const auto& g : generators) {
      IntMatrix prod = g * w.elements_[i];
      bool seen = false;
      for (const auto& e : w.elements_) seen = seen || same(e, prod);
      if (!seen) {
        if (w.elements_.size() >= 5040) throw Error(ErrorCode::BadShape, "Weyl group too large");
        w.elements_.push_back(prod);
      }
    }
  }
  return w;
}

WeylGroup WeylGroup::symmetric(Eigen::Index rank) {
  if (rank == 1) return generated_by({IntMatrix::Identity(1, 1)});
  std::vector<IntMatrix> gens;
  for (Eigen::Index i = 0; i + 1 < rank; ++i) {
    IntMatrix s = IntMatrix::Identity(rank, rank);
    s(i, i) = Integer(0);
    s(i + 1, i + 1) = Integer(0);
    s(i, i + 1) = Integer(1);
    s(i + 1, i) = Integer(1);
    gens.push_back(s);
  }
  return generated_by(gens);
}

WeylGroup WeylGroup::sign(Eigen::Index rank) {
  IntMatrix neg = IntMatrix::Identity(rank, rank) * Integer(-1);
  return generated_by({neg});
}

void WeylGroup::check_invariant(const NormForm& norm) const {
  if (norm.rank() != rank()) throw Error(ErrorCode::ArityMismatch, "Weyl group rank differs from norm rank");
  for (const auto& g : elements_)
    if (!(IntMatrix(g.transpose() * norm.matrix() * g) == norm.matrix()))
      throw Error(ErrorCode::NotWeylInvariant, "norm form is not invariant under the Weyl group");
}

void WeylGroup::check_invariant(const TorusAction& action) const {
  if (action.rank != rank()) throw Error(ErrorCode::ArityMismatch, "Weyl group rank differs from torus rank");
  auto sorted_rows = [](const std::vector<LatticeVector>& ws) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& w : ws) rows.emplace_back(w.begin(), w.end());
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  const auto base = sorted_rows(action.weights);
  // The group is closed under inverses, so g^T permuting the weights for
  // every g is the same as g^{-T} doing so.
  for (const auto& g : elements_) {
    std::vector<LatticeVector> moved;
    for (const auto& w : action.weights) moved.push_back(g.transpose() * w);
    if (sorted_rows(moved) != base)
      throw Error(ErrorCode::NotWeylInvariant, "weights are not permuted by the Weyl group");
  }
}

Rational dual_norm2(const RatVector& q, const NormForm& norm) { return dot(q, norm.solve(q)); }

StratumIndex make_index(const RatVector& q, const NormForm& norm) {
  StratumIndex idx;
  idx.lambda = primitive_ray(q, norm);
  idx.m_squared = dual_norm2(q, norm);
  idx.q = q;
  return idx;
}

StratumIndex fold_index(const StratumIndex& index, const WeylGroup& weyl) {
  StratumIndex best = index;
  for (const auto& g : weyl.elements()) {
    LatticeVector l = g * index.lambda;
    if (!lex_less(l, best.lambda)) continue;
    RatMatrix ginv_t = inverse_matrix(g)->transpose();
    best.lambda = l;
    best.q = ginv_t * index.q;
  }
  return best;
}

namespace {

void require_projective(const TorusAction& action) {
  if (action.ambient != Ambient::Projective) throw Error(ErrorCode::WrongAmbient, "strata need a projective action");
}

// Minimum-norm point of a weight set in effective units.
RatVector effective_min_norm(const std::vector<LatticeVector>& ws, const NormForm& norm, const Integer& scale) {
  RatVector q = min_norm_point(ws, norm.adjugate());
  if (!scale.is_one())
    for (Eigen::Index i = 0; i < q.size(); ++i) q(i) /= Rational(scale);
  return q;
}

Rational effective_pairing(const TorusAction& a, std::size_t i, const LatticeVector& lambda) {
  return Rational(pairing(a.weights[i], lambda), a.scale);
}

bool on_z_hyperplane(const Rational& p, const StratumIndex& idx, const NormForm& norm) {
  return p.sign() > 0 && p * p == idx.m_squared * Rational(norm.norm2(idx.lambda));
}

}  // namespace

std::vector<StratumIndex> enumerate_indices(const TorusAction& action, const NormForm& norm,
                                            const std::optional<WeylGroup>& weyl) {
  require_projective(action);
  if (norm.rank() != action.rank) throw Error(ErrorCode::ArityMismatch, "norm rank differs from torus rank");
  if (weyl) {
    weyl->check_invariant(norm);
    weyl->check_invariant(action);
  }
  std::vector<size_t> all(action.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto distinct = weight_set(action, PointSupport::of(all));
  const size_t k = distinct.size();
  if (k > 24) throw Error(ErrorCode::BadShape, "too many distinct weights for subset enumeration");
  std::vector<StratumIndex> out;
  std::vector<LatticeVector> subset;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    subset.clear();
    for (size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) subset.push_back(distinct[i]);
    if (classify_origin(subset) != OriginClass::Outside) continue;
    StratumIndex idx = make_index(effective_min_norm(subset, norm, action.scale), norm);
    if (weyl) idx = fold_index(idx, *weyl);
    if (std::find(out.begin(), out.end(), idx) == out.end()) out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StratumResult stratum_of_point(const TorusAction& action, const NormForm& norm, const PointSupport& x) {
  require_projective(action);
  if (norm.rank() != action.rank) throw Error(ErrorCode::ArityMismatch, "norm rank differs from torus rank");
  RatVector q = effective_min_norm(weight_set(action, x), norm, action.scale);
  if (all_zero(q)) return Semistable{};
  return make_index(q, norm);
}

PointSupport limit_point(const TorusAction& action, const PointSupport& x, const LatticeVector& lambda) {
  require_projective(action);
  if (lambda.size() != action.rank) throw Error(ErrorCode::ArityMismatch, "1-PS length differs from torus rank");
  if (lambda.isZero()) throw Error(ErrorCode::ZeroOneParamSubgroup, "trivial one-parameter subgroup");
  weight_set(action, x);  // validates the support
  Integer lo;
  bool first = true;
  for (size_t i : x.support) {
    Integer p = pairing(action.weights[i], lambda);
    if (first || p < lo) lo = p;
    first = false;
  }
  PointSupport out;
  for (size_t k = 0; k < x.support.size(); ++k) {
    size_t i = x.support[k];
    if (!(pairing(action.weights[i], lambda) == lo)) continue;
    out.support.push_back(i);
    if (!x.coords.empty()) out.coords.push_back(x.coords[k]);
  }
  return out;
}

const char* to_string(BladeMembership b) {
  switch (b) {
    case BladeMembership::InZbeta: return "InZbeta";
    case BladeMembership::InYbeta: return "InYbeta";
    case BladeMembership::Neither: return "Neither";
  }
  return "?";
}

BladeMembership blade_membership(const TorusAction& action, const NormForm& norm, const PointSupport& x,
                                 const StratumIndex& index) {
  if (index.lambda.isZero()) throw Error(ErrorCode::ZeroOneParamSubgroup, "trivial one-parameter subgroup");
  PointSupport lim = limit_point(action, x, index.lambda);
  Rational p = effective_pairing(action, lim.support.front(), index.lambda);
  if (!on_z_hyperplane(p, index, norm)) return BladeMembership::Neither;
  return lim.support.size() == x.support.size() ? BladeMembership::InZbeta : BladeMembership::InYbeta;
}

bool ParabolicBlocks::in_parabolic(const std::vector<long>& l, std::size_t i, std::size_t j) { return l[i] >= l[j]; }
bool ParabolicBlocks::in_levi(const std::vector<long>& l, std::size_t i, std::size_t j) { return l[i] == l[j]; }
bool ParabolicBlocks::in_unipotent_radical(const std::vector<long>& l, std::size_t i, std::size_t j) {
  return l[i] > l[j];
}

ParabolicBlocks parabolic_blocks(const std::vector<long>& lambda_diag) {
  if (lambda_diag.empty()) throw Error(ErrorCode::BadShape, "parabolic blocks need n >= 1");
  std::map<long, std::vector<size_t>, std::greater<long>> groups;
  for (size_t i = 0; i < lambda_diag.size(); ++i) groups[lambda_diag[i]].push_back(i);
  ParabolicBlocks pb;
  for (auto& [w, idx] : groups) {
    pb.weights.push_back(w);
    pb.blocks.push_back(idx);
  }
  return pb;
}

StratumQuotientReport stratum_quotient_report(const TorusAction& action, const NormForm& norm,
                                              const StratumIndex& index) {
  require_projective(action);
  if (index.q.size() != action.rank || index.lambda.size() != action.rank || all_zero(index.q))
    throw Error(ErrorCode::InvalidIndex, "index does not describe an unstable stratum of this action");
  if (!equal(primitive_ray(index.q, norm), index.lambda) || !(dual_norm2(index.q, norm) == index.m_squared))
    throw Error(ErrorCode::InvalidIndex, "index is inconsistent with its witness point");
  StratumQuotientReport rep;
  rep.index = index;
  Rational level = pairing(index.q, index.lambda);
  for (size_t i = 0; i < action.size(); ++i) {
    Rational p = effective_pairing(action, i, index.lambda);
    if (p >= level) rep.y_coordinates.push_back(i);
    if (p == level) {
      rep.z_coordinates.push_back(i);
      bool seen = false;
      for (const auto& w : rep.z_weights) seen = seen || equal(w, action.weights[i]);
      if (!seen) rep.z_weights.push_back(action.weights[i]);
    }
  }
  if (rep.z_coordinates.empty()) throw Error(ErrorCode::InvalidIndex, "no weight lies on the stratum hyperplane");
  // lambda = c Q^{-1} q, and -m / ||lambda|| = 1 / c.
  RatVector dir = norm.solve(index.q);
  Eigen::Index j = 0;
  while (dir(j).is_zero()) ++j;
  rep.twist_coefficient = dir(j) / Rational(index.lambda(j));
  rep.twist_character = index.q;
  std::vector<LatticeVector> zw;
  for (size_t i : rep.z_coordinates) zw.push_back(action.weights[i]);
  rep.residual = twist_by_character(TorusAction::projective(zw, action.scale), index.q);
  return rep;
}

}  // namespace stabkit
