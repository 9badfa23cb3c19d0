#include <doctest.h>

#include <random>

#include "fourier_motzkin.hpp"
#include "stabkit/convex.hpp"

using namespace stabkit;

namespace {

std::vector<LatticeVector> pts(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<LatticeVector> out;
  for (auto p : list) out.push_back(lattice_vector(p));
  return out;
}

RatVector rv(std::initializer_list<const char*> list) {
  RatVector v(static_cast<Eigen::Index>(list.size()));
  Eigen::Index i = 0;
  for (auto s : list) v(i++) = Rational::parse(s);
  return v;
}

IntMatrix diag(std::initializer_list<long> d) {
  Eigen::Index n = static_cast<Eigen::Index>(d.size());
  IntMatrix m = IntMatrix::Constant(n, n, Integer(0));
  Eigen::Index i = 0;
  for (long v : d) {
    m(i, i) = Integer(v);
    ++i;
  }
  return m;
}

oracle::Origin to_oracle(OriginClass c) {
  switch (c) {
    case OriginClass::Outside: return oracle::Origin::Outside;
    case OriginClass::Boundary: return oracle::Origin::Boundary;
    case OriginClass::Interior: return oracle::Origin::Interior;
  }
  return oracle::Origin::Outside;
}

std::vector<std::vector<long>> raw(const std::vector<LatticeVector>& p) {
  std::vector<std::vector<long>> out;
  for (const auto& v : p) {
    std::vector<long> row;
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).to_int64());
    out.push_back(row);
  }
  return out;
}

// Independent check that q lies in conv(P): FM feasibility of sum c p = q, sum c = 1, c >= 0
// after clearing the denominator of q.
bool oracle_in_hull(const std::vector<LatticeVector>& P, const RatVector& q) {
  Integer den(1);
  for (Eigen::Index i = 0; i < q.size(); ++i) den = lcm(den, q(i).denominator());
  const size_t k = P.size(), r = static_cast<size_t>(q.size());
  std::vector<oracle::Row> eqs, ineqs;
  for (size_t i = 0; i < r; ++i) {
    oracle::Row row(k + 1, 0);
    for (size_t j = 0; j < k; ++j) row[j] = (P[j](static_cast<Eigen::Index>(i)) * den).to_int64();
    row[k] = (q(static_cast<Eigen::Index>(i)) * Rational(den)).numerator().to_int64();
    eqs.push_back(row);
  }
  eqs.push_back(oracle::Row(k + 1, 1));
  for (size_t j = 0; j < k; ++j) {
    oracle::Row g(k + 1, 0);
    g[j] = 1;
    ineqs.push_back(g);
  }
  return oracle::fm_feasible(eqs, ineqs, k);
}

}  // namespace

TEST_CASE("classify_origin examples") {
  CHECK(classify_origin(pts({{1, 0}, {0, 1}, {-1, -1}})) == OriginClass::Interior);
  CHECK(classify_origin(pts({{1, 0}, {-1, 0}})) == OriginClass::Boundary);
  CHECK(classify_origin(pts({{1, 1}, {2, 0}})) == OriginClass::Outside);
  CHECK(classify_origin(pts({{0, 0}})) == OriginClass::Boundary);
  CHECK(classify_origin(pts({{-1}, {2}})) == OriginClass::Interior);
  try {
    classify_origin({});
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }
}

TEST_CASE("classify_origin certificates") {
  auto out = classify_origin_certified(pts({{1, 1}, {2, 0}, {3, -1}}));
  REQUIRE(out.cls == OriginClass::Outside);
  for (const auto& p : pts({{1, 1}, {2, 0}, {3, -1}})) CHECK(pairing(p, out.separating).sign() > 0);
  auto in = classify_origin_certified(pts({{1, 0}, {0, 1}, {-1, -1}}));
  REQUIRE(in.cls == OriginClass::Interior);
  for (Eigen::Index i = 0; i < in.convex_weights.size(); ++i) CHECK(in.convex_weights(i).sign() > 0);
}

TEST_CASE("min_norm_point examples") {
  CHECK(equal(min_norm_point(pts({{2}}), NormForm::identity(1)), rv({"2"})));
  CHECK(equal(min_norm_point(pts({{-1}, {3}}), NormForm::identity(1)), rv({"0"})));
  CHECK(equal(min_norm_point(pts({{1, 2}, {2, 1}}), NormForm::identity(2)), rv({"3/2", "3/2"})));
  // Under Q = diag(1, 4) the segment minimiser moves toward the cheap axis.
  NormForm Q(diag({1, 4}));
  RatVector q = min_norm_point(pts({{4, 0}, {0, 1}}), Q);
  CHECK(equal(q, rv({"4/5", "4/5"})));
  CHECK(satisfies_min_norm_certificate(pts({{4, 0}, {0, 1}}), Q, q));
  CHECK_THROWS_AS(min_norm_point({}, NormForm::identity(1)), Error);
}

TEST_CASE("primitive_ray examples and scaling invariance") {
  CHECK(equal(primitive_ray(rv({"3/2", "3/2"}), NormForm::identity(2)), lattice_vector({1, 1})));
  CHECK(equal(primitive_ray(rv({"-2"}), NormForm::identity(1)), lattice_vector({-1})));
  CHECK(equal(primitive_ray(rv({"1", "2"}), NormForm(diag({2, 1}))), lattice_vector({1, 4})));
  try {
    primitive_ray(rv({"0", "0"}), NormForm::identity(2));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9), pos(1, 9);
  NormForm Q(diag({2, 3, 1}));
  for (int i = 0; i < 200; ++i) {
    RatVector q = rv({"0", "0", "0"});
    for (Eigen::Index j = 0; j < 3; ++j) q(j) = Rational(Integer(d(rng)), Integer(pos(rng)));
    if (all_zero(q)) continue;
    Rational c(Integer(pos(rng)), Integer(pos(rng)));
    RatVector cq = q;
    for (Eigen::Index j = 0; j < 3; ++j) cq(j) *= c;
    CHECK(equal(primitive_ray(cq, Q), primitive_ray(q, Q)));
  }
}

TEST_CASE("norm form validation") {
  CHECK_THROWS_AS(NormForm(diag({1, 0})), Error);
  IntMatrix asym = diag({2, 2});
  asym(0, 1) = Integer(1);
  CHECK_THROWS_AS(NormForm{asym}, Error);
  IntMatrix ok = diag({2, 2});
  ok(0, 1) = Integer(1);
  ok(1, 0) = Integer(1);
  CHECK_NOTHROW(NormForm{ok});
  CHECK(NormForm(ok).adjugate().matrix()(0, 1) == Integer(-1));
}

TEST_CASE("min-norm certificate and hull membership on random sets up to rank 3") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> rank_d(1, 3), size_d(1, 8);
    std::uniform_int_distribution<long> coord(-4, 4);
    Eigen::Index r = rank_d(rng);
    int k = size_d(rng);
    std::vector<LatticeVector> P;
    for (int i = 0; i < k; ++i) {
      LatticeVector v(r);
      for (Eigen::Index j = 0; j < r; ++j) v(j) = Integer(coord(rng));
      P.push_back(v);
    }
    IntMatrix Q = diag({1, 1, 1}).topLeftCorner(r, r);
    if (trial % 2) {
      for (Eigen::Index j = 0; j < r; ++j) Q(j, j) = Integer(1 + (trial + j) % 3);
      if (r >= 2) {
        Q(0, 1) = Integer(trial % 3 == 0 ? 1 : 0);
        Q(1, 0) = Q(0, 1);
      }
    }
    NormForm norm(Q);
    RatVector q = min_norm_point(P, norm);
    CHECK(satisfies_min_norm_certificate(P, norm, q));
    CHECK(oracle_in_hull(P, q));
    CHECK((classify_origin(P) == OriginClass::Outside) == !all_zero(q));
  }
}

TEST_CASE("classify_origin agrees with the Fourier-Motzkin oracle on small rank-1 sets") {
  for (unsigned mask = 1; mask < (1u << 7); ++mask) {
    std::vector<LatticeVector> P;
    for (long v = -3; v <= 3; ++v)
      if (mask & (1u << (v + 3))) P.push_back(lattice_vector({v}));
    CHECK(to_oracle(classify_origin(P)) == oracle::classify_origin(raw(P)));
  }
}
