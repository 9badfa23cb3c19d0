// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
//
// Usage: acceptance <stabkit-cli> <fixtures-dir>

#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fourier_motzkin.hpp"
#include "hm_bruteforce.hpp"
#include "stabkit/corpus.hpp"
#include "stabkit/dense.hpp"
#include "stabkit/lnd.hpp"
#include "stabkit/nrgit.hpp"
#include "stabkit/strata.hpp"

using namespace stabkit;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitBinaryForms = 60;
constexpr double kLimitStrata = 60;
constexpr double kLimitDuality = 300;

std::string g_cli;
std::string g_fixtures;

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit = 0;  // 0: none
};

struct Tally {
  long checked = 0;
  long failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& noun) const {
    Outcome o;
    o.pass = failures == 0;
    o.detail = std::to_string(checked) + " " + noun + ", " + std::to_string(failures) + " failures";
    if (!first.empty()) o.detail += " (first: " + first + ")";
    return o;
  }
};

// --- 1. binary forms -------------------------------------------------------

StabilityClass by_multiplicity(unsigned d, unsigned m) {
  if (2 * m < d) return StabilityClass::Stable;
  if (2 * m == d) return StabilityClass::StrictlySemistable;
  return StabilityClass::Unstable;
}

Outcome binary_forms() {
  Tally t;
  std::mt19937 rng(101);
  const std::vector<Rational> pool{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                   Rational(1, 3), Rational(1), Rational(2)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  long per_class[3] = {0, 0, 0};
  for (unsigned d = 2; d <= 6; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      std::vector<Rational> c(d + 1, Rational(0));
      c[i] = Rational(1);
      // x^{d-i} y^i: root [0:1] of multiplicity d - i and [1:0] of multiplicity i.
      auto got = classify_binary_form(BinaryForm::of(c));
      t.check(got == by_multiplicity(d, std::max(i, d - i)), "monomial d=" + std::to_string(d) + " i=" + std::to_string(i));
    }
    for (int trial = 0; trial < 200; ++trial) {
      unsigned at_infinity = std::uniform_int_distribution<unsigned>(0, d / 2 + 1)(rng) % (d + 1);
      unsigned x_power = std::uniform_int_distribution<unsigned>(0, d - at_infinity)(rng) / 2;
      std::vector<Rational> roots;
      while (roots.size() + at_infinity + x_power < d) roots.push_back(pool[pick(rng)]);
      std::map<Rational, unsigned> mult;
      for (const auto& r : roots) ++mult[r];
      if (x_power > 0) mult[Rational(0)] += x_power;
      unsigned worst = at_infinity;
      for (const auto& [r, m] : mult) worst = std::max(worst, m);
      auto got = classify_binary_form(BinaryForm::from_roots(roots, x_power, at_infinity));
      ++per_class[static_cast<int>(by_multiplicity(d, worst))];
      t.check(got == by_multiplicity(d, worst), "random d=" + std::to_string(d) + " trial " + std::to_string(trial));
    }
  }
  Outcome o = t.outcome("forms");
  o.detail += "; random forms: " + std::to_string(per_class[0]) + " unstable, " + std::to_string(per_class[1]) +
              " strictly semistable, " + std::to_string(per_class[2]) + " stable";
  o.limit = kLimitBinaryForms;
  return o;
}

// --- 2. strata counts ------------------------------------------------------

Outcome strata_counts() {
  Tally t;
  const NormForm q = NormForm::identity(1);
  const auto flip = WeylGroup::sign(1);
  for (long d = 2; d <= 6; ++d) {
    // Brute force over subsets of {2i - d}: a one-sided subset has its
    // closest point at its weight of least absolute value.
    std::vector<long> w;
    for (long i = 0; i <= d; ++i) w.push_back(2 * i - d);
    std::set<long> oracle_m;
    for (unsigned mask = 1; mask < (1u << w.size()); ++mask) {
      bool pos = true, neg = true;
      long least = 1000;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        pos = pos && w[i] > 0;
        neg = neg && w[i] < 0;
        least = std::min(least, std::labs(w[i]));
      }
      if (pos || neg) oracle_m.insert(least);
    }
    std::set<long> closed_form;
    for (long r = d / 2 + 1; r <= d; ++r) closed_form.insert(2 * r - d);

    auto indices = enumerate_indices(binary_form_torus(static_cast<unsigned>(d)), q, flip);
    std::set<long> lib_m;
    bool exact = true;
    for (const auto& idx : indices) {
      auto m = idx.m_rational();
      if (!m || !m->is_integer()) {
        exact = false;
        continue;
      }
      lib_m.insert(-m->numerator().to_int64());
    }
    const std::string tag = "d=" + std::to_string(d);
    t.check(exact, tag + " irrational m");
    t.check(indices.size() == static_cast<std::size_t>((d + 1) / 2), tag + " count " + std::to_string(indices.size()));
    t.check(lib_m == oracle_m, tag + " library vs brute force");
    t.check(oracle_m == closed_form, tag + " brute force vs closed form");
  }
  Outcome o = t.outcome("checks over d = 2..6");
  o.limit = kLimitStrata;
  return o;
}

// --- 3. invariant rings ----------------------------------------------------

Polynomial P(const char* s, std::size_t n) { return Polynomial::parse(s, n); }

std::size_t rank_of_columns(const std::vector<Polynomial>& polys) {
  std::map<Exponent, Eigen::Index, GrlexGreater> rows;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
  Eigen::Index r = 0;
  for (auto& [m, i] : rows) i = r++;
  if (r == 0) return 0;
  RatMatrix a = RatMatrix::Zero(r, static_cast<Eigen::Index>(polys.size()));
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const auto& [m, c] : polys[j].terms()) a(rows.at(m), static_cast<Eigen::Index>(j)) = c;
  return static_cast<std::size_t>(rank(a));
}

// Span of products of generators of total degree <= k.
std::size_t subalgebra_dimension(const std::vector<Polynomial>& gens, std::size_t n, unsigned k) {
  std::vector<Polynomial> span;
  for (const auto& e : exponents_up_to_degree(gens.size(), k)) {
    Polynomial p = Polynomial::constant(n, Rational(1));
    for (std::size_t i = 0; i < gens.size(); ++i) p *= gens[i].pow(e[i]);
    if (p.total_degree() <= static_cast<int>(k)) span.push_back(p);
  }
  return rank_of_columns(span);
}

// Dimension of the common kernel of several derivations on polynomials of degree <= k.
std::size_t joint_kernel_dimension(const std::vector<Derivation>& ds, std::size_t n, unsigned k) {
  auto basis = exponents_up_to_degree(n, k);
  std::map<Exponent, Eigen::Index, GrlexGreater> rows;
  std::vector<std::vector<Polynomial>> images(ds.size());
  for (std::size_t j = 0; j < ds.size(); ++j)
    for (const auto& e : basis) images[j].push_back(apply(ds[j], Polynomial::monomial(n, e)));
  for (const auto& im : images)
    for (const auto& p : im)
      for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
  Eigen::Index r = 0;
  for (auto& [m, i] : rows) i = r++;
  const Eigen::Index height = r * static_cast<Eigen::Index>(ds.size());
  if (height == 0) return basis.size();
  RatMatrix a = RatMatrix::Zero(height, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < ds.size(); ++j)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& [m, c] : images[j][b].terms())
        a(static_cast<Eigen::Index>(j) * r + rows.at(m), static_cast<Eigen::Index>(b)) = c;
  return basis.size() - static_cast<std::size_t>(rank(a));
}

long isqrt_exact(long v) {
  if (v < 0) return -1;
  long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s * s == v ? s : -1;
}

// Jordan data of an integer 2x2 matrix: the semisimple part as a sorted pair
// of rational eigenvalues, or (tr/2, disc/4) tagged irrational.
struct JordanData {
  bool irrational = false;
  Rational a, b;
  bool block = false;
};

JordanData jordan(long a11, long a12, long a21, long a22) {
  long tr = a11 + a22, det = a11 * a22 - a12 * a21, disc = tr * tr - 4 * det;
  JordanData j;
  long s = isqrt_exact(disc);
  if (s < 0) {
    j.irrational = true;
    j.a = Rational(tr, 2);
    j.b = Rational(disc, 4);
    return j;
  }
  j.a = Rational(tr - s, 2);
  j.b = Rational(tr + s, 2);
  j.block = s == 0 && !(a12 == 0 && a21 == 0 && a11 == a22);
  return j;
}

// Closures meet exactly when the semisimple parts agree.
bool jordan_closures_meet(const JordanData& x, const JordanData& y) {
  return x.irrational == y.irrational && x.a == y.a && x.b == y.b;
}

Outcome invariant_rings() {
  Tally t;
  // 𝔾ₘ with weights 1, -1: invariants k[xy], seen both as the weight-zero
  // monoid and as the kernel of the Euler-type derivation x d/dx - y d/dy.
  auto gm = TorusAction::affine({lattice_vector({1}), lattice_vector({-1})}, lattice_vector({0}));
  auto hb = hilbert_basis_kernel(gm, 6);
  t.check(hb.complete && hb.elements == std::vector<Exponent>{Exponent{1, 1}}, "k[xy] Hilbert basis");
  Derivation euler({P("x1", 2), P("-x2", 2)});
  t.check(invariant_test(euler, P("x1*x2", 2)), "xy invariant");
  for (unsigned k = 0; k <= 4; ++k) {
    const auto expect = subalgebra_dimension({P("x1*x2", 2)}, 2, k);
    t.check(kernel_dimension_by_degree(euler, k) == expect, "k[xy] kernel degree " + std::to_string(k));
    t.check(semi_invariant_monomials(gm, 0, k).size() == expect, "k[xy] monomials degree " + std::to_string(k));
  }

  // GL2 conjugation on (x1, x2, x3, x4) = (a11, a12, a21, a22): the two
  // nilpotent directions [E12, -] and [E21, -] generate sl2.
  Derivation e12({P("x3", 4), P("x4 - x1", 4), P("0", 4), P("-x3", 4)});
  Derivation e21({P("-x2", 4), P("0", 4), P("x1 - x4", 4), P("x2", 4)});
  std::vector<Polynomial> trdet{P("x1 + x4", 4), P("x1*x4 - x2*x3", 4)};
  for (const auto* d : {&e12, &e21}) {
    t.check(verify_locally_nilpotent(*d, 6).nilpotent, "sl2 direction nilpotent");
    for (const auto& g : trdet) t.check(invariant_test(*d, g), "tr/det invariant");
  }
  for (unsigned k = 0; k <= 4; ++k)
    t.check(joint_kernel_dimension({e12, e21}, 4, k) == subalgebra_dimension(trdet, 4, k),
            "k[tr,det] degree " + std::to_string(k));

  std::mt19937 rng(303);
  std::uniform_int_distribution<long> c(-4, 4);
  auto mat = [](long a, long b, long cc, long d) {
    RatMatrix m(2, 2);
    m << Rational(a), Rational(b), Rational(cc), Rational(d);
    return m;
  };
  for (int trial = 0; trial < 500; ++trial) {
    long a[4] = {c(rng), c(rng), c(rng), c(rng)};
    long b[4] = {c(rng), c(rng), c(rng), c(rng)};
    const long tr = a[0] + a[3], det = a[0] * a[3] - a[1] * a[2];
    switch (trial % 4) {
      case 1: {  // companion matrix of the same characteristic polynomial
        long comp[4] = {0, -det, 1, tr};
        std::copy(comp, comp + 4, b);
        break;
      }
      case 2: {  // integer unipotent conjugate [[1,k],[0,1]] A [[1,-k],[0,1]]
        long k = c(rng);
        long m11 = a[0] + k * a[2], m12 = a[1] + k * a[3], m21 = a[2], m22 = a[3];
        long conj[4] = {m11, m12 - k * m11, m21, m22 - k * m21};
        std::copy(conj, conj + 4, b);
        break;
      }
      case 3: {  // scalar versus Jordan block
        long lam = c(rng);
        long s[4] = {lam, 0, 0, lam}, blk[4] = {lam, trial % 8 == 3 ? 1 : 0, 0, lam};
        std::copy(s, s + 4, a);
        std::copy(blk, blk + 4, b);
        break;
      }
      default:
        break;
    }
    const bool lib = gl2_orbit_closure_equal(mat(a[0], a[1], a[2], a[3]), mat(b[0], b[1], b[2], b[3]));
    const bool ref = jordan_closures_meet(jordan(a[0], a[1], a[2], a[3]), jordan(b[0], b[1], b[2], b[3]));
    t.check(lib == ref, "GL2 pair " + std::to_string(trial));
  }

  Derivation sym2({P("2*x2", 3), P("x3", 3), P("0", 3)});
  Derivation a4({P("x2", 4), P("0", 4), P("x4", 4), P("0", 4)});
  std::vector<Polynomial> sym_gens{P("x3", 3), P("x2^2 - x1*x3", 3)};
  std::vector<Polynomial> a4_gens{P("x2", 4), P("x4", 4), P("x1*x4 - x2*x3", 4)};
  for (const auto& g : sym_gens) t.check(invariant_test(sym2, g), "Sym2 generator");
  for (const auto& g : a4_gens) t.check(invariant_test(a4, g), "A4 generator");
  for (unsigned k = 0; k <= 4; ++k) {
    t.check(kernel_dimension_by_degree(sym2, k) == subalgebra_dimension(sym_gens, 3, k), "Sym2 degree " + std::to_string(k));
    t.check(kernel_dimension_by_degree(a4, k) == subalgebra_dimension(a4_gens, 4, k), "A4 degree " + std::to_string(k));
  }
  return t.outcome("checks");
}

// --- 4. Grassmannian -------------------------------------------------------

Rational det_cofactor(const RatMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Rational sum(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index k = 0, col = 0; k < n; ++k)
        if (k != j) minor(i - 1, col++) = m(i, k);
    Rational term = m(0, j) * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

// Full row rank iff some r x r minor is nonzero.
bool full_row_rank_by_minors(const RatMatrix& a) {
  const Eigen::Index r = a.rows(), n = a.cols();
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(r));
  std::function<bool(Eigen::Index, Eigen::Index)> rec = [&](Eigen::Index start, Eigen::Index depth) {
    if (depth == r) {
      RatMatrix m(r, r);
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) m(i, j) = a(i, cols[static_cast<std::size_t>(j)]);
      return !det_cofactor(m).is_zero();
    }
    for (Eigen::Index c = start; c < n; ++c) {
      cols[static_cast<std::size_t>(depth)] = c;
      if (rec(c + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

Outcome grassmannian() {
  Tally t;
  std::mt19937 rng(404);
  std::uniform_int_distribution<long> c(-2, 2), den(1, 3);
  long unstable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index r = 1 + trial % 3;
    const Eigen::Index n = r + std::uniform_int_distribution<Eigen::Index>(0, 5 - r)(rng);
    RatMatrix a(r, n);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(c(rng), den(rng));
    if (trial % 3 == 0) {
      // Make the last row a combination of the others (zero when r = 1).
      RatVector row = RatVector::Zero(n);
      for (Eigen::Index i = 0; i + 1 < r; ++i) row += a.row(i).transpose() * Rational(c(rng));
      a.row(r - 1) = row.transpose();
    }
    const std::string tag = "trial " + std::to_string(trial);
    auto res = grassmann_semistable(a);
    t.check(res.semistable == full_row_rank_by_minors(a), tag + " rank");
    if (res.semistable) continue;
    ++unstable;
    if (!res.basis_change || !res.destabilizer) {
      t.check(false, tag + " missing certificate");
      continue;
    }
    t.check(!det_cofactor(*res.basis_change).is_zero(), tag + " basis change singular");
    RatMatrix ga = *res.basis_change * a;
    auto cert = affine_char_test(grassmann_torus(r, n), matrix_support(ga), *res.destabilizer);
    t.check(cert.limit_exists && cert.pairing.sign() < 0, tag + " destabilizer");
  }
  Outcome o = t.outcome("checks");
  o.detail += ", " + std::to_string(unstable) + " destabilizers certified";
  return o;
}

// --- 5. Hilbert-Mumford duality ---------------------------------------------

template <class F>
void for_each_combination(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    f(idx);
    int pos = k;
    while (pos > 0 && idx[static_cast<std::size_t>(pos - 1)] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[static_cast<std::size_t>(pos - 1)];
    for (int i = pos; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

// Every support pattern of an action with n <= 5 coordinates has a weight
// set of at most 5 distinct weights, and classification depends on that set
// alone, so enumerating all such sets covers every (action, support) pair.
Outcome hm_duality() {
  std::atomic<long> checked{0}, skipped{0}, mismatches{0};
  std::mutex first_mutex;
  std::string first;
  for (std::size_t r = 1; r <= 2; ++r) {
    const int side = 7;
    const int cells = r == 1 ? side : side * side;
    const auto box = oracle::primitive_box(r, 5);
    auto point = [&](int cell) {
      std::vector<long> p;
      if (r == 1) p = {cell - 3};
      else p = {cell / side - 3, cell % side - 3};
      return p;
    };
    for (int k = 1; k <= 5; ++k) {
      // Split on the first chosen cell across workers.
      const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
      std::atomic<int> next{0};
      auto work = [&] {
        for (int lead; (lead = next++) < cells;) {
          if (k - 1 > cells - lead - 1) continue;
          for_each_combination(cells - lead - 1, k - 1, [&](const std::vector<int>& rest) {
            std::vector<int> chosen{lead};
            for (int x : rest) chosen.push_back(lead + 1 + x);
            std::vector<LatticeVector> weights;
            std::vector<std::vector<long>> raw;
            for (int cell : chosen) {
              raw.push_back(point(cell));
              LatticeVector w(static_cast<Eigen::Index>(r));
              for (std::size_t i = 0; i < r; ++i) w(static_cast<Eigen::Index>(i)) = Integer(raw.back()[i]);
              weights.push_back(w);
            }
            std::vector<std::size_t> all(weights.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            auto action = TorusAction::projective(weights);
            const StabilityClass lib = classify_projective(action, PointSupport::of(all));
            if (lib == StabilityClass::Unstable) {
              auto lambda = primitive_ray(min_norm_point(weights, NormForm::identity(static_cast<Eigen::Index>(r))),
                                          NormForm::identity(static_cast<Eigen::Index>(r)));
              bool inside = true;
              for (Eigen::Index i = 0; i < lambda.size(); ++i) inside = inside && abs(lambda(i)) <= Integer(5);
              if (!inside) {
                ++skipped;
                return;
              }
            }
            const auto signs = oracle::hm_signs(raw, box);
            const StabilityClass brute = !signs.all_nonnegative ? StabilityClass::Unstable
                                         : signs.all_positive   ? StabilityClass::Stable
                                                                : StabilityClass::StrictlySemistable;
            ++checked;
            if (brute != lib && mismatches++ == 0) {
              std::lock_guard<std::mutex> lock(first_mutex);
              first = "rank " + std::to_string(r) + " set of " + std::to_string(k);
            }
          });
        }
      };
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }
  Outcome o;
  o.pass = mismatches == 0 && checked > 0;
  o.detail = std::to_string(checked.load()) + " weight sets, " + std::to_string(mismatches.load()) + " mismatches, " +
             std::to_string(skipped.load()) + " with adapted direction outside the box";
  if (!first.empty()) o.detail += " (first: " + first + ")";
  o.limit = kLimitDuality;
  return o;
}

// --- 6. minimum-norm certificates -----------------------------------------

void certify_min_norm(Tally& t, const std::vector<LatticeVector>& pts, const IntMatrix& qm, const std::string& tag) {
  const NormForm norm(qm);
  const RatVector q = min_norm_point(pts, norm);
  RatVector qq = to_rational(qm) * q;
  for (const auto& p : pts) {
    RatVector diff = RatVector(to_rational(p)) - q;
    t.check(dot(qq, diff).sign() >= 0, tag + " optimality");
  }
  // q lies in the hull: 0 is in the hull of the scaled differences p - q.
  Integer l(1);
  for (Eigen::Index i = 0; i < q.size(); ++i) l = lcm(l, q(i).denominator());
  std::vector<std::vector<long>> shifted;
  for (const auto& p : pts) {
    std::vector<long> row;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      Rational v = (Rational(p(i)) - q(i)) * Rational(l);
      row.push_back(v.numerator().to_int64());
    }
    shifted.push_back(row);
  }
  t.check(oracle::classify_origin(shifted) != oracle::Origin::Outside, tag + " membership");
}

Outcome min_norm_certificates() {
  Tally t;
  auto I = [](Eigen::Index r) { return IntMatrix(IntMatrix::Identity(r, r)); };
  const std::vector<std::vector<LatticeVector>> fixtures{
      {lattice_vector({1, 0}), lattice_vector({0, 1}), lattice_vector({-1, -1})},
      {lattice_vector({1, 0}), lattice_vector({-1, 0})},
      {lattice_vector({1, 1}), lattice_vector({2, 0})},
      {lattice_vector({2})},
      {lattice_vector({-1}), lattice_vector({3})},
      {lattice_vector({1, 2}), lattice_vector({2, 1})},
  };
  for (std::size_t i = 0; i < fixtures.size(); ++i)
    certify_min_norm(t, fixtures[i], I(fixtures[i][0].size()), "fixture " + std::to_string(i));
  IntMatrix diag(2, 2);
  diag << Integer(2), Integer(0), Integer(0), Integer(1);
  certify_min_norm(t, {lattice_vector({1, 2})}, diag, "diag fixture");

  std::mt19937 rng(606);
  std::uniform_int_distribution<long> c(-4, 4), small(-1, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index r = 1 + trial % 3;
    const int count = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, 7)(rng));
    std::vector<LatticeVector> pts;
    for (int i = 0; i < count; ++i) {
      LatticeVector v(r);
      for (Eigen::Index j = 0; j < r; ++j) v(j) = Integer(c(rng));
      pts.push_back(v);
    }
    IntMatrix qm = I(r);
    if (trial % 2 == 1) {
      // L^T L + I is positive definite.
      IntMatrix l(r, r);
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) l(i, j) = Integer(small(rng));
      qm = IntMatrix(l.transpose() * l) + I(r);
    }
    certify_min_norm(t, pts, qm, "random " + std::to_string(trial));
  }
  return t.outcome("inequalities and memberships");
}

// --- 7. LND algebra ---------------------------------------------------------

Polynomial random_poly(std::mt19937& rng, std::size_t n, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, static_cast<int>(max_degree));
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent ex(n, 0);
    unsigned budget = static_cast<unsigned>(e(rng));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      unsigned k = std::uniform_int_distribution<unsigned>(0, budget)(rng);
      ex[i] = k;
      budget -= k;
    }
    p.add_term(ex, Rational(c(rng)));
  }
  return p;
}

// D(x_i) involves only x_{i+1}..x_n, and D(x_n) = 1.
Derivation random_triangular(std::mt19937& rng, std::size_t n) {
  std::vector<Polynomial> im;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Polynomial p = random_poly(rng, n - i - 1, 2, 2);
    std::vector<Polynomial> shift;
    for (std::size_t k = 0; k < n - i - 1; ++k) shift.push_back(Polynomial::variable(n, i + 1 + k));
    im.push_back(p.substitute(shift));
  }
  im.push_back(Polynomial::constant(n, Rational(1)));
  return Derivation(im);
}

Outcome lnd_algebra() {
  Tally t;
  std::mt19937 rng(707);
  const Derivation shear({P("x2", 2), P("1", 2)});
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const Derivation d = trial % 10 == 0 ? shear : random_triangular(rng, n);
    const std::size_t nv = d.num_vars();
    const std::string tag = "trial " + std::to_string(trial);
    auto f = random_poly(rng, nv, 4, 4), g = random_poly(rng, nv, 4, 4);

    t.check(apply(d, f * g) == f * apply(d, g) + apply(d, f) * g, tag + " Leibniz");
    t.check(exp_coaction(d, f * g) == exp_coaction(d, f) * exp_coaction(d, g), tag + " exp homomorphism");
    t.check(exp_coaction(d, f + g) == exp_coaction(d, f) + exp_coaction(d, g), tag + " exp additive");

    // exp(vD) followed by exp(uD) is exp((u + v)D), in variables (x, u, v).
    const std::size_t m = nv + 2;
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < nv; ++i) xs.push_back(Polynomial::variable(m, i));
    const Polynomial u = Polynomial::variable(m, nv), v = Polynomial::variable(m, nv + 1);
    auto at_t = [&](const Polynomial& tt) {
      auto images = xs;
      images.push_back(tt);
      return images;
    };
    const Polynomial ef = exp_coaction(d, f);
    std::vector<Polynomial> exp_u;
    for (std::size_t i = 0; i < nv; ++i) exp_u.push_back(exp_coaction(d, Polynomial::variable(nv, i)).substitute(at_t(u)));
    exp_u.push_back(u);
    exp_u.push_back(v);
    t.check(ef.substitute(at_t(v)).substitute(exp_u) == ef.substitute(at_t(u + v)),
            tag + " cocycle");

    auto s = find_slice(d, 2);
    if (!s) {
      t.check(false, tag + " no slice");
      continue;
    }
    t.check(apply(d, *s) == Polynomial::constant(nv, Rational(1)), tag + " slice");
    const auto pf = phi_projection(d, *s, f);
    t.check(phi_projection(d, *s, pf) == pf, tag + " Phi idempotent");
    t.check(apply(d, pf).is_zero(), tag + " D Phi = 0");

    // f = sum_k Phi(D^k f) s^k / k!.
    Polynomial sum(nv), dk = f, sk = Polynomial::constant(nv, Rational(1));
    Rational fact(1);
    for (unsigned k = 0; !dk.is_zero(); ++k) {
      if (k > 0) fact *= Rational(static_cast<long>(k));
      sum += phi_projection(d, *s, dk) * sk * inverse(fact);
      dk = apply(d, dk);
      sk *= *s;
    }
    t.check(sum == f, tag + " slice decomposition");
  }
  return t.outcome("identities");
}

// --- 8. Borel example -------------------------------------------------------

Outcome borel_example() {
  Tally t;
  const auto a = borel_2x2_action();
  const auto md = min_data(a);
  t.check(md.vmin_indices == std::vector<std::size_t>{2}, "Z_min = P(k E21)");
  t.check(check_U0(a).decision == Decision::Holds, "[U]_0");

  std::mt19937 rng(808);
  std::uniform_int_distribution<long> c(-6, 6), pos(1, 5);
  auto mat = [](const Rational& a11, const Rational& a12, const Rational& a21, const Rational& a22) {
    RatMatrix m(2, 2);
    m << a11, a12, a21, a22;
    return m;
  };
  // On the chart [A : 1], the stable set is {a21 != 0}.
  for (int trial = 0; trial < 500; ++trial) {
    Rational a21 = trial % 5 == 0 ? Rational(0) : Rational(c(rng), pos(rng));
    std::vector<Rational> x{Rational(c(rng)), Rational(c(rng)), a21, Rational(c(rng)), Rational(1)};
    const bool expect = !a21.is_zero();
    t.check((uhat_stable_membership(a, x).stable == Decision::Holds) == expect, "stable chart trial " + std::to_string(trial));
    t.check((attracting_membership(a, x) != Attracting::Outside) == expect, "X_min chart trial " + std::to_string(trial));
  }

  for (int trial = 0; trial < 500; ++trial) {
    RatMatrix m = mat(Rational(c(rng)), Rational(c(rng)), Rational(c(rng), pos(rng)), Rational(c(rng)));
    if (m(1, 0).is_zero()) m(1, 0) = Rational(1);
    Rational z(c(rng));
    BorelConjugator b{Rational(pos(rng) * (trial % 2 ? 1 : -1)), Rational(pos(rng), pos(rng)), Rational(c(rng), pos(rng))};
    auto [m2, z2] = apply_borel(b, m, z);
    auto q0 = borel_2x2_quotient(m, z), q2 = borel_2x2_quotient(m2, z2);
    const std::string tag = "trial " + std::to_string(trial);
    t.check(q0.z == q2.z && q0.tr == q2.tr && q0.det == q2.det && q0.swept == q2.swept, tag + " invariance");
    // Unnormalised coordinates move by the weighted scaling (mu, mu, mu^2).
    const Rational tr0 = m(0, 0) + m(1, 1), det0 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Rational tr2 = m2(0, 0) + m2(1, 1), det2 = m2(0, 0) * m2(1, 1) - m2(0, 1) * m2(1, 0);
    t.check(z2 == b.mu * z && tr2 == b.mu * tr0 && det2 == b.mu * b.mu * det0, tag + " weighted scaling");
    auto found = borel_conjugator(m, z, m2, z2);
    if (!found) {
      t.check(false, tag + " no conjugator");
      continue;
    }
    auto [m3, z3] = apply_borel(*found, m, z);
    t.check(m3 == m2 && z3 == z2, tag + " separation");
  }
  return t.outcome("checks");
}

// --- 9. determinism ---------------------------------------------------------

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> commands_for(const std::string& kind) {
  if (kind == "torus_projective") return {"classify", "strata"};
  if (kind == "torus_affine_char") return {"classify", "invariants"};
  if (kind == "lnd") return {"lnd", "invariants"};
  if (kind == "graded_unipotent") return {"nrgit"};
  if (kind == "corpus") return {"corpus"};
  return {"classify"};
}

Outcome determinism() {
  Tally t;
  namespace fs = std::filesystem;
  std::vector<fs::path> specs;
  for (const auto& e : fs::directory_iterator(g_fixtures))
    if (e.is_regular_file() && e.path().extension() == ".json") specs.push_back(e.path());
  std::sort(specs.begin(), specs.end());
  long invocations = 0;
  for (const auto& path : specs) {
    std::ifstream in(path);
    std::string kind;
    try {
      auto doc = nlohmann::json::parse(in);
      if (!doc.is_object()) continue;  // a norm matrix, not a spec
      kind = doc.value("kind", "");
    } catch (const std::exception&) {
      kind = "";
    }
    for (const auto& command : commands_for(kind)) {
      std::vector<std::string> formats{"text", "json"};
      if (command == "strata") formats.push_back("dot");
      for (const auto& format : formats) {
        const std::string args = command + " --input '" + path.string() + "' --format " + format;
        const std::string tag = path.filename().string() + " " + command + " " + format;
        const CliRun first = run_cli(args + " --jobs 1");
        t.check(first.status >= 0 && first.status <= 2, tag + " exit status");
        for (int again = 0; again < 2; ++again) {
          const CliRun r = run_cli(args + " --jobs 1");
          t.check(r.status == first.status && r.out == first.out, tag + " repeat");
        }
        const CliRun par = run_cli(args + " --jobs 4");
        t.check(par.status == first.status && par.out == first.out, tag + " parallel");
        invocations += 4;
      }
    }
  }
  Outcome o = t.outcome("comparisons");
  o.detail += " over " + std::to_string(invocations) + " invocations";
  o.pass = o.pass && invocations > 0;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <stabkit-cli> <fixtures-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"binary forms classified by root multiplicity", binary_forms},
      {"binary form strata counts and m-values", strata_counts},
      {"invariant rings k[xy], k[tr,det], A4, Sym2", invariant_rings},
      {"Grassmannian semistability and destabilizers", grassmannian},
      {"Hilbert-Mumford duality, exhaustive", hm_duality},
      {"minimum-norm optimality certificates", min_norm_certificates},
      {"LND algebra identities", lnd_algebra},
      {"Borel worked example", borel_example},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.limit > 0 && secs > o.limit) {
      o.pass = false;
      o.detail += ", over the " + std::to_string(static_cast<int>(o.limit)) + " s limit";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << " ("
         << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  return failed;
}
