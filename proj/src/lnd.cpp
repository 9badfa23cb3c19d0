#include "stabkit/lnd.hpp"

#include <map>

#include "stabkit/dense.hpp"
#include "stabkit/error.hpp"

namespace stabkit {

Derivation::Derivation(std::vector<Polynomial> images) : images_(std::move(images)) {
  for (const auto& p : images_)
    if (p.num_vars() != images_.size())
      throw Error(ErrorCode::ArityMismatch, "derivation images must live in the same ring");
}

Derivation Derivation::zero(std::size_t n) { return Derivation(std::vector<Polynomial>(n, Polynomial(n))); }

Derivation Derivation::partial(std::size_t n, std::size_t index) {
  if (index >= n) throw Error(ErrorCode::BadIndex, "variable index out of range");
  std::vector<Polynomial> im(n, Polynomial(n));
  im[index] = Polynomial::constant(n, Rational(1));
  return Derivation(std::move(im));
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
  if (f.num_vars() != d.num_vars()) throw Error(ErrorCode::ArityMismatch, "polynomial ring differs from derivation ring");
  Polynomial out(d.num_vars());
  for (std::size_t i = 0; i < d.num_vars(); ++i) {
    if (d.image(i).is_zero()) continue;
    Polynomial df = f.derivative(i);
    if (!df.is_zero()) out += df * d.image(i);
  }
  return out;
}

Polynomial apply_power(const Derivation& d, const Polynomial& f, unsigned k) {
  Polynomial g = f;
  for (unsigned i = 0; i < k && !g.is_zero(); ++i) g = apply(d, g);
  return g;
}

NilpotencyResult verify_locally_nilpotent(const Derivation& d, unsigned bound) {
  NilpotencyResult r;
  for (std::size_t i = 0; i < d.num_vars(); ++i) {
    Polynomial g = Polynomial::variable(d.num_vars(), i);
    unsigned k = 0;
    while (!g.is_zero() && k < bound) {
      g = apply(d, g);
      ++k;
    }
    if (!g.is_zero()) return NilpotencyResult{};
    r.orders.push_back(k);
  }
  r.nilpotent = true;
  return r;
}

namespace {

// Upper bound on the least k with D^k(f) = 0: a monomial x^a needs at most
// sum a_i (order_i - 1) + 1 applications.
unsigned series_length(const Polynomial& f, const std::vector<unsigned>& orders) {
  unsigned best = 0;
  for (const auto& [e, c] : f.terms()) {
    unsigned s = 1;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * (orders[i] - 1);
    best = std::max(best, s);
  }
  return best;
}

// The terms D^k(f) / k! for k = 0, 1, ... until the series terminates.
std::vector<Polynomial> exp_terms(const Derivation& d, const Polynomial& f, unsigned bound) {
  if (f.num_vars() != d.num_vars()) throw Error(ErrorCode::ArityMismatch, "polynomial ring differs from derivation ring");
  auto nil = verify_locally_nilpotent(d, bound);
  if (!nil.nilpotent) throw Error(ErrorCode::NotNilpotent, "derivation is not nilpotent on the generators within the bound");
  unsigned len = series_length(f, nil.orders);
  std::vector<Polynomial> out;
  Polynomial g = f;
  Rational fact(1);
  for (unsigned k = 0; !g.is_zero(); ++k) {
    if (k >= len) throw Error(ErrorCode::NotNilpotent, "exponential series did not terminate");
    if (k > 0) fact *= Rational(static_cast<long>(k));
    out.push_back(g * inverse(fact));
    g = apply(d, g);
  }
  return out;
}

void require_slice(const Derivation& d, const Polynomial& s) {
  if (s.num_vars() != d.num_vars() || !(apply(d, s) == Polynomial::constant(d.num_vars(), Rational(1))))
    throw Error(ErrorCode::NotASlice, "D(s) != 1");
}

// Column j holds the coefficients of D(basis[j]) over the rows indexed by monomials.
RatMatrix derivation_matrix(const Derivation& d, const std::vector<Exponent>& basis,
                            std::map<Exponent, Eigen::Index, GrlexGreater>& rows) {
  std::vector<Polynomial> images;
  for (const auto& e : basis) {
    images.push_back(apply(d, Polynomial::monomial(d.num_vars(), e)));
    for (const auto& [m, c] : images.back().terms()) rows.emplace(m, 0);
  }
  Eigen::Index r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  RatMatrix a = RatMatrix::Zero(r, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : images[j].terms()) a(rows.at(m), static_cast<Eigen::Index>(j)) = c;
  return a;
}

}  // namespace

Polynomial exp_coaction(const Derivation& d, const Polynomial& f, unsigned nilpotency_bound) {
  const std::size_t n = d.num_vars();
  Polynomial t = Polynomial::variable(n + 1, n);
  Polynomial out(n + 1), tk = Polynomial::constant(n + 1, Rational(1));
  for (const auto& term : exp_terms(d, f, nilpotency_bound)) {
    out += term.with_num_vars(n + 1) * tk;
    tk *= t;
  }
  return out;
}

bool invariant_test(const Derivation& d, const Polynomial& f) { return apply(d, f).is_zero(); }

std::optional<Polynomial> find_slice(const Derivation& d, unsigned degree_bound) {
  const std::size_t n = d.num_vars();
  Exponent one(n, 0);
  for (unsigned b = 0; b <= degree_bound; ++b) {
    auto basis = exponents_up_to_degree(n, b);
    std::map<Exponent, Eigen::Index, GrlexGreater> rows;
    rows.emplace(one, 0);
    RatMatrix a = derivation_matrix(d, basis, rows);
    RatVector rhs = RatVector::Zero(a.rows());
    rhs(rows.at(one)) = Rational(1);
    auto x = solve_particular(a, rhs);
    if (!x) continue;
    Polynomial s(n);
    for (std::size_t j = 0; j < basis.size(); ++j) s.add_term(basis[j], (*x)(static_cast<Eigen::Index>(j)));
    return s;
  }
  return std::nullopt;
}

Polynomial phi_projection(const Derivation& d, const Polynomial& slice, const Polynomial& f) {
  require_slice(d, slice);
  Polynomial out(d.num_vars()), power = Polynomial::constant(d.num_vars(), Rational(1));
  Polynomial minus_s = -slice;
  for (const auto& term : exp_terms(d, f, 64)) {
    out += term * power;
    power *= minus_s;
  }
  return out;
}

std::vector<Polynomial> invariant_generators_via_slice(const Derivation& d, const Polynomial& slice) {
  require_slice(d, slice);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < d.num_vars(); ++i)
    out.push_back(phi_projection(d, slice, Polynomial::variable(d.num_vars(), i)));
  return out;
}

bool fixed_point_test(const Derivation& d, const std::vector<Rational>& point) {
  if (point.size() != d.num_vars()) throw Error(ErrorCode::ArityMismatch, "point length differs from variable count");
  for (const auto& im : d.images())
    if (!im.evaluate(point).is_zero()) return false;
  return true;
}

std::optional<long> homogeneity_degree(const Derivation& d, const std::vector<long>& weights) {
  if (weights.size() != d.num_vars()) throw Error(ErrorCode::ArityMismatch, "one weight per variable is required");
  std::optional<long> shift;
  for (std::size_t i = 0; i < d.num_vars(); ++i) {
    for (const auto& [e, c] : d.image(i).terms()) {
      long w = 0;
      for (std::size_t k = 0; k < e.size(); ++k) w += weights[k] * static_cast<long>(e[k]);
      long s = w - weights[i];
      if (shift && *shift != s) return std::nullopt;
      shift = s;
    }
  }
  return shift.value_or(0);
}

std::size_t kernel_dimension_by_degree(const Derivation& d, unsigned k) {
  auto basis = exponents_up_to_degree(d.num_vars(), k);
  std::map<Exponent, Eigen::Index, GrlexGreater> rows;
  RatMatrix a = derivation_matrix(d, basis, rows);
  return basis.size() - static_cast<std::size_t>(rank(a));
}

}  // namespace stabkit
