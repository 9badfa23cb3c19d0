#include "stabkit/corpus.hpp"

#include "stabkit/dense.hpp"
#include "stabkit/error.hpp"
#include "stabkit/polynomial.hpp"
#include "stabkit/univariate.hpp"

namespace stabkit {

BinaryForm BinaryForm::of(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::BadShape, "a binary form needs d + 1 coefficients");
  BinaryForm f;
  f.degree = static_cast<unsigned>(coeffs.size() - 1);
  f.coeffs = std::move(coeffs);
  return f;
}

BinaryForm BinaryForm::from_roots(const std::vector<Rational>& roots, unsigned x_power, unsigned y_power) {
  // Polynomial in (x, y); coefficients read off by y-degree.
  Polynomial p = Polynomial::variable(2, 0).pow(x_power) * Polynomial::variable(2, 1).pow(y_power);
  for (const auto& r : roots) p *= Polynomial::variable(2, 0) - Polynomial::variable(2, 1) * r;
  const unsigned d = static_cast<unsigned>(roots.size()) + x_power + y_power;
  std::vector<Rational> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = p.coefficient({d - i, i});
  return of(std::move(c));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

// Ascending coefficients of F(x, 1).
std::vector<Rational> dehomogenise(const BinaryForm& f) {
  return std::vector<Rational>(f.coeffs.rbegin(), f.coeffs.rend());
}

}  // namespace

unsigned max_root_multiplicity(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "the zero form has no roots");
  return squarefree_max_multiplicity(dehomogenise(f), f.degree);
}

StabilityClass classify_binary_form(const BinaryForm& f) {
  const unsigned m = max_root_multiplicity(f);
  if (2 * m < f.degree) return StabilityClass::Stable;
  if (2 * m == f.degree) return StabilityClass::StrictlySemistable;
  return StabilityClass::Unstable;
}

TorusAction binary_form_torus(unsigned degree) {
  std::vector<LatticeVector> w;
  for (unsigned i = 0; i <= degree; ++i) w.push_back(lattice_vector({2L * i - static_cast<long>(degree)}));
  return TorusAction::projective(w);
}

std::optional<BinaryForm> move_worst_root_to_zero(const BinaryForm& f) {
  const unsigned m = max_root_multiplicity(f);
  const unsigned d = f.degree;
  UPoly g(dehomogenise(f));
  // Root at [1 : 0] with multiplicity d - deg g: swap x and y.
  if (d - static_cast<unsigned>(g.degree()) == m) return BinaryForm::of(std::vector<Rational>(f.coeffs.rbegin(), f.coeffs.rend()));
  auto parts = squarefree_decomposition(g);
  if (parts.size() < m || parts[m - 1].degree() != 1) return std::nullopt;
  const UPoly& lin = parts[m - 1];
  const Rational r = -lin.coeff(0) / lin.coeff(1);
  // F(x + r y, y).
  Polynomial p(2);
  for (unsigned i = 0; i <= d; ++i)
    if (!f.coeffs[i].is_zero()) p.add_term({d - i, i}, f.coeffs[i]);
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial moved = p.substitute({x + y * r, y});
  std::vector<Rational> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = moved.coefficient({d - i, i});
  return BinaryForm::of(std::move(c));
}

bool gl2_orbit_closure_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw Error(ErrorCode::BadShape, "expected 2x2 matrices");
  return a.trace() == b.trace() && (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) == (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0));
}

TorusAction grassmann_torus(Eigen::Index r, Eigen::Index n) {
  std::vector<LatticeVector> w;
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      LatticeVector e = LatticeVector::Zero(r);
      e(i) = Integer(1);
      w.push_back(e);
    }
  LatticeVector det = LatticeVector::Constant(r, Integer(1));
  return TorusAction::affine(w, det);
}

PointSupport matrix_support(const RatMatrix& a) {
  std::vector<std::size_t> s;
  std::vector<Rational> c;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) {
        s.push_back(static_cast<std::size_t>(i * a.cols() + j));
        c.push_back(a(i, j));
      }
  PointSupport p = PointSupport::of(s);
  p.coords = c;
  return p;
}

GrassmannResult grassmann_semistable(const RatMatrix& a) {
  const Eigen::Index r = a.rows(), n = a.cols();
  if (r == 0 || r > n) throw Error(ErrorCode::BadShape, "expected an r x n matrix with 1 <= r <= n");
  GrassmannResult out;
  if (rank(a) == r) {
    out.semistable = true;
    return out;
  }
  RatMatrix ker = nullspace(RatMatrix(a.transpose()));  // columns span the left kernel
  const Eigen::Index k = ker.cols();
  RatMatrix g(r, r);
  for (Eigen::Index i = 0; i < k; ++i) g.row(i) = ker.col(i).transpose();
  Eigen::Index filled = k;
  for (Eigen::Index e = 0; e < r && filled < r; ++e) {
    g.row(filled) = RatMatrix::Identity(r, r).row(e);
    if (rank(RatMatrix(g.topRows(filled + 1))) == filled + 1) ++filled;
  }
  LatticeVector lambda = LatticeVector::Zero(r);
  for (Eigen::Index i = 0; i < k; ++i) lambda(i) = Integer(-1);
  out.basis_change = g;
  out.destabilizer = lambda;
  return out;
}

}  // namespace stabkit
