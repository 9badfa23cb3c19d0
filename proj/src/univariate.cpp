#include "stabkit/univariate.hpp"

#include <algorithm>

#include "stabkit/error.hpp"

namespace stabkit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(v));
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational r(0);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return inverse(leading()) * *this;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  Rational inv = inverse(b.leading());
  const auto& bc = b.coeffs();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + bc.size() - 1] * inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      if (!bc[j].is_zero()) rem[k + j] -= q * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "squarefree decomposition of the zero polynomial");
  std::vector<UPoly> out;
  if (f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly a0 = gcd(f, fp);
  UPoly b = divmod(f, a0).first;
  UPoly c = divmod(fp, a0).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

unsigned squarefree_max_multiplicity(const std::vector<Rational>& coeffs, unsigned formal_degree) {
  UPoly f(coeffs);
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "binary form with all coefficients zero");
  if (f.degree() > static_cast<int>(formal_degree))
    throw Error(ErrorCode::BadShape, "dehomogenisation has degree above the formal degree");
  unsigned best = formal_degree - static_cast<unsigned>(f.degree());
  auto parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() > 0) best = std::max(best, static_cast<unsigned>(i + 1));
  return best;
}

}  // namespace stabkit
