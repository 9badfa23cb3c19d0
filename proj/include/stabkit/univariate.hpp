#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stabkit/rational.hpp"

namespace stabkit {

// Univariate polynomial over Q; coeffs[i] is the coefficient of t^i.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(unsigned degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly derivative() const;
  Rational evaluate(const Rational& t) const;
  UPoly monic() const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

// Yun's algorithm: returns a_1, ..., a_k with f = c * prod a_i^i, each a_i
// monic squarefree and pairwise coprime. Throws ZeroForm on f = 0.
std::vector<UPoly> squarefree_decomposition(const UPoly& f);

// Largest root multiplicity of the binary form of formal degree d whose
// dehomogenisation F(x, 1) has ascending coefficients `coeffs`, counting the
// root at infinity with multiplicity d - deg f.
unsigned squarefree_max_multiplicity(const std::vector<Rational>& coeffs, unsigned formal_degree);

}  // namespace stabkit
