#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/rational.hpp"

namespace stabkit {

using Exponent = std::vector<unsigned>;

// Graded lexicographic order, greatest first: higher total degree wins, ties
// broken lexicographically with x1 > x2 > ... .
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

// All exponents in n variables of total degree <= max_degree, descending grlex.
std::vector<Exponent> exponents_up_to_degree(std::size_t n, unsigned max_degree);

// Multivariate polynomial over Q in variables x1..xn. Zero coefficients are
// never stored; iteration follows descending grlex order.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t num_vars = 0) : n_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  // 0-based variable index.
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(std::size_t num_vars, const Exponent& e, const Rational& c = Rational(1));
  // Parses +, -, *, ^, parentheses, rational constants, division by constants,
  // and variables x1..xn.
  static Polynomial parse(std::string_view text, std::size_t num_vars);

  std::size_t num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  // Partial derivative with respect to the 0-based variable index.
  Polynomial derivative(std::size_t index) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Replaces x_i by images[i]; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Same polynomial viewed in a ring with more trailing variables.
  Polynomial with_num_vars(std::size_t num_vars) const;

  // Uses names[i] for variable i when given, otherwise x1..xn.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t n_;
  Terms terms_;
};

}  // namespace stabkit
