#include "stabkit/lattice.hpp"

namespace stabkit {

LatticeVector lattice_vector(std::initializer_list<long> entries) {
  LatticeVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = Integer(e);
  return v;
}

LatticeVector primitive_part(const LatticeVector& v) {
  Integer g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g.is_zero()) throw Error(ErrorCode::ZeroVector, "primitive_part of the zero vector");
  if (g.is_one()) return v;
  LatticeVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = divexact(v(i), g);
  return out;
}

LatticeVector clear_denominators(const RatVector& v) {
  Integer l(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, v(i).denominator());
  LatticeVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = divexact(v(i).numerator() * l, v(i).denominator());
  return primitive_part(out);
}

Integer pairing(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ArityMismatch, "pairing of vectors of different rank");
  Integer s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational pairing(const RatVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ArityMismatch, "pairing of vectors of different rank");
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * Rational(b(i));
  return s;
}

namespace {
template <class V>
bool lex_less_impl(const V& a, const V& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}
template <class V>
bool equal_impl(const V& a, const V& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}
template <class V>
std::string to_string_impl(const V& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).to_string();
  }
  return s + ")";
}
}  // namespace

bool lex_less(const LatticeVector& a, const LatticeVector& b) { return lex_less_impl(a, b); }
bool lex_less(const RatVector& a, const RatVector& b) { return lex_less_impl(a, b); }
bool equal(const LatticeVector& a, const LatticeVector& b) { return equal_impl(a, b); }
bool equal(const RatVector& a, const RatVector& b) { return equal_impl(a, b); }
std::string to_string(const LatticeVector& v) { return to_string_impl(v); }
std::string to_string(const RatVector& v) { return to_string_impl(v); }

}  // namespace stabkit
