#pragma once

#include <compare>
#include <climits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "stabkit/integer.hpp"

namespace stabkit {

// Exact rational in lowest terms with positive denominator. Inline int64
// numerator/denominator with 128-bit intermediates; spills to mpq_class.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int v) noexcept : num_(v) {}
  Rational(long v);
  Rational(long long v);
  Rational(const Integer& v);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v);
  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) copy_big(o);
  }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
  Rational& operator=(const Rational& o) {
    if (!big_ && !o.big_) {
      num_ = o.num_;
      den_ = o.den_;
      return *this;
    }
    return assign_slow(o);
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) {
      delete big_;
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_;
      o.big_ = nullptr;
    }
    return *this;
  }
  ~Rational() { delete big_; }

  // Accepts "p", "p/q", and decimal-free signed forms.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept;
  int sign() const noexcept;
  mpq_class to_mpq() const;
  std::string to_string() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r) &&
        r != INT64_MIN) {
      num_ = r;
      return *this;
    }
    return add_general(o);
  }
  Rational& operator-=(const Rational& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_sub_overflow(num_, o.num_, &r) &&
        r != INT64_MIN) {
      num_ = r;
      return *this;
    }
    return add_general(-o);
  }
  Rational& operator*=(const Rational& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &r) &&
        r != INT64_MIN) {
      num_ = r;
      return *this;
    }
    return mul_general(o);
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return equal_slow(a, b);
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      __int128 l = static_cast<__int128>(a.num_) * b.den_;
      __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    return compare_slow(a, b);
  }

 private:
  void copy_big(const Rational& o);
  Rational& assign_slow(const Rational& o);
  Rational& add_general(const Rational& o);
  Rational& mul_general(const Rational& o);
  static bool equal_slow(const Rational& a, const Rational& b) noexcept;
  static std::strong_ordering compare_slow(const Rational& a, const Rational& b) noexcept;
  bool set_small(__int128 num, __int128 den);
  void assign_mpq(const mpq_class& v);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  mpq_class* big_ = nullptr;
};

Rational abs(const Rational& a);
Rational inverse(const Rational& a);
Rational pow(const Rational& base, unsigned exp);
// Returns true and sets root when a is the square of a rational.
bool exact_sqrt(const Rational& a, Rational& root);
std::ostream& operator<<(std::ostream& os, const Rational& a);

}  // namespace stabkit
