#pragma once

#include <compare>
#include <cstdint>
#include <climits>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stabkit {

// Arbitrary-precision integer. Values that fit in int64 (excluding INT64_MIN)
// live inline; larger values spill to a heap-allocated mpz_class.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v);
  Integer(long long v);
  explicit Integer(const mpz_class& v);
  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) copy_big(o);
  }
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
  Integer& operator=(const Integer& o) {
    if (!big_ && !o.big_) {
      small_ = o.small_;
      return *this;
    }
    return assign_slow(o);
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this != &o) {
      delete big_;
      small_ = o.small_;
      big_ = o.big_;
      o.big_ = nullptr;
    }
    return *this;
  }
  ~Integer() { delete big_; }

  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return big_ == nullptr; }
  std::int64_t small_value() const noexcept { return small_; }
  bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
  bool is_one() const noexcept { return big_ == nullptr && small_ == 1; }
  int sign() const noexcept;
  mpz_class to_mpz() const;
  std::string to_string() const;
  double to_double() const;
  // Throws std::overflow_error when out of range.
  std::int64_t to_int64() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r) && r != kMinInline) {
      small_ = r;
      return *this;
    }
    return add_slow(o);
  }
  Integer& operator-=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r) && r != kMinInline) {
      small_ = r;
      return *this;
    }
    return sub_slow(o);
  }
  Integer& operator*=(const Integer& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r) && r != kMinInline) {
      small_ = r;
      return *this;
    }
    return mul_slow(o);
  }
  // Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return equal_slow(a, b);
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    return compare_slow(a, b);
  }

 private:
  static constexpr std::int64_t kMinInline = INT64_MIN;
  void assign_mpz(const mpz_class& v);
  void copy_big(const Integer& o);
  Integer& assign_slow(const Integer& o);
  Integer& add_slow(const Integer& o);
  Integer& sub_slow(const Integer& o);
  Integer& mul_slow(const Integer& o);
  static bool equal_slow(const Integer& a, const Integer& b) noexcept;
  static std::strong_ordering compare_slow(const Integer& a, const Integer& b) noexcept;

  std::int64_t small_ = 0;
  mpz_class* big_ = nullptr;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// a / b where b is known to divide a.
Integer divexact(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned exp);
std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace stabkit
