#include "stabkit/integer.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits_small(const mpz_class& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return false;
  return mpz_get_si(v.get_mpz_t()) != kMin;
}

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(long v) {
  if (v == kMin) {
    big_ = new mpz_class(mpz_from_int64(v));
  } else {
    small_ = v;
  }
}

Integer::Integer(long long v) : Integer(static_cast<long>(v)) {}

Integer::Integer(const mpz_class& v) { assign_mpz(v); }

void Integer::copy_big(const Integer& o) { big_ = new mpz_class(*o.big_); }

Integer& Integer::assign_slow(const Integer& o) {
  if (this == &o) return *this;
  if (o.big_) {
    if (big_) {
      *big_ = *o.big_;
    } else {
      big_ = new mpz_class(*o.big_);
    }
  } else {
    delete big_;
    big_ = nullptr;
    small_ = o.small_;
  }
  return *this;
}

void Integer::assign_mpz(const mpz_class& v) {
  if (fits_small(v)) {
    delete big_;
    big_ = nullptr;
    small_ = mpz_get_si(v.get_mpz_t());
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = new mpz_class(v);
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return Integer(v);
}

int Integer::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : mpz_from_int64(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

double Integer::to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits");
  return small_;
}

Integer Integer::operator-() const {
  if (!big_) return Integer(-small_);
  return Integer(mpz_class(-*big_));
}

Integer& Integer::add_slow(const Integer& o) {
  assign_mpz(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::sub_slow(const Integer& o) {
  assign_mpz(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::mul_slow(const Integer& o) {
  assign_mpz(to_mpz() * o.to_mpz());
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "integer division by zero");
  if (!big_ && !o.big_) {
    small_ /= o.small_;  // cannot overflow: INT64_MIN is never stored inline
    return *this;
  }
  assign_mpz(to_mpz() / o.to_mpz());
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "integer division by zero");
  if (!big_ && !o.big_) {
    small_ %= o.small_;
    return *this;
  }
  assign_mpz(to_mpz() % o.to_mpz());
  return *this;
}

bool Integer::equal_slow(const Integer& a, const Integer& b) noexcept {
  if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
  return false;  // canonical form: a big value never fits inline
}

std::strong_ordering Integer::compare_slow(const Integer& a, const Integer& b) noexcept {
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    return Integer(static_cast<long>(std::gcd(a.small_value(), b.small_value())));
  }
  mpz_class r;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(r);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "integer division by zero");
  if (a.is_small() && b.is_small()) return Integer(static_cast<long>(a.small_value() / b.small_value()));
  mpz_class r;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(r);
}

Integer pow(const Integer& base, unsigned exp) {
  Integer result(1), b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

}  // namespace stabkit
