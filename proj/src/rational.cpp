#include "stabkit/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

using i128 = __int128;
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool in_range(i128 v) { return v <= kMax && v > kMin; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1u : static_cast<std::uint64_t>(v);
}

// gcd of a 128-bit value with a positive 64-bit value.
std::uint64_t gcd_128_64(i128 a, std::uint64_t g) {
  unsigned __int128 ua = a < 0 ? static_cast<unsigned __int128>(-a) : static_cast<unsigned __int128>(a);
  std::uint64_t r = static_cast<std::uint64_t>(ua % g);
  return gcd_u64(r, g);
}

mpz_class mpz_from_i64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Rational::Rational(long v) {
  if (v == kMin) {
    big_ = new mpq_class(mpz_from_i64(v));
  } else {
    num_ = v;
  }
}

Rational::Rational(long long v) : Rational(static_cast<long>(v)) {}

Rational::Rational(const Integer& v) {
  if (v.is_small()) {
    num_ = v.small_value();
  } else {
    big_ = new mpq_class(v.to_mpz());
  }
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_small() && den.is_small()) {
    set_small(num.small_value(), den.small_value());
    return;
  }
  mpq_class q(num.to_mpz(), den.to_mpz());
  q.canonicalize();
  assign_mpq(q);
}

Rational::Rational(const mpq_class& v) { assign_mpq(v); }

void Rational::copy_big(const Rational& o) { big_ = new mpq_class(*o.big_); }

Rational& Rational::assign_slow(const Rational& o) {
  if (this == &o) return *this;
  if (o.big_) {
    if (big_) {
      *big_ = *o.big_;
    } else {
      big_ = new mpq_class(*o.big_);
    }
  } else {
    delete big_;
    big_ = nullptr;
    num_ = o.num_;
    den_ = o.den_;
  }
  return *this;
}

// Reduces num/den (den != 0) and stores inline if it fits; otherwise spills.
bool Rational::set_small(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    delete big_;
    big_ = nullptr;
    num_ = 0;
    den_ = 1;
    return true;
  }
  if (den != 1) {
    unsigned __int128 a = num < 0 ? static_cast<unsigned __int128>(-num) : static_cast<unsigned __int128>(num);
    unsigned __int128 b = static_cast<unsigned __int128>(den);
    while (b) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 1) {
      num /= static_cast<i128>(a);
      den /= static_cast<i128>(a);
    }
  }
  if (in_range(num) && in_range(den)) {
    delete big_;
    big_ = nullptr;
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return true;
  }
  // Build the mpq from 64-bit halves.
  auto to_mpz = [](i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  mpq_class q(to_mpz(num), to_mpz(den));
  assign_mpq(q);
  return false;
}

void Rational::assign_mpq(const mpq_class& v) {
  const mpz_class& n = v.get_num();
  const mpz_class& d = v.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t()) &&
      mpz_get_si(n.get_mpz_t()) != kMin) {
    delete big_;
    big_ = nullptr;
    num_ = mpz_get_si(n.get_mpz_t());
    den_ = mpz_get_si(d.get_mpz_t());
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = new mpq_class(v);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer::parse(s));
  Integer n = Integer::parse(s.substr(0, slash));
  std::string dtext = s.substr(slash + 1);
  if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+')) {
    throw Error(ErrorCode::ParseError, "denominator must be unsigned: '" + std::string(text) + "'");
  }
  Integer d = Integer::parse(dtext);
  if (d.is_zero()) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

Integer Rational::numerator() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(num_)); }

Integer Rational::denominator() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(den_)); }

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i64(num_), mpz_from_i64(den_));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.big_) {
    *r.big_ = -*r.big_;
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Rational& Rational::add_general(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
      set_small(static_cast<i128>(num_) + o.num_, 1);
      return *this;
    }
    std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
    if (g == 1) {
      i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
      i128 d = static_cast<i128>(den_) * o.den_;
      if (n == 0) {
        num_ = 0;
        den_ = 1;
      } else if (in_range(n) && in_range(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
      } else {
        set_small(n, d);
      }
      return *this;
    }
    std::int64_t sg = static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(num_) * (o.den_ / sg) + static_cast<i128>(o.num_) * (den_ / sg);
    if (t == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::uint64_t g2 = gcd_128_64(t, g);
    i128 n = t / static_cast<i128>(g2);
    i128 d = static_cast<i128>(den_ / sg) * (o.den_ / static_cast<std::int64_t>(g2));
    if (in_range(n) && in_range(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      set_small(n, d);
    }
    return *this;
  }
  assign_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::mul_general(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, o.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    std::int64_t g1 = o.den_ == 1 ? 1 : static_cast<std::int64_t>(gcd_u64(abs_u64(num_), static_cast<std::uint64_t>(o.den_)));
    std::int64_t g2 = den_ == 1 ? 1 : static_cast<std::int64_t>(gcd_u64(abs_u64(o.num_), static_cast<std::uint64_t>(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (in_range(n) && in_range(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      set_small(n, d);
    }
    return *this;
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  return *this *= inverse(o);
}

bool Rational::equal_slow(const Rational& a, const Rational& b) noexcept {
  if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
  return false;
}

std::strong_ordering Rational::compare_slow(const Rational& a, const Rational& b) noexcept {
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational inverse(const Rational& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(a.denominator(), a.numerator());
}

Rational pow(const Rational& base, unsigned exp) {
  Rational result(1), b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

bool exact_sqrt(const Rational& a, Rational& root) {
  if (a.sign() < 0) return false;
  mpz_class n = a.numerator().to_mpz(), d = a.denominator().to_mpz();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(Integer(rn), Integer(rd));
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

}  // namespace stabkit
