#include "stabkit/polynomial.hpp"

#include <cctype>

#include "stabkit/error.hpp"

namespace stabkit {

unsigned total_degree(const Exponent& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

namespace {

void exponents_of_degree(std::size_t n, unsigned d, std::size_t i, Exponent& e, std::vector<Exponent>& out) {
  if (i + 1 == n) {
    e[i] = d;
    out.push_back(e);
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    e[i] = k;
    exponents_of_degree(n, d - k, i + 1, e, out);
  }
  e[i] = 0;
}

}  // namespace

std::vector<Exponent> exponents_up_to_degree(std::size_t n, unsigned max_degree) {
  std::vector<Exponent> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  for (unsigned d = max_degree + 1; d-- > 0;) exponents_of_degree(n, d, 0, e, out);
  return out;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = stabkit::total_degree(a), db = stabkit::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error(ErrorCode::BadIndex, "variable index out of range");
  Exponent e(num_vars, 0);
  e[index] = 1;
  return monomial(num_vars, e);
}

Polynomial Polynomial::monomial(std::size_t num_vars, const Exponent& e, const Rational& c) {
  if (e.size() != num_vars) throw Error(ErrorCode::ArityMismatch, "exponent length differs from variable count");
  Polynomial p(num_vars);
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && stabkit::total_degree(terms_.begin()->first) == 0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(stabkit::total_degree(terms_.begin()->first));
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  if (e.size() != n_) throw Error(ErrorCode::ArityMismatch, "exponent length differs from variable count");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::ArityMismatch, "polynomials over different variable counts");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_, Rational(1)), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= n_) throw Error(ErrorCode::BadIndex, "variable index out of range");
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    --d[index];
    r.add_term(d, c * Rational(static_cast<long>(e[index])));
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != n_) throw Error(ErrorCode::ArityMismatch, "point dimension differs from variable count");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_ && !t.is_zero(); ++i)
      if (e[i]) t *= stabkit::pow(point[i], e[i]);
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != n_) throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
  std::size_t m = images.empty() ? 0 : images[0].num_vars();
  for (const auto& p : images)
    if (p.num_vars() != m) throw Error(ErrorCode::ArityMismatch, "substitution images over different rings");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(n_);
  Polynomial r(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(m, c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(m, Rational(1)));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[e[i]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::with_num_vars(std::size_t num_vars) const {
  if (num_vars < n_) throw Error(ErrorCode::ArityMismatch, "cannot drop variables");
  Polynomial r(num_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(num_vars, 0);
    r.add_term(f, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit_monomial = stabkit::total_degree(e) == 0;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.size() > i ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (unit_monomial) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in polynomial '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }
  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        p *= inverse(d.coefficient(Exponent(n_, 0)));
      } else {
        return p;
      }
    }
  }
  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      std::string d = digits();
      if (d.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }
  Polynomial primary() {
    skip();
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      std::string d = digits();
      std::size_t idx = d.size() > 6 ? 0 : std::stoul(d);
      if (idx < 1 || idx > n_) fail("variable x" + d + " out of range");
      return Polynomial::variable(n_, idx - 1);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return Polynomial::constant(n_, Rational(Integer::parse(digits())));
    }
    fail("expected a number, variable, or '('");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t num_vars) {
  return PolyParser(text, num_vars).parse();
}

}  // namespace stabkit
