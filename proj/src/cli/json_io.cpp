#include "stabkit/cli/json_io.hpp"

#include <cctype>

namespace stabkit::cli {

SpecError::SpecError(int line, std::string path, const std::string& message)
    : Error(ErrorCode::ParseError, message), line_(line), path_(std::move(path)) {}

namespace {

class Scanner {
 public:
  Scanner(const std::string& text, std::map<std::string, int>& out) : s_(text), out_(out) {}

  void run() {
    skip();
    value("$");
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  std::string string_token() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\') out += s_[i_++];
      out += s_[i_++];
    }
    ++i_;
    return out;
  }

  void value(const std::string& path) {
    out_.emplace(path, line_);
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    if (c == '{') {
      ++i_;
      skip();
      while (i_ < s_.size() && s_[i_] != '}') {
        std::string key = string_token();
        skip();
        ++i_;  // colon
        skip();
        value(path + "." + key);
        skip();
        if (s_[i_] == ',') ++i_;
        skip();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip();
      for (std::size_t k = 0; i_ < s_.size() && s_[i_] != ']'; ++k) {
        value(path + "[" + std::to_string(k) + "]");
        skip();
        if (s_[i_] == ',') ++i_;
        skip();
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' && s_[i_] != ']' &&
             s_[i_] != '}')
        ++i_;
    }
  }

  const std::string& s_;
  std::map<std::string, int>& out_;
  std::size_t i_ = 0;
  int line_ = 1;
};

}  // namespace

Locator::Locator(const std::string& text) { Scanner(text, lines_).run(); }

int Locator::line_of(const std::string& path) const {
  auto it = lines_.find(path);
  return it == lines_.end() ? 0 : it->second;
}

void Node::fail(const std::string& message) const {
  // Missing members have no line of their own; use the closest recorded ancestor.
  std::string p = path_;
  int line = loc_->line_of(p);
  while (line == 0 && !p.empty()) {
    auto cut = p.find_last_of(".[");
    if (cut == std::string::npos) break;
    p = p.substr(0, cut);
    line = loc_->line_of(p);
  }
  throw SpecError(line, path_, message);
}

bool Node::has(const std::string& key) const { return v_->is_object() && v_->contains(key); }

Node Node::at(const std::string& key) const {
  if (!v_->is_object()) fail("expected an object");
  auto it = v_->find(key);
  if (it == v_->end()) Node(*v_, path_ + "." + key, *loc_).fail("missing required field '" + key + "'");
  return Node(*it, path_ + "." + key, *loc_);
}

Node Node::at(std::size_t index) const {
  if (!v_->is_array() || index >= v_->size()) fail("expected an array with at least " + std::to_string(index + 1) + " elements");
  return Node((*v_)[index], path_ + "[" + std::to_string(index) + "]", *loc_);
}

std::vector<Node> Node::items() const {
  if (!v_->is_array()) fail("expected an array");
  std::vector<Node> out;
  for (std::size_t k = 0; k < v_->size(); ++k) out.emplace_back((*v_)[k], path_ + "[" + std::to_string(k) + "]", *loc_);
  return out;
}

std::string Node::as_string() const {
  if (!v_->is_string()) fail("expected a string");
  return v_->get<std::string>();
}

long Node::as_long() const {
  if (!v_->is_number_integer()) fail("expected an integer");
  return v_->get<long>();
}

unsigned Node::as_unsigned() const {
  long v = as_long();
  if (v < 0 || v > 1000000) fail("expected a nonnegative integer");
  return static_cast<unsigned>(v);
}

bool Node::as_bool() const {
  if (!v_->is_boolean()) fail("expected true or false");
  return v_->get<bool>();
}

Rational Node::as_rational() const {
  if (v_->is_number_integer()) return Rational(Integer(v_->get<long long>()));
  if (!v_->is_string()) fail("expected a rational as an integer or a \"p/q\" string");
  try {
    return Rational::parse(v_->get<std::string>());
  } catch (const Error&) {
    fail("malformed rational '" + v_->get<std::string>() + "'");
  }
}

Integer Node::as_integer() const {
  Rational r = as_rational();
  if (!r.is_integer()) fail("expected an integer");
  return r.numerator();
}

std::vector<Rational> Node::as_rational_list() const {
  std::vector<Rational> out;
  for (const auto& n : items()) out.push_back(n.as_rational());
  return out;
}

std::vector<long> Node::as_long_list() const {
  std::vector<long> out;
  for (const auto& n : items()) out.push_back(n.as_long());
  return out;
}

LatticeVector Node::as_lattice_vector() const {
  auto it = items();
  LatticeVector v(static_cast<Eigen::Index>(it.size()));
  for (std::size_t k = 0; k < it.size(); ++k) v(static_cast<Eigen::Index>(k)) = it[k].as_integer();
  return v;
}

RatMatrix Node::as_matrix() const {
  auto rows = items();
  if (rows.empty()) fail("expected a nonempty matrix");
  const std::size_t cols = rows[0].items().size();
  if (cols == 0) fail("expected nonempty matrix rows");
  RatMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto row = rows[i].as_rational_list();
    if (row.size() != cols) rows[i].fail("matrix rows must have equal length");
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
  }
  return m;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Integer& i) {
  if (i.is_small()) return i.small_value();
  return i.to_string();
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(RatVector(m.row(i).transpose())));
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

}  // namespace stabkit::cli
