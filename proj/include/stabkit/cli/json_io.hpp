#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "stabkit/dense.hpp"
#include "stabkit/error.hpp"
#include "stabkit/lattice.hpp"

namespace stabkit::cli {

using Json = nlohmann::ordered_json;

// Input error with the JSON path and 1-based source line (0 when unknown).
class SpecError : public Error {
 public:
  SpecError(int line, std::string path, const std::string& message);
  int line() const { return line_; }
  const std::string& path() const { return path_; }

 private:
  int line_;
  std::string path_;
};

// Source lines of every value in a syntactically valid JSON text, by path
// ("$", "$.weights", "$.queries[0].point").
class Locator {
 public:
  explicit Locator(const std::string& text);
  int line_of(const std::string& path) const;

 private:
  std::map<std::string, int> lines_;
};

// Read-only view of a JSON value that reports errors with its path.
class Node {
 public:
  Node(const Json& value, std::string path, const Locator& locator)
      : v_(&value), path_(std::move(path)), loc_(&locator) {}

  const Json& value() const { return *v_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& message) const;

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;  // required member
  Node at(std::size_t index) const;
  std::vector<Node> items() const;        // array elements

  std::string as_string() const;
  long as_long() const;
  unsigned as_unsigned() const;
  bool as_bool() const;
  // An integer or a "p/q" / "p" string.
  Rational as_rational() const;
  Integer as_integer() const;
  std::vector<Rational> as_rational_list() const;
  std::vector<long> as_long_list() const;
  LatticeVector as_lattice_vector() const;
  // Row-major array of equal-length rows of rationals.
  RatMatrix as_matrix() const;

 private:
  const Json* v_;
  std::string path_;
  const Locator* loc_;
};

Json to_json(const Rational& r);
Json to_json(const Integer& i);
Json to_json(const LatticeVector& v);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const std::vector<Rational>& v);

}  // namespace stabkit::cli
