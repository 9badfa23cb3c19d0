#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/cli/json_io.hpp"
#include "stabkit/lnd.hpp"
#include "stabkit/nrgit.hpp"
#include "stabkit/torus.hpp"

namespace stabkit::cli {

enum class Kind { TorusProjective, TorusAffineChar, Lnd, GradedUnipotent, Corpus };
const char* to_string(Kind k);

// Torus queries.
struct PointQuery {
  PointSupport point;  // coords present when given as "point"
};
struct SemiInvariantQuery {
  unsigned weight_multiple = 0;
};

// LND queries; `op` is one of apply, invariant, exp, phi.
struct PolynomialQuery {
  std::string op;
  Polynomial f;
};
struct FixedPointQuery {
  std::vector<Rational> point;
};
struct HomogeneityQuery {
  std::vector<long> weights;
};
struct KernelDimensionQuery {
  unsigned degree = 0;
};
struct SliceQuery {};

// Graded unipotent queries.
struct GradedPointQuery {
  std::vector<Rational> point;
};
struct BorelQuotientQuery {
  RatMatrix matrix;
  Rational z;
};

// Corpus queries.
struct BinaryFormQuery {
  std::vector<Rational> coeffs;
};
struct GrassmannQuery {
  RatMatrix matrix;
};
struct Gl2PairQuery {
  RatMatrix a, b;
};

using Query = std::variant<PointQuery, SemiInvariantQuery, PolynomialQuery, FixedPointQuery, HomogeneityQuery,
                           KernelDimensionQuery, SliceQuery, GradedPointQuery, BorelQuotientQuery, BinaryFormQuery,
                           GrassmannQuery, Gl2PairQuery>;

struct ActionSpec {
  Kind kind = Kind::TorusProjective;
  std::optional<TorusAction> torus;
  std::optional<Derivation> derivation;
  std::optional<GradedUnipotentAction> graded;
  std::vector<Query> queries;
  std::vector<Json> query_echo;  // each query as written, for reports
};

// Throws SpecError with line and path.
ActionSpec parse_spec(const std::string& text);

// A JSON integer matrix file for --norm.
IntMatrix parse_norm_matrix(const std::string& text);

}  // namespace stabkit::cli
