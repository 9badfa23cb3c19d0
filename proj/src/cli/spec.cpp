#include "stabkit/cli/spec.hpp"

namespace stabkit::cli {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::TorusProjective: return "torus_projective";
    case Kind::TorusAffineChar: return "torus_affine_char";
    case Kind::Lnd: return "lnd";
    case Kind::GradedUnipotent: return "graded_unipotent";
    case Kind::Corpus: return "corpus";
  }
  return "?";
}

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw SpecError(line, "$", std::string("malformed JSON: ") + e.what());
  }
}

Kind parse_kind(const Node& n) {
  const std::string k = n.as_string();
  if (k == "torus_projective") return Kind::TorusProjective;
  if (k == "torus_affine_char") return Kind::TorusAffineChar;
  if (k == "lnd") return Kind::Lnd;
  if (k == "graded_unipotent") return Kind::GradedUnipotent;
  if (k == "corpus") return Kind::Corpus;
  n.fail("unknown kind '" + k + "'");
}

std::vector<LatticeVector> parse_weights(const Node& n, Eigen::Index rank) {
  std::vector<LatticeVector> out;
  for (const auto& w : n.items()) {
    out.push_back(w.as_lattice_vector());
    if (out.back().size() != rank) w.fail("weight length differs from rank " + std::to_string(rank));
  }
  if (out.empty()) n.fail("at least one weight is required");
  return out;
}

Eigen::Index parse_rank(const Node& n, long min_rank = 1) {
  long r = n.as_long();
  if (r < min_rank || r > 16) n.fail("rank must lie in [" + std::to_string(min_rank) + ", 16]");
  return static_cast<Eigen::Index>(r);
}

TorusAction parse_torus(const Node& root, Kind kind) {
  const Eigen::Index rank = parse_rank(root.at("rank"));
  auto weights = parse_weights(root.at("weights"), rank);
  TorusAction a;
  if (kind == Kind::TorusProjective) {
    Integer scale(1);
    if (root.has("scale")) {
      scale = root.at("scale").as_integer();
      if (scale.sign() <= 0) root.at("scale").fail("scale must be positive");
    }
    a = TorusAction::projective(weights, scale);
  } else {
    LatticeVector rho = LatticeVector::Zero(rank);
    if (root.has("rho")) {
      rho = root.at("rho").as_lattice_vector();
      if (rho.size() != rank) root.at("rho").fail("rho length differs from rank");
    }
    a = TorusAction::affine(weights, rho);
  }
  try {
    a.validate();
  } catch (const Error& e) {
    root.fail(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return a;
}

PointSupport parse_point(const Node& q, std::size_t n) {
  if (q.has("point_support")) {
    std::vector<std::size_t> s;
    for (const auto& i : q.at("point_support").items()) {
      long v = i.as_long();
      if (v < 0 || static_cast<std::size_t>(v) >= n) i.fail("coordinate index out of range [0, " + std::to_string(n) + ")");
      s.push_back(static_cast<std::size_t>(v));
    }
    if (s.empty()) q.at("point_support").fail("support must be nonempty");
    return PointSupport::of(s);
  }
  auto coords = q.at("point").as_rational_list();
  if (coords.size() != n) q.at("point").fail("point length differs from the number of coordinates");
  auto p = PointSupport::from_coordinates(coords);
  if (p.support.empty()) q.at("point").fail("the zero vector is not a point");
  return p;
}

Polynomial parse_poly(const Node& n, std::size_t vars) {
  try {
    return Polynomial::parse(n.as_string(), vars);
  } catch (const Error& e) {
    n.fail(std::string("malformed polynomial: ") + e.what());
  }
}

Query parse_torus_query(const Node& q, const ActionSpec& spec) {
  if (q.has("semi_invariants")) {
    if (spec.kind != Kind::TorusAffineChar) q.fail("semi_invariants needs kind torus_affine_char");
    return SemiInvariantQuery{q.at("semi_invariants").as_unsigned()};
  }
  if (!q.has("point_support") && !q.has("point")) q.fail("expected 'point_support', 'point' or 'semi_invariants'");
  return PointQuery{parse_point(q, spec.torus->size())};
}

Query parse_lnd_query(const Node& q, std::size_t n) {
  for (const char* op : {"apply", "invariant", "exp", "phi"})
    if (q.has(op)) return PolynomialQuery{op, parse_poly(q.at(op), n)};
  if (q.has("fixed_point")) {
    auto p = q.at("fixed_point").as_rational_list();
    if (p.size() != n) q.at("fixed_point").fail("point length differs from the number of variables");
    return FixedPointQuery{p};
  }
  if (q.has("homogeneity")) {
    auto w = q.at("homogeneity").as_long_list();
    if (w.size() != n) q.at("homogeneity").fail("one weight per variable is required");
    return HomogeneityQuery{w};
  }
  if (q.has("kernel_dimension")) return KernelDimensionQuery{q.at("kernel_dimension").as_unsigned()};
  if (q.has("slice")) return SliceQuery{};
  q.fail("expected one of apply, invariant, exp, phi, fixed_point, homogeneity, kernel_dimension, slice");
}

GradedUnipotentAction parse_graded(const Node& root) {
  GradedUnipotentAction a;
  a.gm_weights = root.at("gm_weights").as_long_list();
  const auto n = static_cast<Eigen::Index>(a.gm_weights.size());
  if (n == 0) root.at("gm_weights").fail("at least one weight is required");
  for (const auto& m : root.at("nilpotents").items()) {
    a.nilpotents.push_back(m.as_matrix());
    if (a.nilpotents.back().rows() != n || a.nilpotents.back().cols() != n) m.fail("nilpotent must be n x n");
  }
  a.grading_degrees = root.at("grading_degrees").as_long_list();
  if (root.has("scale")) a.scale = root.at("scale").as_integer();
  if (root.has("residual_torus")) {
    Node r = root.at("residual_torus");
    const Eigen::Index rank = parse_rank(r.at("rank"), 0);
    if (rank == 0) {
      TorusAction trivial;
      trivial.rank = 0;
      trivial.weights = parse_weights(r.at("weights"), 0);
      trivial.ambient = Ambient::Projective;
      a.residual_torus = std::move(trivial);
    } else {
      a.residual_torus = TorusAction::projective(parse_weights(r.at("weights"), rank));
    }
  }
  try {
    a.validate();
  } catch (const Error& e) {
    root.fail(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return a;
}

Query parse_graded_query(const Node& q, std::size_t n) {
  if (q.has("point")) {
    auto p = q.at("point").as_rational_list();
    if (p.size() != n) q.at("point").fail("point length differs from the dimension");
    return GradedPointQuery{p};
  }
  if (q.has("borel_quotient")) {
    Node b = q.at("borel_quotient");
    RatMatrix m = b.at("matrix").as_matrix();
    if (m.rows() != 2 || m.cols() != 2) b.at("matrix").fail("expected a 2x2 matrix");
    return BorelQuotientQuery{m, b.has("z") ? b.at("z").as_rational() : Rational(0)};
  }
  q.fail("expected 'point' or 'borel_quotient'");
}

Query parse_corpus_query(const Node& q) {
  if (q.has("binary_form")) {
    auto c = q.at("binary_form").as_rational_list();
    if (c.empty()) q.at("binary_form").fail("a binary form needs d + 1 coefficients");
    return BinaryFormQuery{c};
  }
  if (q.has("grassmann")) return GrassmannQuery{q.at("grassmann").as_matrix()};
  if (q.has("gl2_pair")) {
    Node p = q.at("gl2_pair");
    RatMatrix a = p.at(0).as_matrix(), b = p.at(1).as_matrix();
    if (a.rows() != 2 || a.cols() != 2) p.at(0).fail("expected a 2x2 matrix");
    if (b.rows() != 2 || b.cols() != 2) p.at(1).fail("expected a 2x2 matrix");
    return Gl2PairQuery{a, b};
  }
  q.fail("expected 'binary_form', 'grassmann' or 'gl2_pair'");
}

}  // namespace

ActionSpec parse_spec(const std::string& text) {
  const Json doc = parse_json(text);
  const Locator loc(text);
  const Node root(doc, "$", loc);
  if (!doc.is_object()) root.fail("expected a JSON object");
  ActionSpec spec;
  spec.kind = parse_kind(root.at("kind"));
  std::size_t lnd_vars = 0;
  switch (spec.kind) {
    case Kind::TorusProjective:
    case Kind::TorusAffineChar:
      spec.torus = parse_torus(root, spec.kind);
      break;
    case Kind::Lnd: {
      lnd_vars = root.at("num_vars").as_unsigned();
      if (lnd_vars == 0) root.at("num_vars").fail("num_vars must be positive");
      std::vector<Polynomial> images;
      for (const auto& im : root.at("images").items()) images.push_back(parse_poly(im, lnd_vars));
      if (images.size() != lnd_vars) root.at("images").fail("one image per variable is required");
      spec.derivation = Derivation(images);
      break;
    }
    case Kind::GradedUnipotent:
      spec.graded = parse_graded(root);
      break;
    case Kind::Corpus:
      break;
  }
  if (root.has("queries")) {
    for (const auto& q : root.at("queries").items()) {
      if (!q.value().is_object()) q.fail("expected a query object");
      switch (spec.kind) {
        case Kind::TorusProjective:
        case Kind::TorusAffineChar: spec.queries.push_back(parse_torus_query(q, spec)); break;
        case Kind::Lnd: spec.queries.push_back(parse_lnd_query(q, lnd_vars)); break;
        case Kind::GradedUnipotent: spec.queries.push_back(parse_graded_query(q, spec.graded->size())); break;
        case Kind::Corpus: spec.queries.push_back(parse_corpus_query(q)); break;
      }
      spec.query_echo.push_back(q.value());
    }
  }
  return spec;
}

IntMatrix parse_norm_matrix(const std::string& text) {
  const Json doc = parse_json(text);
  const Locator loc(text);
  const Node root(doc, "$", loc);
  RatMatrix m = root.as_matrix();
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) root.fail("norm entries must be integers");
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

}  // namespace stabkit::cli
