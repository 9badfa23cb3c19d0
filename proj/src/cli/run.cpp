#include <atomic>
#include <functional>
#include <thread>

#include "stabkit/cli/report.hpp"
#include "stabkit/corpus.hpp"
#include "stabkit/strata.hpp"

namespace stabkit::cli {

const char* to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Strata: return "strata";
    case Command::Invariants: return "invariants";
    case Command::Lnd: return "lnd";
    case Command::Nrgit: return "nrgit";
    case Command::Corpus: return "corpus";
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (Command c : {Command::Classify, Command::Strata, Command::Invariants, Command::Lnd, Command::Nrgit, Command::Corpus})
    if (name == to_string(c)) return c;
  throw SpecError(0, "", "unknown command '" + name + "'");
}

bool Report::has_query_error() const {
  if (!doc.contains("results")) return false;
  for (const auto& r : doc["results"])
    if (r.contains("error")) return true;
  return false;
}

namespace {

Json error_json(ErrorCode code, const std::string& message) {
  Json e;
  e["code"] = std::string(error_code_name(code));
  e["message"] = message;
  return e;
}

Json support_json(const std::vector<std::size_t>& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i);
  return out;
}

Json weights_json(const std::vector<LatticeVector>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

Json exponent_json(const Exponent& e) {
  Json out = Json::array();
  for (unsigned v : e) out.push_back(v);
  return out;
}

Json index_json(const StratumIndex& idx) {
  Json j;
  j["lambda"] = to_json(idx.lambda);
  j["m"] = idx.m_string();
  j["m_squared"] = to_json(idx.m_squared);
  j["q"] = to_json(idx.q);
  return j;
}

std::string class_name(StabilityClass c) { return to_string(c); }

bool accepts(Command c, Kind k) {
  switch (c) {
    case Command::Classify: return k == Kind::TorusProjective || k == Kind::TorusAffineChar || k == Kind::Corpus;
    case Command::Strata: return k == Kind::TorusProjective;
    case Command::Invariants: return k == Kind::TorusProjective || k == Kind::TorusAffineChar || k == Kind::Lnd;
    case Command::Lnd: return k == Kind::Lnd;
    case Command::Nrgit: return k == Kind::GradedUnipotent;
    case Command::Corpus: return k == Kind::Corpus;
  }
  return false;
}

[[noreturn]] void unsupported(const char* what) {
  throw Error(ErrorCode::UnsupportedQuery, std::string(what) + " queries are not answered by this command");
}

class Runner {
 public:
  Runner(const ActionSpec& spec, const RunOptions& opt) : spec_(spec), opt_(opt) {
    if (spec.torus) {
      norm_ = opt.norm ? NormForm(*opt.norm) : NormForm::identity(spec.torus->rank);
      if (norm_->rank() != spec.torus->rank) throw Error(ErrorCode::ArityMismatch, "norm size differs from torus rank");
      if (opt.weyl == "sym") weyl_ = WeylGroup::symmetric(spec.torus->rank);
      else if (opt.weyl == "sign") weyl_ = WeylGroup::sign(spec.torus->rank);
      if (weyl_) {
        weyl_->check_invariant(*norm_);
        weyl_->check_invariant(*spec.torus);
      }
    }
  }

  Json summary() const {
    Json s = Json::object();
    if (spec_.torus) {
      const TorusAction& a = *spec_.torus;
      s["rank"] = a.rank;
      s["num_coordinates"] = a.size();
      if (a.ambient == Ambient::Projective) s["scale"] = to_json(a.scale);
      else s["rho"] = to_json(a.rho);
    }
    switch (opt_.command) {
      case Command::Strata: strata_summary(s); break;
      case Command::Invariants:
        if (spec_.derivation) lnd_invariants_summary(s);
        else torus_invariants_summary(s);
        break;
      case Command::Lnd: {
        s["num_vars"] = spec_.derivation->num_vars();
        nilpotency_summary(s);
        break;
      }
      case Command::Nrgit: nrgit_summary(s); break;
      default: break;
    }
    return s;
  }

  Json answer(const Query& q) const {
    return std::visit([&](const auto& v) { return answer_one(v); }, q);
  }

 private:
  void strata_summary(Json& s) const {
    s["norm"] = to_json(RatMatrix(to_rational(norm_->matrix())));
    s["weyl"] = opt_.weyl;
    Json list = Json::array();
    for (const auto& idx : enumerate_indices(*spec_.torus, *norm_, weyl_)) {
      Json j = index_json(idx);
      auto rep = stratum_quotient_report(*spec_.torus, *norm_, idx);
      j["z_coordinates"] = support_json(rep.z_coordinates);
      j["z_weights"] = weights_json(rep.z_weights);
      j["y_coordinates"] = support_json(rep.y_coordinates);
      j["twist_coefficient"] = to_json(rep.twist_coefficient);
      j["twist_character"] = to_json(rep.twist_character);
      j["residual_weights"] = weights_json(rep.residual.weights);
      j["residual_scale"] = to_json(rep.residual.scale);
      list.push_back(j);
    }
    s["indices"] = list;
  }

  void torus_invariants_summary(Json& s) const {
    auto hb = hilbert_basis_kernel(*spec_.torus, opt_.bound);
    Json el = Json::array();
    for (const auto& e : hb.elements) el.push_back(exponent_json(e));
    s["hilbert_basis"] = el;
    s["bound"] = hb.bound;
    s["complete"] = hb.complete;
    s["certifying_bound"] = hb.certifying_bound;
  }

  void nilpotency_summary(Json& s) const {
    auto nil = verify_locally_nilpotent(*spec_.derivation, opt_.bound);
    s["nilpotency_bound"] = opt_.bound;
    s["nilpotent"] = nil.nilpotent;
    if (nil.nilpotent) {
      Json o = Json::array();
      for (unsigned k : nil.orders) o.push_back(k);
      s["orders"] = o;
    }
  }

  void lnd_invariants_summary(Json& s) const {
    const Derivation& d = *spec_.derivation;
    s["num_vars"] = d.num_vars();
    nilpotency_summary(s);
    Json dims = Json::array();
    for (unsigned k = 0; k <= opt_.bound; ++k) dims.push_back(kernel_dimension_by_degree(d, k));
    s["kernel_dimension_by_degree"] = dims;
    if (!s["nilpotent"].get<bool>()) return;
    auto slice = find_slice(d, opt_.bound);
    if (!slice) {
      s["slice"] = nullptr;
      return;
    }
    s["slice"] = slice->to_string();
    Json gens = Json::array();
    for (const auto& g : invariant_generators_via_slice(d, *slice)) gens.push_back(g.to_string());
    s["generators_via_slice"] = gens;
  }

  void nrgit_summary(Json& s) const {
    const GradedUnipotentAction& a = *spec_.graded;
    s["dimension"] = a.size();
    s["generators"] = a.nilpotents.size();
    auto md = min_data(a);
    Json m;
    m["omega_min"] = to_json(md.omega_min);
    m["vmin_indices"] = support_json(md.vmin_indices);
    m["omega_next"] = md.omega_next ? to_json(*md.omega_next) : Json(nullptr);
    s["min_data"] = m;
    if (md.omega_next) {
      auto iv = adapted_twist_interval(a);
      s["adapted_interval"] = Json::array({to_json(iv.lo), to_json(iv.hi)});
      Rational chi = well_adapted_choice(iv, opt_.epsilon);
      s["epsilon"] = to_json(opt_.epsilon);
      s["well_adapted_chi"] = to_json(chi);
      s["twisted_weights"] = to_json(twisted_weights(a, chi));
    } else {
      s["adapted_interval"] = error_json(ErrorCode::NoPositivePart, "all weights are equal");
    }
    auto u0 = check_U0(a);
    Json c;
    c["decision"] = to_string(u0.decision);
    c["exact"] = u0.exact;
    if (u0.witness) c["witness"] = to_json(*u0.witness);
    s["check_U0"] = c;
    if (a.residual_torus) {
      auto r0 = check_R0(a);
      Json r;
      r["decision"] = to_string(r0.decision);
      if (r0.witness) r["witness"] = to_json(*r0.witness);
      s["check_R0"] = r;
    }
  }

  // Torus points.
  Json answer_one(const PointQuery& q) const {
    const TorusAction& a = *spec_.torus;
    Json j;
    j["support"] = support_json(q.point.support);
    j["weight_set"] = weights_json(weight_set(a, q.point));
    switch (opt_.command) {
      case Command::Classify:
        if (a.ambient == Ambient::Projective) {
          auto c = classify_projective_certified(a, q.point);
          j["class"] = class_name(c.cls);
          if (c.destabilizer) {
            j["destabilizer"] = to_json(*c.destabilizer);
            j["hm_weight"] = to_json(hm_weight(a, q.point, *c.destabilizer));
          }
          j["min_norm_point"] = to_json(min_norm_point(weight_set(a, q.point), NormForm::identity(a.rank)));
        } else {
          auto c = classify_affine_char(a, q.point);
          j["class"] = class_name(c.cls);
          if (c.destabilizer) {
            j["destabilizer"] = to_json(*c.destabilizer);
            j["pairing"] = to_json(affine_char_test(a, q.point, *c.destabilizer).pairing);
          }
        }
        return j;
      case Command::Strata: {
        auto r = stratum_of_point(a, *norm_, q.point);
        if (std::holds_alternative<Semistable>(r)) {
          j["stratum"] = "ss";
          return j;
        }
        StratumIndex idx = std::get<StratumIndex>(r);
        j["stratum"] = index_json(weyl_ ? fold_index(idx, *weyl_) : idx);
        j["adapted_lambda"] = to_json(idx.lambda);
        j["limit_support"] = support_json(limit_point(a, q.point, idx.lambda).support);
        j["blade"] = to_string(blade_membership(a, *norm_, q.point, idx));
        return j;
      }
      default: unsupported("point");
    }
  }

  Json answer_one(const SemiInvariantQuery& q) const {
    if (opt_.command != Command::Invariants) unsupported("semi_invariants");
    Json j;
    j["weight_multiple"] = q.weight_multiple;
    j["bound"] = opt_.bound;
    Json list = Json::array();
    for (const auto& e : semi_invariant_monomials(*spec_.torus, q.weight_multiple, opt_.bound)) list.push_back(exponent_json(e));
    j["monomials"] = list;
    return j;
  }

  // LND.
  Json answer_one(const PolynomialQuery& q) const {
    const Derivation& d = *spec_.derivation;
    Json j;
    j["f"] = q.f.to_string();
    if (q.op == "apply") {
      j["apply"] = apply(d, q.f).to_string();
    } else if (q.op == "invariant") {
      j["invariant"] = invariant_test(d, q.f);
    } else if (q.op == "exp") {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < d.num_vars(); ++i) names.push_back("x" + std::to_string(i + 1));
      names.push_back("t");
      j["exp"] = exp_coaction(d, q.f, opt_.bound).to_string(names);
    } else {
      auto s = find_slice(d, opt_.bound);
      if (!s) throw Error(ErrorCode::NotASlice, "no slice of degree <= bound exists");
      j["slice"] = s->to_string();
      auto phi = phi_projection(d, *s, q.f);
      j["phi"] = phi.to_string();
      j["phi_invariant"] = invariant_test(d, phi);
    }
    return j;
  }

  Json answer_one(const FixedPointQuery& q) const {
    Json j;
    j["point"] = to_json(q.point);
    j["fixed"] = fixed_point_test(*spec_.derivation, q.point);
    return j;
  }

  Json answer_one(const HomogeneityQuery& q) const {
    Json j;
    Json w = Json::array();
    for (long v : q.weights) w.push_back(v);
    j["weights"] = w;
    auto deg = homogeneity_degree(*spec_.derivation, q.weights);
    if (!deg) throw Error(ErrorCode::NotHomogeneous, "derivation is not homogeneous for these weights");
    j["degree"] = *deg;
    return j;
  }

  Json answer_one(const KernelDimensionQuery& q) const {
    Json j;
    j["degree"] = q.degree;
    j["kernel_dimension"] = kernel_dimension_by_degree(*spec_.derivation, q.degree);
    return j;
  }

  Json answer_one(const SliceQuery&) const {
    Json j;
    j["bound"] = opt_.bound;
    auto s = find_slice(*spec_.derivation, opt_.bound);
    j["slice"] = s ? Json(s->to_string()) : Json(nullptr);
    return j;
  }

  // Graded unipotent.
  Json answer_one(const GradedPointQuery& q) const {
    const GradedUnipotentAction& a = *spec_.graded;
    Json j;
    j["point"] = to_json(q.point);
    auto att = attracting_membership(a, q.point);
    j["attracting"] = to_string(att);
    if (att != Attracting::Outside && a.nilpotents.size() == 1) {
      auto sw = u_sweep_membership(a, q.point);
      Json s;
      s["member"] = sw.member;
      Json lands = Json::array(), factors = Json::array();
      for (const auto& l : sw.landing_supports) lands.push_back(support_json(l));
      for (const auto& f : sw.root_factors) factors.push_back(f.is_zero() ? std::string("0") : f.to_string("u"));
      s["landing_supports"] = lands;
      s["root_factors"] = factors;
      j["sweep"] = s;
    }
    auto verdict = [](const StableVerdict& v) {
      Json o;
      o["decision"] = to_string(v.stable);
      o["reason"] = to_string(v.reason);
      return o;
    };
    j["uhat_stable"] = verdict(uhat_stable_membership(a, q.point));
    if (a.residual_torus) j["g_stable"] = verdict(g_stable_membership(a, q.point));
    return j;
  }

  Json answer_one(const BorelQuotientQuery& q) const {
    auto p = borel_2x2_quotient(q.matrix, q.z);
    Json j;
    j["matrix"] = to_json(q.matrix);
    j["z"] = to_json(q.z);
    j["quotient"] = Json::array({to_json(p.z), to_json(p.tr), to_json(p.det)});
    j["swept"] = p.swept;
    return j;
  }

  // Corpus.
  Json answer_one(const BinaryFormQuery& q) const {
    auto f = BinaryForm::of(q.coeffs);
    Json j;
    j["degree"] = f.degree;
    j["coefficients"] = to_json(f.coeffs);
    j["max_multiplicity"] = max_root_multiplicity(f);
    j["class"] = class_name(classify_binary_form(f));
    auto torus = binary_form_torus(f.degree);
    j["torus_class"] = class_name(classify_projective(torus, PointSupport::from_coordinates(f.coeffs)));
    if (auto moved = move_worst_root_to_zero(f)) {
      j["normalised_coefficients"] = to_json(moved->coeffs);
      j["normalised_torus_class"] = class_name(classify_projective(torus, PointSupport::from_coordinates(moved->coeffs)));
    }
    return j;
  }

  Json answer_one(const GrassmannQuery& q) const {
    auto r = grassmann_semistable(q.matrix);
    Json j;
    j["matrix"] = to_json(q.matrix);
    j["semistable"] = r.semistable;
    j["rank"] = rank(q.matrix);
    if (!r.semistable) {
      j["basis_change"] = to_json(*r.basis_change);
      j["destabilizer"] = to_json(*r.destabilizer);
      auto torus = grassmann_torus(q.matrix.rows(), q.matrix.cols());
      auto t = affine_char_test(torus, matrix_support(RatMatrix(*r.basis_change * q.matrix)), *r.destabilizer);
      j["limit_exists"] = t.limit_exists;
      j["pairing"] = to_json(t.pairing);
    }
    return j;
  }

  Json answer_one(const Gl2PairQuery& q) const {
    Json j;
    auto inv = [](const RatMatrix& m) {
      return Json::array({to_json(m.trace()), to_json(Rational(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)))});
    };
    j["invariants_a"] = inv(q.a);
    j["invariants_b"] = inv(q.b);
    j["closures_meet"] = gl2_orbit_closure_equal(q.a, q.b);
    return j;
  }

  const ActionSpec& spec_;
  const RunOptions& opt_;
  std::optional<NormForm> norm_;
  std::optional<WeylGroup> weyl_;
};

Json guarded(const std::function<Json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    Json j;
    j["error"] = error_json(e.code(), e.what());
    return j;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = error_json(ErrorCode::Internal, e.what());
    return j;
  }
}

}  // namespace

Report run(const ActionSpec& spec, const RunOptions& options) {
  if (!accepts(options.command, spec.kind))
    throw SpecError(0, "$.kind",
                    std::string("command '") + to_string(options.command) + "' does not accept kind '" + to_string(spec.kind) + "'");
  if (options.weyl != "none" && options.weyl != "sym" && options.weyl != "sign")
    throw SpecError(0, "--weyl", "expected none, sym or sign");
  const Runner runner(spec, options);
  Report rep;
  rep.doc["command"] = to_string(options.command);
  rep.doc["kind"] = to_string(spec.kind);
  rep.doc["summary"] = runner.summary();

  // Queries are independent; each worker writes only its own slot.
  const std::size_t n = spec.queries.size();
  std::vector<Json> results(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      Json r;
      r["query"] = spec.query_echo[i];
      Json ans = guarded([&] { return runner.answer(spec.queries[i]); });
      for (auto it = ans.begin(); it != ans.end(); ++it) r[it.key()] = it.value();
      results[i] = std::move(r);
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(1u, options.jobs), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  rep.doc["results"] = Json::array();
  for (auto& r : results) rep.doc["results"].push_back(std::move(r));
  return rep;
}

}  // namespace stabkit::cli
