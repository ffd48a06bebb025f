#include "qcvx/report.hpp"

namespace qcvx::report {

Json rational(const Rational& r) { return to_string(r); }

Json decimal(const Rational& r) { return to_double(r); }

Json decimal(const XReal& x) {
  if (!x.is_finite()) return to_string(x);
  return to_double(x.value());
}

void put(Json& obj, const std::string& name, const Rational& r) {
  obj[name] = rational(r);
  obj[name + "_decimal"] = decimal(r);
}

void put(Json& obj, const std::string& name, const XReal& x) {
  obj[name] = to_string(x);
  obj[name + "_decimal"] = decimal(x);
}

namespace {

Json points(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(rational(x));
  return arr;
}

}  // namespace

Json intervals(const OpenIntervalSet& s) {
  Json arr = Json::array();
  for (const auto& iv : s) {
    Json o;
    put(o, "u", iv.u());
    put(o, "v", iv.v());
    arr.push_back(std::move(o));
  }
  return arr;
}

Json closed_set(const ClosedSet1D& s) {
  Json arr = Json::array();
  for (const auto& c : s.components) {
    Json o;
    put(o, "lo", c.lo);
    put(o, "hi", c.hi);
    arr.push_back(std::move(o));
  }
  return arr;
}

Json semicontinuity(const SemicontinuityReport& r) {
  return Json{{"is_lsc", r.is_lsc},
              {"is_usc", r.is_usc},
              {"offending_points_lsc", points(r.offending_points_lsc)},
              {"offending_points_usc", points(r.offending_points_usc)}};
}

Json verdict(const QuasiconvexityVerdict& v) {
  Json o{{"is_quasiconvex", v.is_quasiconvex}};
  if (v.witness_triple) {
    Json w;
    put(w, "x", v.witness_triple->x);
    put(w, "y", v.witness_triple->y);
    put(w, "z", v.witness_triple->z);
    o["witness_triple"] = std::move(w);
  } else {
    o["witness_triple"] = nullptr;
  }
  return o;
}

Json component_checks(const std::vector<ComponentCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json o{{"endpoints_outside_T", c.endpoints_outside_T}, {"interior_strict", c.interior_strict}};
    o["offending_point"] = c.offending_point ? rational(*c.offending_point) : Json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr;
}

Json decomposition(const ViolationDecomposition& d) {
  Json o;
  Json pair;
  put(pair, "x", d.x);
  put(pair, "y", d.y);
  o["pair"] = std::move(pair);
  put(o, "threshold", d.threshold);
  o["component_count"] = d.components.size();
  put(o, "total_length", d.components.total_length());
  o["components"] = intervals(d.components);
  o["per_component_checks"] = component_checks(d.per_component_checks);
  o["isolated_violations"] = points(d.isolated_violations);
  o["lsc_warnings"] = points(d.lsc_warnings);
  return o;
}

Json witness_check(const WitnessCheck& w) {
  Json o{{"holds", w.holds}};
  put(o, "threshold", w.threshold);
  put(o, "infimum", w.infimum);
  o["infimum_attained_interior"] = w.infimum_attained;
  o["witness"] = w.witness ? rational(*w.witness) : Json(nullptr);
  return o;
}

Json convexity_violation(const ConvexityViolation& c) {
  return Json{{"parameterization", "f(t*x + (1-t)*y) > t*f(x) + (1-t)*f(y)"},
              {"t_components", intervals(c.t_components)},
              {"isolated_t", points(c.isolated_t)},
              {"per_component_checks", component_checks(c.per_component_checks)}};
}

Json local_maximum(const LocalMaximum& m) {
  Json o{{"kind", m.is_plateau() ? "plateau" : "point"}};
  put(o, "lo", m.lo);
  put(o, "hi", m.hi);
  put(o, "value", m.value);
  o["strict_from_left"] = m.strict_from_left;
  o["strict_from_right"] = m.strict_from_right;
  o["witness_delta"] = rational(m.witness_delta);
  return o;
}

Json corollary3(const Corollary3Result& r) {
  Json offending = Json::array();
  for (const auto& m : r.offending) offending.push_back(local_maximum(m));
  return Json{{"holds", r.holds}, {"usc", r.usc}, {"offending", std::move(offending)}};
}

Json certificate(const Theorem2Certificate& c, const Revalidation& reval) {
  Json o;
  Json interval;
  put(interval, "x0", c.x0);
  put(interval, "y0", c.y0);
  o["interval"] = std::move(interval);
  put(o, "sup_value", c.sup_value);
  o["H"] = closed_set(c.argmax);
  put(o, "p", c.p);
  put(o, "q", c.q);
  o["left_delta"] = rational(c.left_delta);
  o["right_delta"] = rational(c.right_delta);
  o["checks"] = Json{{"values_equal", c.checks.values_equal},
                     {"both_local_maxima", c.checks.both_local_maxima},
                     {"p_strict_left_and_q_strict_right", c.checks.p_strict_left_and_q_strict_right}};
  o["revalidation"] = Json{{"grid_points", reval.grid_points},
                           {"evaluated_points", reval.evaluated},
                           {"all_rechecks_passed", reval.passed},
                           {"failures", reval.failures}};
  return o;
}

Json oracle_verdict(const OracleVerdict& v, std::size_t max_listed) {
  Json triples = Json::array();
  for (std::size_t i = 0; i < v.violating_triples.size() && i < max_listed; ++i) {
    Triple t = v.positions(v.violating_triples[i]);
    triples.push_back(Json{{"t_x", rational(t.x)}, {"t_y", rational(t.y)}, {"t_z", rational(t.z)}});
  }
  Json grid{{"uniform_points", v.grid.uniform_points},
            {"includes_breakpoints", v.grid.includes_breakpoints},
            {"exact_comparisons", v.grid.exact_comparisons},
            {"size", v.grid.points.size()}};
  put(grid, "lo", v.grid.points.front());
  put(grid, "hi", v.grid.points.back());
  return Json{{"is_quasiconvex_on_grid", v.is_quasiconvex_on_grid},
              {"violation_count", v.violation_count},
              {"violating_triples", std::move(triples)},
              {"grid", std::move(grid)}};
}

Json diff(const DiffReport& d) {
  Json arr = Json::array();
  for (const auto& x : d.discrepancies) {
    Json o{{"kind", x.kind == Discrepancy::Kind::spurious ? "spurious" : "missed"}};
    put(o, "u", x.u);
    put(o, "v", x.v);
    arr.push_back(std::move(o));
  }
  return Json{{"consistent", d.consistent}, {"discrepancies", std::move(arr)}};
}

ViolationDecomposition decomposition_from_json(const Json& node) {
  auto text = [](const Json& n, const char* field) {
    if (!n.is_string()) throw Error(Errc::parse, std::string("field '") + field + "': expected a rational string");
    return n.get<std::string>();
  };
  if (!node.is_object() || !node.contains("pair") || !node.contains("components")) {
    throw Error(Errc::parse, "decomposition record needs 'pair' and 'components'");
  }
  ViolationDecomposition d;
  d.x = parse_rational(text(node["pair"].value("x", Json()), "pair.x"));
  d.y = parse_rational(text(node["pair"].value("y", Json()), "pair.y"));
  if (node.contains("threshold")) d.threshold = parse_xreal(text(node["threshold"], "threshold"));
  std::vector<OpenInterval> comps;
  for (const auto& c : node["components"]) {
    comps.emplace_back(parse_rational(text(c.value("u", Json()), "components.u")),
                       parse_rational(text(c.value("v", Json()), "components.v")));
  }
  d.components = normalize(std::move(comps));
  return d;
}

}  // namespace qcvx::report
