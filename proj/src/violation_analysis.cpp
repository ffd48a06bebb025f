#include "qcvx/violation_analysis.hpp"

#include <algorithm>

#include "piecewise_view.hpp"

namespace qcvx {

namespace {

void require_exact_pair(const Function1D& f, const Rational& x, const Rational& y) {
  if (!f.is_exact()) {
    throw Error(Errc::inexact_model, f.kind_name() + " models cannot be analysed exactly; use the oracle");
  }
  if (!(x < y)) throw Error(Errc::ordering, "pair requires x < y (got " + to_string(x) + ", " + to_string(y) + ")");
  if (x < f.lo() || y > f.hi()) throw Error(Errc::domain, "pair outside the function domain");
}

ComponentCheck check_against_level(const detail::PiecewiseView& interior, const XReal& fu, const XReal& fv,
                                   const XReal& level_u, const XReal& level_v, const XReal& interior_level) {
  ComponentCheck c;
  c.endpoints_outside_T = fu <= level_u && fv <= level_v;
  if (!(fu <= level_u)) {
    c.offending_point = interior.front();
  } else if (!(fv <= level_v)) {
    c.offending_point = interior.back();
  }
  auto inf = detail::infimum(interior, false, false);
  c.interior_strict = inf.value > interior_level || (inf.value == interior_level && !inf.attained_interior);
  if (!c.interior_strict && !c.offending_point) {
    c.offending_point = detail::interior_point_at_most(interior, interior_level, false);
  }
  return c;
}

}  // namespace

ViolationDecomposition violation_set(const Function1D& f, const Rational& x_in, const Rational& y_in) {
  const Rational x = canonical(x_in), y = canonical(y_in);
  require_exact_pair(f, x, y);
  ViolationDecomposition d;
  d.x = x;
  d.y = y;
  d.threshold = xreal_max(evaluate(f, x), evaluate(f, y));

  auto view = detail::slice(detail::make_view(f), x, y);
  if (!d.threshold.is_plus_infinity()) {
    auto above = detail::strictly_above(view, {d.threshold, d.threshold});
    d.components = OpenIntervalSet::from_canonical(std::move(above.components));
    d.isolated_violations = std::move(above.isolated);
  }

  // Maximality: an interior component endpoint is either outside T or a
  // violating point that cannot join an open component.
  for (const auto& iv : d.components) {
    for (const Rational* e : {&iv.u(), &iv.v()}) {
      if (*e == x || *e == y || view.at(*e) <= d.threshold) continue;
      if (!std::binary_search(d.isolated_violations.begin(), d.isolated_violations.end(), *e)) {
        throw Error(Errc::consistency, "non-maximal component endpoint " + to_string(*e));
      }
    }
  }

  d.lsc_warnings = check_semicontinuity(f, x, y).offending_points_lsc;
  d.per_component_checks = verify_component_property(f, d);
  return d;
}

std::vector<ComponentCheck> verify_component_property(const Function1D& f, const ViolationDecomposition& d) {
  require_exact_pair(f, d.x, d.y);
  XReal threshold = xreal_max(evaluate(f, d.x), evaluate(f, d.y));
  if (threshold != d.threshold) {
    throw Error(Errc::consistency, "decomposition threshold " + to_string(d.threshold) +
                                       " does not match max{f(x), f(y)} = " + to_string(threshold));
  }
  auto view = detail::make_view(f);
  std::vector<ComponentCheck> out;
  out.reserve(d.components.size());
  for (const auto& iv : d.components) {
    if (iv.u() < d.x || iv.v() > d.y) {
      throw Error(Errc::consistency, "component ]" + to_string(iv.u()) + ", " + to_string(iv.v()) +
                                         "[ leaves ]x, y[");
    }
    auto interior = detail::slice(view, iv.u(), iv.v());
    out.push_back(check_against_level(interior, interior.values().front(), interior.values().back(), threshold,
                                      threshold, threshold));
  }
  return out;
}

QuasiconvexityVerdict is_quasiconvex(const Function1D& f) {
  auto view = detail::make_view(f);
  // Candidates: every knot and one interior point per piece. On a piece the
  // value is constant or affine, so these points see every violation.
  std::vector<Rational> points;
  std::vector<XReal> values;
  points.reserve(2 * view.knot_count());
  values.reserve(2 * view.knot_count());
  for (std::size_t j = 0; j < view.knot_count(); ++j) {
    points.push_back(view.knots()[j]);
    values.push_back(view.values()[j]);
    if (j + 1 < view.knot_count()) {
      points.emplace_back((view.knots()[j] + view.knots()[j + 1]) / 2);
      values.push_back(view.piece_eval(j, points.back()));
    }
  }
  const std::size_t m = points.size();
  // A triple x < z < y violates iff f(z) exceeds both the minimum to its left
  // and the minimum to its right, so prefix/suffix minima cover every triple.
  std::vector<std::size_t> prefix_min(m, 0);
  std::vector<std::size_t> suffix_min(m, m - 1);
  for (std::size_t i = 1; i < m; ++i) {
    prefix_min[i] = values[i - 1] < values[prefix_min[i - 1]] ? i - 1 : prefix_min[i - 1];
  }
  for (std::size_t i = m - 2; i-- > 0;) {
    suffix_min[i] = values[i + 1] < values[suffix_min[i + 1]] ? i + 1 : suffix_min[i + 1];
  }

  std::optional<std::size_t> best;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (values[i] > values[prefix_min[i]] && values[i] > values[suffix_min[i]]) {
      if (!best || values[i] > values[*best]) best = i;
    }
  }
  QuasiconvexityVerdict verdict;
  if (best) {
    verdict.is_quasiconvex = false;
    verdict.witness_triple = Triple{points[prefix_min[*best]], points[suffix_min[*best]], points[*best]};
  }
  return verdict;
}

WitnessCheck witness_check_cor2(const Function1D& f, const Rational& x_in, const Rational& y_in) {
  const Rational x = canonical(x_in), y = canonical(y_in);
  require_exact_pair(f, x, y);
  WitnessCheck w;
  w.threshold = xreal_max(evaluate(f, x), evaluate(f, y));
  auto view = detail::slice(detail::make_view(f), x, y);
  auto inf = detail::infimum(view, false, false);
  w.infimum = inf.value;
  w.infimum_attained = inf.attained_interior;
  w.holds = inf.value < w.threshold || (inf.value == w.threshold && inf.attained_interior);
  if (w.holds) {
    w.witness = detail::interior_point_at_most(view, w.threshold, false);
    if (!w.witness) throw Error(Errc::consistency, "infimum below threshold but no interior witness found");
  }
  return w;
}

namespace {

// Chord through (x, f(x)) and (y, f(y)) evaluated at z.
Rational chord_at(const Rational& x, const Rational& y, const Rational& fx, const Rational& fy, const Rational& z) {
  return fx + (fy - fx) * (z - x) / (y - x);
}

// z = t*x + (1-t)*y and its inverse.
Rational z_of(const Rational& x, const Rational& y, const Rational& t) { return t * x + (1 - t) * y; }
Rational t_of(const Rational& x, const Rational& y, const Rational& z) { return (y - z) / (y - x); }

std::pair<Rational, Rational> finite_endpoint_values(const Function1D& f, const Rational& x, const Rational& y) {
  XReal fx = evaluate(f, x);
  XReal fy = evaluate(f, y);
  if (!fx.is_finite() || !fy.is_finite()) {
    throw Error(Errc::unsupported_chord, "chord needs finite f(x) and f(y)");
  }
  return {fx.value(), fy.value()};
}

}  // namespace

ConvexityViolation convexity_violation_set(const Function1D& f, const Rational& x_in, const Rational& y_in) {
  const Rational x = canonical(x_in), y = canonical(y_in);
  require_exact_pair(f, x, y);
  auto [fx, fy] = finite_endpoint_values(f, x, y);
  auto view = detail::slice(detail::make_view(f), x, y);
  auto above = detail::strictly_above(view, {XReal(fx), XReal(fy)});

  ConvexityViolation c;
  c.x = x;
  c.y = y;
  // t decreases as z increases, so reverse while mapping.
  std::vector<OpenInterval> t_intervals;
  t_intervals.reserve(above.components.size());
  for (auto it = above.components.rbegin(); it != above.components.rend(); ++it) {
    t_intervals.emplace_back(t_of(x, y, it->v()), t_of(x, y, it->u()));
  }
  c.t_components = OpenIntervalSet::from_canonical(std::move(t_intervals));
  for (auto it = above.isolated.rbegin(); it != above.isolated.rend(); ++it) c.isolated_t.push_back(t_of(x, y, *it));
  c.per_component_checks = verify_convexity_components(f, c);
  return c;
}

std::vector<ComponentCheck> verify_convexity_components(const Function1D& f, const ConvexityViolation& c) {
  require_exact_pair(f, c.x, c.y);
  auto [fx, fy] = finite_endpoint_values(f, c.x, c.y);
  auto view = detail::make_view(f);
  std::vector<ComponentCheck> out;
  out.reserve(c.t_components.size());
  for (const auto& iv : c.t_components) {
    if (iv.u() < 0 || iv.v() > 1) throw Error(Errc::consistency, "t-component leaves [0,1]");
    Rational z1 = z_of(c.x, c.y, iv.v());
    Rational z2 = z_of(c.x, c.y, iv.u());
    Rational chord1 = chord_at(c.x, c.y, fx, fy, z1);
    Rational chord2 = chord_at(c.x, c.y, fx, fy, z2);
    auto interior = detail::subtract_affine(detail::slice(view, z1, z2), chord1, chord2);
    // Differences f - chord at the endpoints, compared against zero.
    ComponentCheck check = check_against_level(interior, interior.values().front(), interior.values().back(),
                                               XReal(0), XReal(0), XReal(0));
    if (check.offending_point) check.offending_point = t_of(c.x, c.y, *check.offending_point);
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace qcvx
