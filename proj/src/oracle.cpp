#include "qcvx/oracle.hpp"

#include <algorithm>

namespace qcvx {

Triple OracleVerdict::positions(const GridTriple& t) const {
  return {grid.points[t.x], grid.points[t.y], grid.points[t.z]};
}

OracleGrid oracle_grid(const Function1D& f, const Rational& lo_in, const Rational& hi_in, const ToleranceConfig& cfg) {
  const Rational lo = canonical(lo_in), hi = canonical(hi_in);
  cfg.validate();
  if (!(lo < hi)) throw Error(Errc::ordering, "oracle grid requires lo < hi");
  OracleGrid g;
  g.exact_comparisons = !std::holds_alternative<BlackBox>(f.representation());
  if (const auto* tab = std::get_if<Tabulated>(&f.representation())) {
    for (const auto& p : tab->positions) {
      if (lo <= p && p <= hi) g.points.push_back(p);
    }
    g.includes_breakpoints = true;
    return g;
  }
  const Rational width = hi - lo;
  g.uniform_points = cfg.grid_points;
  for (int i = 0; i < cfg.grid_points; ++i) {
    Rational p = lo + width * ratio(i, cfg.grid_points - 1);
    p.canonicalize();
    g.points.push_back(std::move(p));
  }
  if (f.is_exact()) {
    const auto breaks = f.breakpoints();
    for (const auto& b : breaks) {
      if (lo < b && b < hi) g.points.push_back(b);
    }
    // A constant piece narrower than the spacing still needs one sample.
    if (std::holds_alternative<PiecewiseConstant>(f.representation())) {
      for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Rational mid = (breaks[i] + breaks[i + 1]) / 2;
        if (lo < mid && mid < hi) g.points.push_back(std::move(mid));
      }
    }
    g.includes_breakpoints = true;
  }
  std::sort(g.points.begin(), g.points.end());
  g.points.erase(std::unique(g.points.begin(), g.points.end()), g.points.end());
  return g;
}

namespace {

// Dense ranks of the sampled values: exact comparisons reduce to integers.
std::vector<std::uint32_t> ranks_of(const std::vector<XReal>& values) {
  std::vector<XReal> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> ranks;
  ranks.reserve(values.size());
  for (const auto& v : values) {
    ranks.push_back(static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  }
  return ranks;
}

XReal with_margin(const XReal& level, const Rational& eps) {
  if (!level.is_finite()) return level;
  return XReal(Rational(level.value() + eps));
}

}  // namespace

OracleVerdict oracle_quasiconvex(const Function1D& f, const ToleranceConfig& cfg, std::size_t max_triples) {
  OracleVerdict out;
  out.grid = oracle_grid(f, f.lo(), f.hi(), cfg);
  const auto& pts = out.grid.points;
  const auto n = static_cast<std::uint32_t>(pts.size());
  std::vector<XReal> values;
  values.reserve(n);
  for (const auto& p : pts) values.push_back(evaluate(f, p));

  auto record = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    ++out.violation_count;
    if (out.violating_triples.size() < max_triples) out.violating_triples.push_back({x, y, z});
  };

  if (out.grid.exact_comparisons) {
    const auto rank = ranks_of(values);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = x + 2; y < n; ++y) {
        const std::uint32_t level = std::max(rank[x], rank[y]);
        for (std::uint32_t z = x + 1; z < y; ++z) {
          if (rank[z] > level) record(x, y, z);
        }
      }
    }
  } else {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = x + 2; y < n; ++y) {
        const XReal level = with_margin(xreal_max(values[x], values[y]), cfg.float_epsilon);
        for (std::uint32_t z = x + 1; z < y; ++z) {
          if (values[z] > level) record(x, y, z);
        }
      }
    }
  }
  out.is_quasiconvex_on_grid = out.violation_count == 0;
  return out;
}

OpenIntervalSet oracle_violation_set(const Function1D& f, const Rational& x_in, const Rational& y_in,
                                     const ToleranceConfig& cfg) {
  const Rational x = canonical(x_in), y = canonical(y_in);
  if (!(x < y)) throw Error(Errc::ordering, "oracle pair requires x < y");
  auto grid = oracle_grid(f, x, y, cfg);
  const auto& pts = grid.points;
  XReal level = xreal_max(evaluate(f, x), evaluate(f, y));
  if (!grid.exact_comparisons) level = with_margin(level, cfg.float_epsilon);

  std::vector<bool> marked(pts.size(), false);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) marked[i] = evaluate(f, pts[i]) > level;

  std::vector<OpenInterval> runs;
  for (std::size_t i = 1; i + 1 < pts.size();) {
    if (!marked[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < pts.size() && marked[j + 1]) ++j;
    runs.emplace_back(pts[i - 1], pts[j + 1]);
    i = j + 1;
  }
  return normalize(std::move(runs));
}

namespace {

bool within(const OpenInterval& a, const OpenInterval& b, const Rational& slack) {
  return abs(a.u() - b.u()) <= slack && abs(a.v() - b.v()) <= slack;
}

}  // namespace

DiffReport diff_report(const OpenIntervalSet& exact, const OpenIntervalSet& approx, const Rational& slack) {
  DiffReport r;
  for (const auto& a : approx) {
    bool matched = std::any_of(exact.begin(), exact.end(), [&](const OpenInterval& e) { return within(a, e, slack); });
    if (!matched) r.discrepancies.push_back({Discrepancy::Kind::spurious, a.u(), a.v()});
  }
  for (const auto& e : exact) {
    if (e.length() <= 2 * slack) continue;
    bool matched = std::any_of(approx.begin(), approx.end(), [&](const OpenInterval& a) { return within(a, e, slack); });
    if (!matched) r.discrepancies.push_back({Discrepancy::Kind::missed, e.u(), e.v()});
  }
  r.consistent = r.discrepancies.empty();
  return r;
}

DiffReport diff_report(const ViolationDecomposition& exact, const OpenIntervalSet& approx, const Rational& slack) {
  return diff_report(exact.components, approx, slack);
}

}  // namespace qcvx
