#include "qcvx/certificates.hpp"

#include <algorithm>

#include "piecewise_view.hpp"

namespace qcvx {

namespace {

void require_exact(const Function1D& f) {
  if (!f.is_exact()) throw Error(Errc::inexact_model, f.kind_name() + " models cannot be analysed exactly");
}

// True when no point of the open interval ]lo, hi[ reaches `level`, given
// that `level` bounds f from above there.
bool strictly_below_on(const detail::PiecewiseView& v, const Rational& lo, const Rational& hi, const XReal& level) {
  if (!(lo < hi)) return true;
  auto sup = detail::supremum(detail::slice(v, lo, hi), false, false);
  return sup.value < level || (sup.value == level && !sup.attained_interior);
}

std::string where(const char* what, const Rational& z) { return std::string(what) + " at " + to_string(z); }

}  // namespace

std::optional<Theorem2Certificate> theorem2_certificate(const Function1D& f, const Rational& x0_in, const Rational& y0_in) {
  const Rational x0 = canonical(x0_in), y0 = canonical(y0_in);
  require_exact(f);
  if (!(x0 < y0)) throw Error(Errc::ordering, "certificate interval requires x0 < y0");
  if (x0 < f.lo() || y0 > f.hi()) throw Error(Errc::domain, "certificate interval outside the function domain");

  auto audit = check_semicontinuity(f, x0, y0);
  if (!audit.is_usc) {
    throw Error(Errc::precondition, "f is not upper semicontinuous on [x0, y0]", audit.offending_points_usc);
  }

  auto full = detail::make_view(f);
  auto view = detail::slice(full, x0, y0);
  const XReal threshold = xreal_max(view.values().front(), view.values().back());
  if (detail::supremum(view, false, false).value <= threshold) return std::nullopt;

  auto [sup, h] = argmax_set(f, x0, y0);
  Theorem2Certificate cert{x0, y0, sup, h, h.min(), h.max(), {}, {}, {}};
  cert.left_delta = cert.p - x0;
  cert.right_delta = y0 - cert.q;

  const XReal fp = evaluate(f, cert.p);
  const XReal fq = evaluate(f, cert.q);
  cert.checks.values_equal = fp == fq && fp == sup;
  cert.checks.both_local_maxima =
      x0 < cert.p && cert.q < y0 && detail::supremum(view, false, false).value <= xreal_min(fp, fq);
  cert.checks.p_strict_left_and_q_strict_right =
      strictly_below_on(full, x0, cert.p, fp) && strictly_below_on(full, cert.q, y0, fq);
  return cert;
}

Revalidation revalidate_certificate(const Function1D& f, const Theorem2Certificate& cert, int grid_points) {
  Revalidation r;
  r.grid_points = grid_points;
  if (grid_points < 3) throw Error(Errc::parameter_range, "revalidation grid needs at least 3 points");

  std::vector<Rational> grid;
  const Rational width = cert.y0 - cert.x0;
  for (int i = 0; i < grid_points; ++i) grid.emplace_back(cert.x0 + width * ratio(i, grid_points - 1));
  for (const auto& b : f.breakpoints()) {
    if (cert.x0 <= b && b <= cert.y0) grid.push_back(b);
  }
  grid.push_back(cert.p);
  grid.push_back(cert.q);
  for (auto& g : grid) g.canonicalize();
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const std::size_t base = grid.size();
  for (std::size_t i = 0; i + 1 < base; ++i) grid.emplace_back((grid[i] + grid[i + 1]) / 2);
  std::sort(grid.begin(), grid.end());
  r.evaluated = grid.size();

  const XReal fp = evaluate(f, cert.p);
  const XReal fq = evaluate(f, cert.q);
  if (fp != cert.sup_value) r.failures.push_back(where("f(p) differs from the supremum", cert.p));
  if (fq != cert.sup_value) r.failures.push_back(where("f(q) differs from the supremum", cert.q));
  for (const auto& z : grid) {
    if (z <= cert.x0 || z >= cert.y0) continue;
    XReal fz = evaluate(f, z);
    if (fz > cert.sup_value) r.failures.push_back(where("value above the supremum", z));
    if (z < cert.p && !(fz < fp)) r.failures.push_back(where("p not strict from the left", z));
    if (z > cert.q && !(fz < fq)) r.failures.push_back(where("q not strict from the right", z));
  }
  r.passed = r.failures.empty();
  return r;
}

LocalQuasiconvexity local_quasiconvexity_at(const Function1D& f, const Rational& p_in) {
  const Rational p = canonical(p_in);
  require_exact(f);
  if (!(f.lo() < p && p < f.hi())) {
    throw Error(Errc::domain, "local analysis needs an interior point, got " + to_string(p));
  }
  auto view = detail::with_knot(detail::make_view(f), p);
  const std::size_t i = *view.knot_index(p);
  const int left = detail::germ_left(view, i);
  const int right = detail::germ_right(view, i);
  const Rational cap = std::min(Rational(p - f.lo()), Rational(f.hi() - p));
  const Rational left_extent = std::min(detail::germ_left_extent(view, i), cap);
  const Rational right_extent = std::min(detail::germ_right_extent(view, i), cap);

  LocalQuasiconvexity out;
  std::optional<Rational> delta;
  auto offer = [&](const Rational& d) {
    if (!delta || d < *delta) delta = d;
  };
  // One side lying entirely at or above f(p) settles the max-inequality.
  if (left >= 0 || right >= 0) {
    out.locally_quasiconvex = true;
    offer(left >= 0 && right >= 0 ? std::max(left_extent, right_extent) : (left >= 0 ? left_extent : right_extent));
  }
  // One side lying strictly below f(p) forces f(p) > min{f(x), f(y)}.
  if (left < 0 || right < 0) {
    out.locally_strictly_quasiconcave = true;
    offer(left < 0 && right < 0 ? std::max(left_extent, right_extent) : (left < 0 ? left_extent : right_extent));
  }
  if (left < 0 && right < 0) {
    out.strict_local_maximum = true;
    offer(std::min(left_extent, right_extent));
  }
  out.delta = delta;
  return out;
}

std::vector<LocalMaximum> enumerate_local_maxima(const Function1D& f) {
  require_exact(f);
  auto view = detail::make_view(f);
  const auto& knots = view.knots();
  const auto& pieces = view.pieces();
  std::vector<LocalMaximum> out;

  for (std::size_t j = 0; j < pieces.size();) {
    if (!pieces[j].is_constant()) {
      ++j;
      continue;
    }
    const XReal& c = pieces[j].left_limit;
    std::size_t k = j;
    while (k + 1 < pieces.size() && view.values()[k + 1] == c && pieces[k + 1].is_constant() &&
           pieces[k + 1].left_limit == c) {
      ++k;
    }
    out.push_back({knots[j], knots[k + 1], c, false, false, Rational((knots[k + 1] - knots[j]) / 2)});
    j = k + 1;
  }

  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const int left = detail::germ_left(view, i);
    const int right = detail::germ_right(view, i);
    if (left > 0 || right > 0 || (left == 0 && right == 0)) continue;
    Rational delta = std::min(detail::germ_left_extent(view, i), detail::germ_right_extent(view, i));
    out.push_back({knots[i], knots[i], view.values()[i], left < 0, right < 0, std::move(delta)});
  }

  std::sort(out.begin(), out.end(), [](const LocalMaximum& a, const LocalMaximum& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  return out;
}

Corollary3Result corollary3_hypothesis(const Function1D& f) {
  Corollary3Result r;
  r.usc = check_semicontinuity(f).is_usc;
  for (auto& m : enumerate_local_maxima(f)) {
    if (m.strict_from_left || m.strict_from_right) r.offending.push_back(std::move(m));
  }
  r.holds = r.offending.empty();
  return r;
}

}  // namespace qcvx
