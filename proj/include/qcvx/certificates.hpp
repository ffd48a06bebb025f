#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcvx/core_types.hpp"
#include "qcvx/function_model.hpp"

namespace qcvx {

struct Theorem2Checks {
  bool values_equal = false;                      // f(p) = f(q)
  bool both_local_maxima = false;                 // f <= f(p) on ]x0, y0[
  bool p_strict_left_and_q_strict_right = false;  // f < f(p) on ]x0, p[, f < f(q) on ]q, y0[

  bool all() const { return values_equal && both_local_maxima && p_strict_left_and_q_strict_right; }
};

/// Non-quasiconvexity certificate on [x0, y0]: p = min H and q = max H where H
/// is the set of points attaining the supremum of f over ]x0, y0[.
struct Theorem2Certificate {
  Rational x0;
  Rational y0;
  XReal sup_value;
  ClosedSet1D argmax;
  Rational p;
  Rational q;
  // f < sup on ]p - left_delta, p[ and on ]q, q + right_delta[.
  Rational left_delta;
  Rational right_delta;
  Theorem2Checks checks;
};

/// std::nullopt when f has no violation on [x0, y0] (f is quasiconvex there).
/// Throws Errc::precondition, listing the offending breakpoints, when f is
/// not upper semicontinuous on [x0, y0].
std::optional<Theorem2Certificate> theorem2_certificate(const Function1D& f, const Rational& x0, const Rational& y0);

struct Revalidation {
  int grid_points = 0;      // uniform points requested
  std::size_t evaluated = 0;  // grid size after adding breakpoints and midpoints
  bool passed = false;
  std::vector<std::string> failures;
};

/// Re-checks a certificate by plain evaluation on a grid of [x0, y0] that
/// contains all breakpoints and the midpoints between consecutive grid points.
Revalidation revalidate_certificate(const Function1D& f, const Theorem2Certificate& cert, int grid_points);

struct LocalQuasiconvexity {
  bool locally_quasiconvex = false;
  // exists delta: f(p) > min{f(x), f(y)} for x in ]p-delta,p[, y in ]p,p+delta[
  bool locally_strictly_quasiconcave = false;
  // exists delta: f(p) > max{f(x), f(y)} on the same neighbourhoods
  bool strict_local_maximum = false;
  std::optional<Rational> delta;
};

LocalQuasiconvexity local_quasiconvexity_at(const Function1D& f, const Rational& p);

/// A local maximum (weak inequality on a punctured neighbourhood) at an
/// interior point, or a plateau record [lo, hi] standing for the interior
/// points of a maximal constant run, all of which are non-strict both sides.
struct LocalMaximum {
  Rational lo;
  Rational hi;
  XReal value;
  bool strict_from_left = false;
  bool strict_from_right = false;
  // For points: both one-sided behaviours hold on ]lo - delta, lo + delta[.
  // For plateaus: half the plateau length.
  Rational witness_delta;

  bool is_plateau() const { return lo != hi; }
};

std::vector<LocalMaximum> enumerate_local_maxima(const Function1D& f);

struct Corollary3Result {
  bool holds = false;  // no local maximum is strict from either side
  bool usc = false;
  std::vector<LocalMaximum> offending;
};

Corollary3Result corollary3_hypothesis(const Function1D& f);

}  // namespace qcvx
