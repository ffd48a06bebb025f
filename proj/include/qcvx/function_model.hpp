#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcvx/core_types.hpp"

namespace qcvx {

struct Knot {
  Rational position;
  Rational value;
};

/// Continuous interpolation through strictly increasing knots.
struct PiecewiseLinear {
  std::vector<Knot> knots;
};

/// Constant on every open piece ]breaks[i], breaks[i+1][, with an explicit
/// value at every breakpoint so that semicontinuity is decidable.
struct PiecewiseConstant {
  std::vector<Rational> breaks;
  std::vector<XReal> piece_values;  // breaks.size() - 1 entries
  std::vector<XReal> point_values;  // breaks.size() entries
};

/// Evaluation-only table; defined at the sample positions and nowhere else.
struct Tabulated {
  std::vector<Rational> positions;
  std::vector<XReal> values;
};

/// Opaque callback on [lo, hi]. Results are treated as inexact.
struct BlackBox {
  std::function<XReal(const Rational&)> eval;
  Rational lo;
  Rational hi;
  // Callers must not invoke `eval` from several threads when set.
  bool serial = false;
};

/// Extended-real-valued function on a closed rational interval [a, b], a < b.
/// Construction validates the representation; the object is immutable.
class Function1D {
 public:
  using Representation = std::variant<PiecewiseLinear, PiecewiseConstant, Tabulated, BlackBox>;

  static Function1D piecewise_linear(std::vector<Knot> knots);
  static Function1D piecewise_constant(std::vector<Rational> breaks, std::vector<XReal> piece_values,
                                       std::vector<XReal> point_values);
  static Function1D tabulated(std::vector<Rational> positions, std::vector<XReal> values);
  static Function1D blackbox(std::function<XReal(const Rational&)> eval, Rational lo, Rational hi,
                             bool serial = false);

  const Representation& representation() const noexcept { return rep_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }

  /// Piecewise-linear and piecewise-constant models.
  bool is_exact() const noexcept;
  /// "piecewise_linear", "piecewise_constant", "tabulated" or "blackbox".
  std::string kind_name() const;

  /// Knot/break positions for exact models, sample positions for tables,
  /// the two domain ends for black boxes.
  std::vector<Rational> breakpoints() const;

 private:
  Function1D(Representation rep, Rational lo, Rational hi)
      : rep_(std::move(rep)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  Representation rep_;
  Rational lo_;
  Rational hi_;
};

XReal evaluate(const Function1D& f, const Rational& t);

/// Pointwise negation of an exact model.
Function1D negate(const Function1D& f);

/// h(t) = g(segment_point(s, t)) on [0, 1], returned as a black box.
Function1D restrict_to_segment(std::function<XReal(const Point&)> g, const Segment& s,
                               const ToleranceConfig& cfg, bool serial = false);

struct SemicontinuityReport {
  bool is_lsc = true;
  bool is_usc = true;
  std::vector<Rational> offending_points_lsc;
  std::vector<Rational> offending_points_usc;
};

SemicontinuityReport check_semicontinuity(const Function1D& f);
/// Audit of the restriction of f to [lo, hi]; one-sided at lo and hi.
SemicontinuityReport check_semicontinuity(const Function1D& f, const Rational& lo, const Rational& hi);

enum class CantorMode { set, complement };

/// Indicator of the depth-k middle-thirds approximant C_k (mode set) or of
/// its open complement in [0,1] (mode complement). 1 <= depth <= 20.
Function1D generate_cantor(int depth, CantorMode mode);

/// The 2^depth closed intervals of C_k, sorted.
std::vector<std::pair<Rational, Rational>> cantor_intervals(int depth);

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;
};

struct InfimumResult {
  XReal value;
  bool attained_interior = false;
};

InfimumResult infimum_on(const Function1D& f, const RationalInterval& interval);

struct ClosedInterval {
  Rational lo;
  Rational hi;

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Sorted, pairwise disjoint closed intervals (points allowed).
struct ClosedSet1D {
  std::vector<ClosedInterval> components;

  bool empty() const noexcept { return components.empty(); }
  const Rational& min() const { return components.front().lo; }
  const Rational& max() const { return components.back().hi; }
  bool contains(const Rational& t) const;

  friend bool operator==(const ClosedSet1D&, const ClosedSet1D&) = default;
};

struct ArgmaxResult {
  XReal sup;
  ClosedSet1D argmax;
};

/// Supremum of f over ]x0, y0[ and the points of [x0, y0] attaining it.
/// Throws Errc::precondition (with offending points) when the attaining set
/// is not closed: f is not usc, or f(x0) or f(y0) lies above the supremum
/// while the adjacent interior values approach it.
ArgmaxResult argmax_set(const Function1D& f, const Rational& x0, const Rational& y0);

}  // namespace qcvx
