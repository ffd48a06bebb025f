#pragma once

// Uniform exact representation shared by the analyses: knot values plus, for
// every open piece between consecutive knots, the one-sided limits at both
// ends. A piece is affine between its limits when both are finite and
// constant otherwise (infinite limits are always equal).

#include <optional>
#include <vector>

#include "qcvx/core_types.hpp"
#include "qcvx/function_model.hpp"
#include "qcvx/interval_set.hpp"

namespace qcvx::detail {

struct Piece {
  XReal left_limit;
  XReal right_limit;

  bool is_constant() const { return left_limit == right_limit; }
};

class PiecewiseView {
 public:
  PiecewiseView(std::vector<Rational> knots, std::vector<XReal> values, std::vector<Piece> pieces);

  const std::vector<Rational>& knots() const noexcept { return knots_; }
  const std::vector<XReal>& values() const noexcept { return values_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  std::size_t knot_count() const noexcept { return knots_.size(); }
  const Rational& front() const { return knots_.front(); }
  const Rational& back() const { return knots_.back(); }

  std::optional<std::size_t> knot_index(const Rational& t) const;
  /// Piece whose closure contains t; for a knot, the piece to its right
  /// (or the last piece at the right end).
  std::size_t piece_index(const Rational& t) const;
  /// Value of the affine/constant extension of piece j at t in its closure.
  XReal piece_eval(std::size_t j, const Rational& t) const;
  XReal at(const Rational& t) const;

 private:
  std::vector<Rational> knots_;
  std::vector<XReal> values_;
  std::vector<Piece> pieces_;
};

/// Throws Errc::inexact_model for tables and black boxes.
PiecewiseView make_view(const Function1D& f);

/// Restriction to [lo, hi]; lo and hi become knots.
PiecewiseView slice(const PiecewiseView& v, const Rational& lo, const Rational& hi);

/// Same function with t added as a knot.
PiecewiseView with_knot(const PiecewiseView& v, const Rational& t);

/// v minus the affine function taking `at_front` at v.front() and `at_back`
/// at v.back().
PiecewiseView subtract_affine(const PiecewiseView& v, const Rational& at_front, const Rational& at_back);

/// Affine function over [v.front(), v.back()]; constant when infinite.
struct AffineReference {
  XReal at_front;
  XReal at_back;
};

struct Superlevel {
  std::vector<OpenInterval> components;
  // Points of the strict superlevel set not covered by any open component.
  std::vector<Rational> isolated;
};

/// {z in ]front, back[ : v(z) > ref(z)} split into maximal open intervals.
Superlevel strictly_above(const PiecewiseView& v, const AffineReference& ref);

struct Extremum {
  XReal value;
  bool attained_interior = false;
  std::optional<Rational> interior_point;
};

Extremum infimum(const PiecewiseView& v, bool front_closed, bool back_closed);
Extremum supremum(const PiecewiseView& v, bool front_closed, bool back_closed);

/// Some z in ]front, back[ with v(z) <= bound (strict: v(z) < bound).
std::optional<Rational> interior_point_at_most(const PiecewiseView& v, const XReal& bound, bool strict);

/// Sign of v(z) - v(knot i) for z just left (right) of knot i: +1, -1, or 0
/// when v equals v(knot i) on the whole adjacent piece.
int germ_left(const PiecewiseView& v, std::size_t i);
int germ_right(const PiecewiseView& v, std::size_t i);
/// Largest delta, bounded by the adjacent piece, over which the germ sign
/// holds uniformly.
Rational germ_left_extent(const PiecewiseView& v, std::size_t i);
Rational germ_right_extent(const PiecewiseView& v, std::size_t i);

}  // namespace qcvx::detail
