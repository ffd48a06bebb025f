#include "piecewise_view.hpp"

#include <algorithm>

namespace qcvx::detail {

namespace {

int sign_of(std::strong_ordering o) {
  if (o < 0) return -1;
  if (o > 0) return 1;
  return 0;
}

bool all_finite(const Piece& p) { return p.left_limit.is_finite() && p.right_limit.is_finite(); }

// Affine interpolation between a and b at fraction s of the way.
Rational lerp(const Rational& a, const Rational& b, const Rational& s) { return a + (b - a) * s; }

}  // namespace

PiecewiseView::PiecewiseView(std::vector<Rational> knots, std::vector<XReal> values, std::vector<Piece> pieces)
    : knots_(std::move(knots)), values_(std::move(values)), pieces_(std::move(pieces)) {
  if (knots_.size() < 2 || values_.size() != knots_.size() || pieces_.size() + 1 != knots_.size()) {
    throw Error(Errc::consistency, "malformed piecewise view");
  }
}

std::optional<std::size_t> PiecewiseView::knot_index(const Rational& t) const {
  auto it = std::lower_bound(knots_.begin(), knots_.end(), t);
  if (it != knots_.end() && *it == t) return static_cast<std::size_t>(it - knots_.begin());
  return std::nullopt;
}

std::size_t PiecewiseView::piece_index(const Rational& t) const {
  if (t < front() || t > back()) {
    throw Error(Errc::domain, to_string(t) + " outside [" + to_string(front()) + ", " + to_string(back()) + "]");
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  auto idx = static_cast<std::size_t>(it - knots_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, pieces_.size() - 1);
}

XReal PiecewiseView::piece_eval(std::size_t j, const Rational& t) const {
  const Piece& p = pieces_[j];
  if (p.is_constant() || !all_finite(p)) return p.left_limit;
  Rational s = (t - knots_[j]) / (knots_[j + 1] - knots_[j]);
  return XReal(lerp(p.left_limit.value(), p.right_limit.value(), s));
}

XReal PiecewiseView::at(const Rational& t) const {
  if (auto k = knot_index(t)) return values_[*k];
  return piece_eval(piece_index(t), t);
}

PiecewiseView make_view(const Function1D& f) {
  const auto& rep = f.representation();
  if (const auto* pl = std::get_if<PiecewiseLinear>(&rep)) {
    std::vector<Rational> knots;
    std::vector<XReal> values;
    std::vector<Piece> pieces;
    knots.reserve(pl->knots.size());
    values.reserve(pl->knots.size());
    for (std::size_t i = 0; i < pl->knots.size(); ++i) {
      knots.push_back(pl->knots[i].position);
      values.emplace_back(pl->knots[i].value);
      if (i > 0) pieces.push_back({values[i - 1], values[i]});
    }
    return {std::move(knots), std::move(values), std::move(pieces)};
  }
  if (const auto* pc = std::get_if<PiecewiseConstant>(&rep)) {
    std::vector<Piece> pieces;
    pieces.reserve(pc->piece_values.size());
    for (const auto& c : pc->piece_values) pieces.push_back({c, c});
    return {pc->breaks, pc->point_values, std::move(pieces)};
  }
  throw Error(Errc::inexact_model, "exact analysis requires a piecewise model, got " + f.kind_name());
}

PiecewiseView slice(const PiecewiseView& v, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(Errc::ordering, "slice requires lo < hi");
  if (lo < v.front() || hi > v.back()) throw Error(Errc::domain, "slice outside the function domain");
  const auto& knots = v.knots();
  auto first = std::upper_bound(knots.begin(), knots.end(), lo);
  auto last = std::lower_bound(knots.begin(), knots.end(), hi);

  std::vector<Rational> out_knots;
  out_knots.reserve(static_cast<std::size_t>(last - first) + 2);
  out_knots.push_back(lo);
  out_knots.insert(out_knots.end(), first, last);
  out_knots.push_back(hi);

  std::vector<XReal> values;
  values.reserve(out_knots.size());
  for (const auto& k : out_knots) values.push_back(v.at(k));

  std::vector<Piece> pieces;
  pieces.reserve(out_knots.size() - 1);
  std::size_t j = v.piece_index(lo);
  for (std::size_t i = 0; i + 1 < out_knots.size(); ++i) {
    while (knots[j + 1] <= out_knots[i]) ++j;
    pieces.push_back({v.piece_eval(j, out_knots[i]), v.piece_eval(j, out_knots[i + 1])});
  }
  return {std::move(out_knots), std::move(values), std::move(pieces)};
}

PiecewiseView with_knot(const PiecewiseView& v, const Rational& t) {
  if (v.knot_index(t)) return v;
  std::size_t j = v.piece_index(t);
  std::vector<Rational> knots = v.knots();
  std::vector<XReal> values = v.values();
  std::vector<Piece> pieces = v.pieces();
  XReal mid = v.piece_eval(j, t);
  Piece right{mid, pieces[j].right_limit};
  pieces[j].right_limit = mid;
  knots.insert(knots.begin() + static_cast<std::ptrdiff_t>(j) + 1, t);
  values.insert(values.begin() + static_cast<std::ptrdiff_t>(j) + 1, mid);
  pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(j) + 1, right);
  return {std::move(knots), std::move(values), std::move(pieces)};
}

PiecewiseView subtract_affine(const PiecewiseView& v, const Rational& at_front, const Rational& at_back) {
  const Rational width = v.back() - v.front();
  auto line = [&](const Rational& t) -> XReal {
    return XReal(lerp(at_front, at_back, Rational((t - v.front()) / width)));
  };
  std::vector<XReal> values;
  std::vector<Piece> pieces;
  values.reserve(v.knot_count());
  pieces.reserve(v.pieces().size());
  for (std::size_t i = 0; i < v.knot_count(); ++i) values.push_back(v.values()[i] - line(v.knots()[i]));
  for (std::size_t j = 0; j < v.pieces().size(); ++j) {
    const Piece& p = v.pieces()[j];
    pieces.push_back({p.left_limit - line(v.knots()[j]), p.right_limit - line(v.knots()[j + 1])});
  }
  return {v.knots(), std::move(values), std::move(pieces)};
}

namespace {

XReal reference_at(const PiecewiseView& v, const AffineReference& ref, const Rational& t) {
  if (!ref.at_front.is_finite() || !ref.at_back.is_finite()) return ref.at_front;
  Rational s = (t - v.front()) / (v.back() - v.front());
  return XReal(lerp(ref.at_front.value(), ref.at_back.value(), s));
}

enum class Portion { none, whole, left_part, right_part };

struct PiecePortion {
  Portion kind = Portion::none;
  Rational cut;  // crossing for left_part/right_part
};

PiecePortion classify_piece(const PiecewiseView& v, std::size_t j, const XReal& r0, const XReal& r1) {
  const Piece& p = v.pieces()[j];
  if (!all_finite(p) || !r0.is_finite() || !r1.is_finite()) {
    // At least one side is an infinite constant, so the comparison is uniform.
    return {p.left_limit > r0 ? Portion::whole : Portion::none, {}};
  }
  Rational d0 = p.left_limit.value() - r0.value();
  Rational d1 = p.right_limit.value() - r1.value();
  const bool above0 = d0 > 0;
  const bool above1 = d1 > 0;
  if (above0 && above1) return {Portion::whole, {}};
  if (!above0 && !above1) return {Portion::none, {}};
  const Rational& a = v.knots()[j];
  const Rational& b = v.knots()[j + 1];
  Rational s = d0 / (d0 - d1);
  Rational cut = a + (b - a) * s;
  if (above0) {
    if (cut == b) return {Portion::whole, {}};
    return {Portion::left_part, cut};
  }
  if (cut == a) return {Portion::whole, {}};
  return {Portion::right_part, cut};
}

}  // namespace

Superlevel strictly_above(const PiecewiseView& v, const AffineReference& ref) {
  Superlevel out;
  const auto& knots = v.knots();
  bool open = false;
  Rational start;
  for (std::size_t j = 0; j < v.pieces().size(); ++j) {
    PiecePortion portion = classify_piece(v, j, reference_at(v, ref, knots[j]), reference_at(v, ref, knots[j + 1]));
    const bool touches_left = portion.kind == Portion::whole || portion.kind == Portion::left_part;
    if (j > 0) {
      const bool above = v.values()[j] > reference_at(v, ref, knots[j]);
      if (!(open && above && touches_left)) {
        if (above) out.isolated.push_back(knots[j]);
        if (open) {
          out.components.emplace_back(start, knots[j]);
          open = false;
        }
      }
    }
    switch (portion.kind) {
      case Portion::whole:
        if (!open) {
          start = knots[j];
          open = true;
        }
        break;
      case Portion::left_part:
        if (!open) start = knots[j];
        out.components.emplace_back(start, portion.cut);
        open = false;
        break;
      case Portion::right_part:
        start = portion.cut;
        open = true;
        break;
      case Portion::none:
        break;
    }
  }
  if (open) out.components.emplace_back(start, v.back());
  return out;
}

namespace {

Extremum extremum(const PiecewiseView& v, bool front_closed, bool back_closed, bool want_min) {
  auto better = [&](const XReal& a, const XReal& b) { return want_min ? a < b : b < a; };
  const std::size_t n = v.knot_count();
  std::optional<XReal> best;
  auto offer = [&](const XReal& x) {
    if (!best || better(x, *best)) best = x;
  };
  for (std::size_t i = 1; i + 1 < n; ++i) offer(v.values()[i]);
  if (front_closed) offer(v.values().front());
  if (back_closed) offer(v.values().back());
  for (const auto& p : v.pieces()) offer(want_min ? xreal_min(p.left_limit, p.right_limit)
                                                  : xreal_max(p.left_limit, p.right_limit));

  Extremum out{*best, false, std::nullopt};
  // Earliest interior point attaining the extremum, scanning left to right.
  for (std::size_t j = 0; j < v.pieces().size() && !out.attained_interior; ++j) {
    if (j > 0 && v.values()[j] == out.value) {
      out.attained_interior = true;
      out.interior_point = v.knots()[j];
    } else if (v.pieces()[j].is_constant() && v.pieces()[j].left_limit == out.value) {
      out.attained_interior = true;
      out.interior_point = Rational((v.knots()[j] + v.knots()[j + 1]) / 2);
    }
  }
  return out;
}

}  // namespace

Extremum infimum(const PiecewiseView& v, bool front_closed, bool back_closed) {
  return extremum(v, front_closed, back_closed, true);
}

Extremum supremum(const PiecewiseView& v, bool front_closed, bool back_closed) {
  return extremum(v, front_closed, back_closed, false);
}

std::optional<Rational> interior_point_at_most(const PiecewiseView& v, const XReal& bound, bool strict) {
  auto ok = [&](const XReal& x) { return strict ? x < bound : x <= bound; };
  for (std::size_t j = 0; j < v.pieces().size(); ++j) {
    const Rational& a = v.knots()[j];
    const Rational& b = v.knots()[j + 1];
    if (j > 0 && ok(v.values()[j])) return a;
    const Piece& p = v.pieces()[j];
    if (p.is_constant() || !all_finite(p) || !bound.is_finite()) {
      // Uniform comparison on the piece (or every finite value against an
      // infinite bound).
      if (ok(p.is_constant() ? p.left_limit : XReal(Rational((p.left_limit.value() + p.right_limit.value()) / 2)))) {
        return Rational((a + b) / 2);
      }
      continue;
    }
    const Rational& lv = p.left_limit.value();
    const Rational& rv = p.right_limit.value();
    const Rational& c = bound.value();
    if (lv < c && rv < c) return Rational((a + b) / 2);
    if (lv < c) {
      // Halfway between a and the crossing with the bound.
      Rational s = (c - lv) / (rv - lv) / 2;
      return Rational(a + (b - a) * s);
    }
    if (rv < c) {
      Rational s = (c - lv) / (rv - lv);
      return Rational(a + (b - a) * ((1 + s) / 2));
    }
  }
  return std::nullopt;
}

int germ_left(const PiecewiseView& v, std::size_t i) {
  const Piece& p = v.pieces()[i - 1];
  int c = sign_of(p.right_limit <=> v.values()[i]);
  if (c != 0 || p.is_constant()) return c;
  // Limit equals the value: the slope decides. Rising into the knot means
  // smaller values on the left.
  return p.right_limit > p.left_limit ? -1 : 1;
}

int germ_right(const PiecewiseView& v, std::size_t i) {
  const Piece& p = v.pieces()[i];
  int c = sign_of(p.left_limit <=> v.values()[i]);
  if (c != 0 || p.is_constant()) return c;
  return p.right_limit > p.left_limit ? 1 : -1;
}

namespace {

// Length of the part of piece j, measured from its `near` end, on which the
// sign of (value - level) stays equal to `sign`.
Rational uniform_extent(const PiecewiseView& v, std::size_t j, const XReal& level, int sign, bool near_is_right) {
  const Piece& p = v.pieces()[j];
  const Rational len = v.knots()[j + 1] - v.knots()[j];
  const XReal& far = near_is_right ? p.left_limit : p.right_limit;
  if (sign == 0 || p.is_constant() || !all_finite(p) || !level.is_finite()) return len;
  int far_sign = sign_of(far <=> level);
  if (far_sign == sign || far_sign == 0) return len;
  // Crossing of the affine piece with the level, as a fraction from the left end.
  Rational s = (level.value() - p.left_limit.value()) / (p.right_limit.value() - p.left_limit.value());
  return near_is_right ? Rational(len * (1 - s)) : Rational(len * s);
}

}  // namespace

Rational germ_left_extent(const PiecewiseView& v, std::size_t i) {
  return uniform_extent(v, i - 1, v.values()[i], germ_left(v, i), true);
}

Rational germ_right_extent(const PiecewiseView& v, std::size_t i) {
  return uniform_extent(v, i, v.values()[i], germ_right(v, i), false);
}

}  // namespace qcvx::detail
