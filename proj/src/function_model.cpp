#include "qcvx/function_model.hpp"

#include <algorithm>
#include <cstdint>

#include "piecewise_view.hpp"

namespace qcvx {

namespace {

void require_strictly_increasing(const std::vector<Rational>& xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) {
      throw Error(Errc::parse, std::string(what) + " must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_in_domain(const Function1D& f, const Rational& t) {
  if (t < f.lo() || t > f.hi()) {
    throw Error(Errc::domain, to_string(t) + " outside [" + to_string(f.lo()) + ", " + to_string(f.hi()) + "]");
  }
}

}  // namespace

Function1D Function1D::piecewise_linear(std::vector<Knot> knots) {
  if (knots.size() < 2) throw Error(Errc::parse, "piecewise_linear needs at least two knots");
  std::vector<Rational> positions;
  positions.reserve(knots.size());
  for (auto& k : knots) {
    k.position.canonicalize();
    k.value.canonicalize();
    positions.push_back(k.position);
  }
  require_strictly_increasing(positions, "knot positions");
  Rational lo = knots.front().position;
  Rational hi = knots.back().position;
  return {PiecewiseLinear{std::move(knots)}, std::move(lo), std::move(hi)};
}

Function1D Function1D::piecewise_constant(std::vector<Rational> breaks, std::vector<XReal> piece_values,
                                          std::vector<XReal> point_values) {
  if (breaks.size() < 2) throw Error(Errc::parse, "piecewise_constant needs at least two breaks");
  for (auto& b : breaks) b.canonicalize();
  require_strictly_increasing(breaks, "breaks");
  if (piece_values.size() + 1 != breaks.size()) {
    throw Error(Errc::parse, "piece_values must have one entry per open piece (" +
                                 std::to_string(breaks.size() - 1) + " expected, got " +
                                 std::to_string(piece_values.size()) + ")");
  }
  if (point_values.size() != breaks.size()) {
    throw Error(Errc::parse, "point_values must have one entry per break (" + std::to_string(breaks.size()) +
                                 " expected, got " + std::to_string(point_values.size()) + ")");
  }
  Rational lo = breaks.front();
  Rational hi = breaks.back();
  return {PiecewiseConstant{std::move(breaks), std::move(piece_values), std::move(point_values)}, std::move(lo),
          std::move(hi)};
}

Function1D Function1D::tabulated(std::vector<Rational> positions, std::vector<XReal> values) {
  if (positions.size() < 2) throw Error(Errc::parse, "tabulated needs at least two samples");
  if (positions.size() != values.size()) throw Error(Errc::parse, "positions and values differ in length");
  for (auto& p : positions) p.canonicalize();
  require_strictly_increasing(positions, "positions");
  Rational lo = positions.front();
  Rational hi = positions.back();
  return {Tabulated{std::move(positions), std::move(values)}, std::move(lo), std::move(hi)};
}

Function1D Function1D::blackbox(std::function<XReal(const Rational&)> eval, Rational lo, Rational hi, bool serial) {
  if (!(lo < hi)) throw Error(Errc::ordering, "black-box domain needs lo < hi");
  if (!eval) throw Error(Errc::parse, "black-box callback is empty");
  return {BlackBox{std::move(eval), lo, hi, serial}, lo, hi};
}

bool Function1D::is_exact() const noexcept {
  return std::holds_alternative<PiecewiseLinear>(rep_) || std::holds_alternative<PiecewiseConstant>(rep_);
}

std::string Function1D::kind_name() const {
  return std::visit(overloaded{
                        [](const PiecewiseLinear&) { return std::string("piecewise_linear"); },
                        [](const PiecewiseConstant&) { return std::string("piecewise_constant"); },
                        [](const Tabulated&) { return std::string("tabulated"); },
                        [](const BlackBox&) { return std::string("blackbox"); },
                    },
                    rep_);
}

std::vector<Rational> Function1D::breakpoints() const {
  return std::visit(overloaded{
                        [](const PiecewiseLinear& pl) {
                          std::vector<Rational> out;
                          out.reserve(pl.knots.size());
                          for (const auto& k : pl.knots) out.push_back(k.position);
                          return out;
                        },
                        [](const PiecewiseConstant& pc) { return pc.breaks; },
                        [](const Tabulated& t) { return t.positions; },
                        [](const BlackBox& b) { return std::vector<Rational>{b.lo, b.hi}; },
                    },
                    rep_);
}

XReal evaluate(const Function1D& f, const Rational& t_in) {
  const Rational t = canonical(t_in);
  require_in_domain(f, t);
  return std::visit(
      overloaded{
          [&](const PiecewiseLinear& pl) -> XReal {
            auto it = std::lower_bound(pl.knots.begin(), pl.knots.end(), t,
                                       [](const Knot& k, const Rational& x) { return k.position < x; });
            if (it->position == t) return XReal(it->value);
            const Knot& right = *it;
            const Knot& left = *(it - 1);
            Rational s = (t - left.position) / (right.position - left.position);
            return XReal(Rational(left.value + (right.value - left.value) * s));
          },
          [&](const PiecewiseConstant& pc) -> XReal {
            auto it = std::lower_bound(pc.breaks.begin(), pc.breaks.end(), t);
            auto idx = static_cast<std::size_t>(it - pc.breaks.begin());
            if (*it == t) return pc.point_values[idx];
            return pc.piece_values[idx - 1];
          },
          [&](const Tabulated& tab) -> XReal {
            auto it = std::lower_bound(tab.positions.begin(), tab.positions.end(), t);
            if (it == tab.positions.end() || *it != t) {
              throw Error(Errc::no_sample, "no sample at " + to_string(t));
            }
            return tab.values[static_cast<std::size_t>(it - tab.positions.begin())];
          },
          [&](const BlackBox& b) -> XReal { return b.eval(t); },
      },
      f.representation());
}

Function1D negate(const Function1D& f) {
  if (const auto* pl = std::get_if<PiecewiseLinear>(&f.representation())) {
    std::vector<Knot> knots = pl->knots;
    for (auto& k : knots) k.value = -k.value;
    return Function1D::piecewise_linear(std::move(knots));
  }
  if (const auto* pc = std::get_if<PiecewiseConstant>(&f.representation())) {
    std::vector<XReal> pieces;
    std::vector<XReal> points;
    for (const auto& v : pc->piece_values) pieces.push_back(-v);
    for (const auto& v : pc->point_values) points.push_back(-v);
    return Function1D::piecewise_constant(pc->breaks, std::move(pieces), std::move(points));
  }
  throw Error(Errc::inexact_model, "negate requires a piecewise model");
}

Function1D restrict_to_segment(std::function<XReal(const Point&)> g, const Segment& s, const ToleranceConfig& cfg,
                               bool serial) {
  cfg.validate();
  if (s.x.dimension() != s.y.dimension()) throw Error(Errc::dimension_mismatch, "segment endpoints differ in dimension");
  if (s.is_degenerate()) throw Error(Errc::degenerate_segment, "restriction needs x != y");
  return Function1D::blackbox([g = std::move(g), s](const Rational& t) { return g(segment_point(s, t)); },
                              Rational(0), Rational(1), serial);
}

namespace {

SemicontinuityReport audit(const detail::PiecewiseView& v) {
  SemicontinuityReport r;
  const std::size_t n = v.knot_count();
  for (std::size_t i = 0; i < n; ++i) {
    const XReal& value = v.values()[i];
    bool lsc_ok = true;
    bool usc_ok = true;
    if (i > 0) {
      const XReal& from_left = v.pieces()[i - 1].right_limit;
      lsc_ok = lsc_ok && value <= from_left;
      usc_ok = usc_ok && value >= from_left;
    }
    if (i + 1 < n) {
      const XReal& from_right = v.pieces()[i].left_limit;
      lsc_ok = lsc_ok && value <= from_right;
      usc_ok = usc_ok && value >= from_right;
    }
    if (!lsc_ok) r.offending_points_lsc.push_back(v.knots()[i]);
    if (!usc_ok) r.offending_points_usc.push_back(v.knots()[i]);
  }
  r.is_lsc = r.offending_points_lsc.empty();
  r.is_usc = r.offending_points_usc.empty();
  return r;
}

}  // namespace

SemicontinuityReport check_semicontinuity(const Function1D& f) { return audit(detail::make_view(f)); }

SemicontinuityReport check_semicontinuity(const Function1D& f, const Rational& lo_in, const Rational& hi_in) {
  const Rational lo = canonical(lo_in), hi = canonical(hi_in);
  return audit(detail::slice(detail::make_view(f), lo, hi));
}

std::vector<std::pair<Rational, Rational>> cantor_intervals(int depth) {
  if (depth < 0 || depth > 20) throw Error(Errc::parameter_range, "Cantor depth must be in [0, 20]");
  std::int64_t scale = 1;
  for (int i = 0; i < depth; ++i) scale *= 3;
  // Integer endpoints on the 3^-depth lattice; splitting keeps them sorted.
  std::vector<std::pair<std::int64_t, std::int64_t>> current{{0, scale}};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::pair<std::int64_t, std::int64_t>> next;
    next.reserve(current.size() * 2);
    for (auto [a, b] : current) {
      std::int64_t third = (b - a) / 3;
      next.emplace_back(a, a + third);
      next.emplace_back(b - third, b);
    }
    current = std::move(next);
  }
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(current.size());
  const mpz_class den(std::to_string(scale));
  for (auto [a, b] : current) {
    Rational l(mpz_class(std::to_string(a)), den);
    Rational r(mpz_class(std::to_string(b)), den);
    l.canonicalize();
    r.canonicalize();
    out.emplace_back(std::move(l), std::move(r));
  }
  return out;
}

Function1D generate_cantor(int depth, CantorMode mode) {
  if (depth < 1 || depth > 20) throw Error(Errc::parameter_range, "Cantor depth must be in [1, 20]");
  auto intervals = cantor_intervals(depth);
  const bool set_mode = mode == CantorMode::set;
  const XReal inside = set_mode ? XReal(1) : XReal(0);
  const XReal outside = set_mode ? XReal(0) : XReal(1);

  std::vector<Rational> breaks;
  std::vector<XReal> pieces;
  std::vector<XReal> points;
  breaks.reserve(intervals.size() * 2);
  std::size_t gaps = 0;
  for (std::size_t m = 0; m < intervals.size(); ++m) {
    if (m > 0) {
      pieces.push_back(outside);
      ++gaps;
    }
    breaks.push_back(intervals[m].first);
    breaks.push_back(intervals[m].second);
    pieces.push_back(inside);
  }
  // Endpoints belong to the closed set C_k.
  points.assign(breaks.size(), inside);
  if (gaps != (std::size_t{1} << depth) - 1) throw Error(Errc::consistency, "unexpected Cantor gap count");
  return Function1D::piecewise_constant(std::move(breaks), std::move(pieces), std::move(points));
}

InfimumResult infimum_on(const Function1D& f, const RationalInterval& interval) {
  auto view = detail::slice(detail::make_view(f), interval.lo, interval.hi);
  auto ext = detail::infimum(view, interval.lo_closed, interval.hi_closed);
  return {ext.value, ext.attained_interior};
}

bool ClosedSet1D::contains(const Rational& t) const {
  auto it = std::upper_bound(components.begin(), components.end(), t,
                             [](const Rational& x, const ClosedInterval& c) { return x < c.lo; });
  return it != components.begin() && t <= std::prev(it)->hi;
}

ArgmaxResult argmax_set(const Function1D& f, const Rational& x0_in, const Rational& y0_in) {
  const Rational x0 = canonical(x0_in), y0 = canonical(y0_in);
  if (!(x0 < y0)) throw Error(Errc::ordering, "argmax_set requires x0 < y0");
  auto view = detail::slice(detail::make_view(f), x0, y0);
  XReal sup = detail::supremum(view, false, false).value;

  const auto& knots = view.knots();
  auto knot_in = [&](std::size_t i) { return view.values()[i] == sup; };
  auto piece_in = [&](std::size_t j) {
    return view.pieces()[j].is_constant() && view.pieces()[j].left_limit == sup;
  };

  ClosedSet1D h;
  std::vector<Rational> not_closed_at;
  bool open = false;
  Rational start;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const bool in = knot_in(i);
    // `open` here means the previous piece belongs to H.
    if (open && !in) not_closed_at.push_back(knots[i]);
    if (in && !open) {
      start = knots[i];
      open = true;
    }
    if (i + 1 < knots.size()) {
      if (piece_in(i)) {
        if (!in) not_closed_at.push_back(knots[i]);
        if (!open) {
          start = knots[i];
          open = true;
        }
      } else if (open) {
        h.components.push_back({start, knots[i]});
        open = false;
      }
    }
  }
  if (open) h.components.push_back({start, knots.back()});

  if (!not_closed_at.empty()) {
    throw Error(Errc::precondition,
                "points attaining the supremum do not form a closed set (f is not usc there, or f at x0 or y0 "
                "exceeds the supremum over ]x0, y0[)",
                std::move(not_closed_at));
  }
  if (h.empty()) throw Error(Errc::supremum_not_attained, "supremum of f is not attained on the interval");
  return {std::move(sup), std::move(h)};
}

}  // namespace qcvx
