#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qcvx/core_types.hpp"
#include "qcvx/function_model.hpp"
#include "qcvx/interval_set.hpp"
#include "qcvx/violation_analysis.hpp"

// Brute-force checks that evaluate the defining inequalities directly on a
// grid. Nothing here shares code with the exact analyzers beyond evaluate().

namespace qcvx {

struct OracleGrid {
  std::vector<Rational> points;  // sorted, distinct
  int uniform_points = 0;
  bool includes_breakpoints = false;
  bool exact_comparisons = true;  // false for black boxes (epsilon margin)
};

struct GridTriple {
  std::uint32_t x;
  std::uint32_t y;
  std::uint32_t z;
};

struct OracleVerdict {
  bool is_quasiconvex_on_grid = true;
  // Index triples into grid.points with x < z < y; at most max_triples kept.
  std::vector<GridTriple> violating_triples;
  std::uint64_t violation_count = 0;
  OracleGrid grid;

  Triple positions(const GridTriple& t) const;
};

/// Grid used by the oracle on [lo, hi]: N uniform points plus the
/// breakpoints of exact models inside the interval.
OracleGrid oracle_grid(const Function1D& f, const Rational& lo, const Rational& hi, const ToleranceConfig& cfg);

OracleVerdict oracle_quasiconvex(const Function1D& f, const ToleranceConfig& cfg,
                                 std::size_t max_triples = std::numeric_limits<std::size_t>::max());

/// Maximal runs of grid points with f > max{f(x), f(y)}, each widened to the
/// open interval between the neighbouring unmarked grid points.
OpenIntervalSet oracle_violation_set(const Function1D& f, const Rational& x, const Rational& y,
                                     const ToleranceConfig& cfg);

struct Discrepancy {
  enum class Kind { spurious, missed };
  Kind kind;
  Rational u;
  Rational v;
};

struct DiffReport {
  bool consistent = true;
  std::vector<Discrepancy> discrepancies;
};

/// Every approximate interval must lie within Hausdorff distance `slack` of
/// an exact component, and every exact component longer than 2*slack must be
/// matched by an approximate interval.
DiffReport diff_report(const OpenIntervalSet& exact, const OpenIntervalSet& approx, const Rational& slack);
DiffReport diff_report(const ViolationDecomposition& exact, const OpenIntervalSet& approx, const Rational& slack);

}  // namespace qcvx
