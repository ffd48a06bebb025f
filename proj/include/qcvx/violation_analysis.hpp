#pragma once

#include <optional>
#include <vector>

#include "qcvx/core_types.hpp"
#include "qcvx/function_model.hpp"
#include "qcvx/interval_set.hpp"

namespace qcvx {

struct ComponentCheck {
  bool endpoints_outside_T = false;
  bool interior_strict = false;
  // A point refuting whichever check failed.
  std::optional<Rational> offending_point;

  bool passed() const { return endpoints_outside_T && interior_strict; }
};

/// The set T(x,y) = {z in ]x,y[ : f(z) > max{f(x), f(y)}} split into its
/// maximal open intervals ]u_i, v_i[.
struct ViolationDecomposition {
  Rational x;
  Rational y;
  XReal threshold;
  OpenIntervalSet components;
  std::vector<ComponentCheck> per_component_checks;
  // Violating points that no open component covers. Only possible when f
  // fails lower semicontinuity.
  std::vector<Rational> isolated_violations;
  // Points of [x,y] where the lsc audit fails.
  std::vector<Rational> lsc_warnings;
};

ViolationDecomposition violation_set(const Function1D& f, const Rational& x, const Rational& y);

/// Re-derives, for every component, that f(u_i), f(v_i) <= threshold and that
/// f > threshold throughout ]u_i, v_i[. Throws Errc::consistency when the
/// threshold no longer matches f.
std::vector<ComponentCheck> verify_component_property(const Function1D& f, const ViolationDecomposition& d);

struct Triple {
  Rational x;
  Rational y;
  Rational z;
};

struct QuasiconvexityVerdict {
  bool is_quasiconvex = true;
  // x < z < y with f(z) > max{f(x), f(y)} when not quasiconvex.
  std::optional<Triple> witness_triple;
};

QuasiconvexityVerdict is_quasiconvex(const Function1D& f);

struct WitnessCheck {
  bool holds = false;
  XReal threshold;
  XReal infimum;
  bool infimum_attained = false;
  // Interior z with f(z) <= threshold when `holds`.
  std::optional<Rational> witness;
};

/// Whether some z in ]x,y[ has f(z) <= max{f(x), f(y)}.
WitnessCheck witness_check_cor2(const Function1D& f, const Rational& x, const Rational& y);

/// {t in [0,1] : f(t*x + (1-t)*y) > t*f(x) + (1-t)*f(y)}. Note the parameter
/// here multiplies x, so t = 1 is the point x.
struct ConvexityViolation {
  Rational x;
  Rational y;
  OpenIntervalSet t_components;
  std::vector<Rational> isolated_t;
  std::vector<ComponentCheck> per_component_checks;
};

ConvexityViolation convexity_violation_set(const Function1D& f, const Rational& x, const Rational& y);

/// Same two checks as verify_component_property with the chord in place of
/// the constant threshold.
std::vector<ComponentCheck> verify_convexity_components(const Function1D& f, const ConvexityViolation& c);

}  // namespace qcvx
