#include <gtest/gtest.h>

#include <algorithm>

#include "qcvx/corpus.hpp"
#include "qcvx/violation_analysis.hpp"
#include "test_support.hpp"

using namespace qcvx;
using qcvx::test::lattice;
using qcvx::test::q;
using qcvx::test::refined_grid;

namespace {

std::vector<Function1D> random_corpus(int n, std::uint64_t first_seed = 1000) {
  std::vector<Function1D> out;
  for (int i = 0; i < n; ++i) out.push_back(corpus::random_piecewise_linear(8, first_seed + i));
  return out;
}

std::vector<std::pair<Rational, Rational>> breakpoint_pairs(const Function1D& f) {
  auto b = f.breakpoints();
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) out.emplace_back(b[i], b[j]);
  return out;
}

}  // namespace

TEST(ViolationSet, Tent) {
  auto d = violation_set(corpus::tent(), q("0"), q("1"));
  EXPECT_EQ(d.threshold, XReal(0));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0], OpenInterval(q("0"), q("1")));
  ASSERT_EQ(d.per_component_checks.size(), 1u);
  EXPECT_TRUE(d.per_component_checks[0].passed());
  EXPECT_TRUE(d.isolated_violations.empty());
  EXPECT_TRUE(d.lsc_warnings.empty());
}

TEST(ViolationSet, CantorComplement) {
  auto d1 = violation_set(generate_cantor(1, CantorMode::complement), q("0"), q("1"));
  ASSERT_EQ(d1.components.size(), 1u);
  EXPECT_EQ(d1.components[0], OpenInterval(q("1/3"), q("2/3")));
  EXPECT_TRUE(d1.per_component_checks[0].passed());

  auto d6 = violation_set(generate_cantor(6, CantorMode::complement), q("0"), q("1"));
  EXPECT_EQ(d6.components.size(), 63u);
  EXPECT_EQ(d6.components.total_length(), q("665/729"));
  // Independent construction: gaps between consecutive C_6 intervals.
  auto c6 = cantor_intervals(6);
  for (std::size_t i = 0; i + 1 < c6.size(); ++i) {
    EXPECT_EQ(d6.components[i], OpenInterval(c6[i].second, c6[i + 1].first));
  }
}

TEST(ViolationSet, MonotoneIsEmptyForEveryPair) {
  auto f = corpus::monotone();
  for (const auto& x : lattice(0, 1, 8)) {
    for (const auto& y : lattice(0, 1, 8)) {
      if (x < y) EXPECT_TRUE(violation_set(f, x, y).components.empty());
    }
  }
}

TEST(ViolationSet, Errors) {
  auto tent = corpus::tent();
  try {
    violation_set(tent, q("1/2"), q("1/2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ordering);
  }
  auto tab = Function1D::tabulated({q("0"), q("1")}, {XReal(0), XReal(0)});
  EXPECT_THROW(violation_set(tab, q("0"), q("1")), Error);
}

TEST(ViolationSet, IsolatedPointFlagsLscFailure) {
  // Spike at 1/2 over a flat zero: the only violating point is isolated.
  auto f = Function1D::piecewise_constant({q("0"), q("1/2"), q("1")}, {XReal(0), XReal(0)},
                                          {XReal(0), XReal(1), XReal(0)});
  auto d = violation_set(f, q("0"), q("1"));
  EXPECT_TRUE(d.components.empty());
  EXPECT_EQ(d.isolated_violations, std::vector<Rational>{q("1/2")});
  EXPECT_EQ(d.lsc_warnings, std::vector<Rational>{q("1/2")});
}

TEST(ViolationSet, BreakpointJoinsQualifyingNeighbours) {
  auto f = Function1D::piecewise_constant({q("0"), q("1/4"), q("1/2"), q("3/4"), q("1")},
                                          {XReal(0), XReal(2), XReal(3), XReal(0)},
                                          {XReal(0), XReal(0), XReal(2), XReal(0), XReal(0)});
  auto d = violation_set(f, q("0"), q("1"));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0], OpenInterval(q("1/4"), q("3/4")));
}

TEST(ViolationSet, InfiniteThresholdGivesEmptySet) {
  auto f = Function1D::piecewise_constant({q("0"), q("1")}, {XReal::plus_infinity()},
                                          {XReal::plus_infinity(), XReal(0)});
  EXPECT_TRUE(violation_set(f, q("0"), q("1")).components.empty());
}

TEST(VerifyComponents, TentAndCorruption) {
  auto tent = corpus::tent();
  auto d = violation_set(tent, q("0"), q("1"));
  auto checks = verify_component_property(tent, d);
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_TRUE(checks[0].endpoints_outside_T && checks[0].interior_strict);

  d.components = normalize({OpenInterval(q("1/4"), q("3/4"))});
  checks = verify_component_property(tent, d);
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_FALSE(checks[0].endpoints_outside_T);
  EXPECT_TRUE(checks[0].interior_strict);
  ASSERT_TRUE(checks[0].offending_point.has_value());
}

TEST(VerifyComponents, CantorComplementDepthOne) {
  auto f = generate_cantor(1, CantorMode::complement);
  auto d = violation_set(f, q("0"), q("1"));
  auto checks = verify_component_property(f, d);
  EXPECT_TRUE(checks.at(0).passed());
  // Independent check on the 1/27 grid.
  for (const auto& t : lattice(0, 1, 27)) {
    if (q("1/3") < t && t < q("2/3")) EXPECT_GT(evaluate(f, t), d.threshold);
  }
  EXPECT_LE(evaluate(f, q("1/3")), d.threshold);
  EXPECT_LE(evaluate(f, q("2/3")), d.threshold);
}

TEST(VerifyComponents, StaleThresholdIsConsistencyError) {
  auto d = violation_set(corpus::tent(), q("0"), q("1"));
  try {
    verify_component_property(corpus::vee(), d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::consistency);
  }
}

TEST(IsQuasiconvex, Examples) {
  EXPECT_TRUE(is_quasiconvex(corpus::vee()).is_quasiconvex);
  EXPECT_FALSE(is_quasiconvex(corpus::vee()).witness_triple.has_value());

  auto tent = is_quasiconvex(corpus::tent());
  ASSERT_FALSE(tent.is_quasiconvex);
  ASSERT_TRUE(tent.witness_triple);
  EXPECT_EQ(tent.witness_triple->x, 0);
  EXPECT_EQ(tent.witness_triple->y, 1);
  EXPECT_EQ(tent.witness_triple->z, q("1/2"));

  EXPECT_TRUE(is_quasiconvex(corpus::monotone()).is_quasiconvex);
  EXPECT_TRUE(is_quasiconvex(corpus::ramp_plateau()).is_quasiconvex);
  EXPECT_TRUE(is_quasiconvex(corpus::constant()).is_quasiconvex);
}

TEST(IsQuasiconvex, CantorSetWitnessFromTheExample) {
  auto f = generate_cantor(2, CantorMode::set);
  EXPECT_FALSE(is_quasiconvex(f).is_quasiconvex);
  EXPECT_EQ(evaluate(f, q("2/5")), XReal(0));
  EXPECT_EQ(evaluate(f, q("4/5")), XReal(0));
  EXPECT_EQ(evaluate(f, q("2/3")), XReal(1));
  auto d = violation_set(f, q("2/5"), q("4/5"));
  // The violating set is the closed interval [2/3, 7/9]: one open component
  // plus the two endpoints, which no open interval can cover.
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0], OpenInterval(q("2/3"), q("7/9")));
  EXPECT_EQ(d.isolated_violations, (std::vector<Rational>{q("2/3"), q("7/9")}));
  EXPECT_EQ(d.lsc_warnings, (std::vector<Rational>{q("2/3"), q("7/9")}));
  EXPECT_FALSE(verify_component_property(f, d).at(0).endpoints_outside_T);
}

TEST(IsQuasiconvex, WitnessRevalidates) {
  for (const auto& f : random_corpus(200)) {
    auto v = is_quasiconvex(f);
    EXPECT_EQ(v.is_quasiconvex, !v.witness_triple.has_value());
    if (!v.witness_triple) continue;
    const auto& w = *v.witness_triple;
    EXPECT_LT(w.x, w.z);
    EXPECT_LT(w.z, w.y);
    EXPECT_GT(evaluate(f, w.z), xreal_max(evaluate(f, w.x), evaluate(f, w.y)));
  }
}

TEST(IsQuasiconvex, InexactRejected) {
  auto f = Function1D::blackbox([](const Rational&) { return XReal(0); }, q("0"), q("1"));
  try {
    is_quasiconvex(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::inexact_model);
  }
}

TEST(ViolationSetProperty, SoundOnRefinedGrid) {
  std::vector<Function1D> fs = random_corpus(60);
  for (int k = 1; k <= 3; ++k) fs.push_back(generate_cantor(k, CantorMode::complement));
  for (const auto& f : fs) {
    for (const auto& [x, y] : breakpoint_pairs(f)) {
      auto d = violation_set(f, x, y);
      for (const auto& t : refined_grid(f, x, y, 3)) {
        if (t == x || t == y) {
          EXPECT_FALSE(d.components.contains(t));
          continue;
        }
        EXPECT_EQ(d.components.contains(t), evaluate(f, t) > d.threshold) << to_string(t);
      }
      for (const auto& c : d.components) {
        EXPECT_LE(x, c.u());
        EXPECT_LE(c.v(), y);
      }
    }
  }
}

TEST(ViolationSetProperty, ComponentChecksPassUnderLsc) {
  std::vector<Function1D> fs = random_corpus(60);
  for (int k = 1; k <= 4; ++k) fs.push_back(generate_cantor(k, CantorMode::complement));
  for (const auto& f : fs) {
    ASSERT_TRUE(check_semicontinuity(f).is_lsc);
    for (const auto& [x, y] : breakpoint_pairs(f)) {
      auto d = violation_set(f, x, y);
      for (const auto& c : verify_component_property(f, d)) EXPECT_TRUE(c.passed());
      EXPECT_TRUE(d.isolated_violations.empty());
    }
  }
}

TEST(WitnessCheck, Examples) {
  auto v = witness_check_cor2(corpus::vee(), q("0"), q("1"));
  EXPECT_TRUE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_LE(evaluate(corpus::vee(), *v.witness), v.threshold);
  EXPECT_FALSE(witness_check_cor2(corpus::tent(), q("0"), q("1")).holds);
}

TEST(WitnessCheck, CantorSetDepthThreeAllGridPairs) {
  auto f = generate_cantor(3, CantorMode::set);
  EXPECT_FALSE(is_quasiconvex(f).is_quasiconvex);
  auto grid = lattice(0, 1, 81);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      auto w = witness_check_cor2(f, grid[i], grid[j]);
      ASSERT_TRUE(w.holds) << to_string(grid[i]) << " " << to_string(grid[j]);
      EXPECT_LE(evaluate(f, *w.witness), w.threshold);
    }
  }
}

TEST(WitnessCheck, ContrapositiveOnRandomCorpus) {
  for (const auto& f : random_corpus(150)) {
    if (is_quasiconvex(f).is_quasiconvex) continue;
    bool found = false;
    for (const auto& [x, y] : breakpoint_pairs(f)) {
      auto d = violation_set(f, x, y);
      if (d.components.empty()) continue;
      found = true;
      EXPECT_FALSE(witness_check_cor2(f, d.components[0].u(), d.components[0].v()).holds);
    }
    EXPECT_TRUE(found);
  }
}

TEST(WitnessCheck, ForwardFormOnRandomCorpus) {
  // Pairs: breakpoints, piece midpoints and every threshold crossing found
  // by violation_set on breakpoint pairs.
  int qc_by_criterion = 0;
  for (const auto& f : random_corpus(150)) {
    auto b = f.breakpoints();
    std::vector<Rational> cand = b;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) cand.push_back((b[i] + b[i + 1]) / 2);
    for (const auto& [x, y] : breakpoint_pairs(f)) {
      for (const auto& c : violation_set(f, x, y).components) {
        cand.push_back(c.u());
        cand.push_back(c.v());
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    bool all = true;
    for (std::size_t i = 0; i < cand.size() && all; ++i)
      for (std::size_t j = i + 1; j < cand.size() && all; ++j) all = witness_check_cor2(f, cand[i], cand[j]).holds;
    EXPECT_EQ(all, is_quasiconvex(f).is_quasiconvex);
    qc_by_criterion += all;
  }
  EXPECT_GT(qc_by_criterion, 0);
}

TEST(WitnessCheck, BreakpointPairsAloneAreNotEnough) {
  // Every breakpoint/midpoint pair has a witness, yet f is not quasiconvex:
  // the failing pair (u, v) has f(u) = f(v) = 4 strictly inside pieces.
  auto f = Function1D::piecewise_linear({{q("0"), q("29/4")},
                                         {q("15/32"), q("8")},
                                         {q("51/64"), q("8/3")},
                                         {q("13/16"), q("10")},
                                         {q("59/64"), q("4")},
                                         {q("1"), q("17/2")}});
  auto b = f.breakpoints();
  std::vector<Rational> cand = b;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) cand.push_back((b[i] + b[i + 1]) / 2);
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (cand[i] < cand[j]) EXPECT_TRUE(witness_check_cor2(f, cand[i], cand[j]).holds);
  EXPECT_FALSE(is_quasiconvex(f).is_quasiconvex);
  auto d = violation_set(f, q("51/64"), q("59/64"));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_FALSE(witness_check_cor2(f, d.components[0].u(), d.components[0].v()).holds);
}

TEST(ConvexityViolation, Examples) {
  auto tent = corpus::tent();
  auto a = convexity_violation_set(tent, q("0"), q("1"));
  ASSERT_EQ(a.t_components.size(), 1u);
  EXPECT_EQ(a.t_components[0], OpenInterval(q("0"), q("1")));
  EXPECT_TRUE(convexity_violation_set(corpus::vee(), q("0"), q("1")).t_components.empty());
  EXPECT_TRUE(convexity_violation_set(tent, q("0"), q("1/2")).t_components.empty());
}

TEST(ConvexityViolation, ParameterMultipliesX) {
  // f = 0 on [0,1/2], rising to 1 at 1; the chord from (1/4, 0) to (1, 1)
  // lies above f except at the ends, so use a bump near x instead.
  auto f = Function1D::piecewise_linear({{q("0"), q("0")}, {q("1/4"), q("1")}, {q("1/2"), q("0")}, {q("1"), q("0")}});
  auto c = convexity_violation_set(f, q("0"), q("1"));
  ASSERT_EQ(c.t_components.size(), 1u);
  // z = t*0 + (1-t)*1 in ]0, 1/2[ means t in ]1/2, 1[.
  EXPECT_EQ(c.t_components[0], OpenInterval(q("1/2"), q("1")));
  for (const auto& chk : verify_convexity_components(f, c)) EXPECT_TRUE(chk.passed());
}

TEST(ConvexityViolation, MonotoneTEmptyButTconvNot) {
  auto mono = corpus::monotone_concave();
  EXPECT_TRUE(is_quasiconvex(mono).is_quasiconvex);
  for (const auto& [x, y] : breakpoint_pairs(mono)) EXPECT_TRUE(violation_set(mono, x, y).components.empty());
  auto c = convexity_violation_set(mono, q("0"), q("1"));
  ASSERT_FALSE(c.t_components.empty());
  EXPECT_EQ(c.t_components[0], OpenInterval(q("0"), q("1")));
}

TEST(ConvexityViolation, InfiniteEndpointUnsupported) {
  auto f = Function1D::piecewise_constant({q("0"), q("1")}, {XReal(0)}, {XReal::plus_infinity(), XReal(0)});
  try {
    convexity_violation_set(f, q("0"), q("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_chord);
  }
}

TEST(ConvexityViolationProperty, SoundOnGrid) {
  for (const auto& f : random_corpus(60)) {
    for (const auto& [x, y] : breakpoint_pairs(f)) {
      auto c = convexity_violation_set(f, x, y);
      const Rational fx = evaluate(f, x).value();
      const Rational fy = evaluate(f, y).value();
      for (const auto& t : lattice(0, 1, 48)) {
        Rational z = t * x + (1 - t) * y;
        bool above = evaluate(f, z) > XReal(Rational(t * fx + (1 - t) * fy));
        EXPECT_EQ(c.t_components.contains(t), above) << to_string(t);
      }
      for (const auto& chk : verify_convexity_components(f, c)) EXPECT_TRUE(chk.passed());
    }
  }
}

TEST(ViolationSet, NonCanonicalInputsAndNonKnotPairs) {
  auto concave = corpus::monotone_concave();
  for (long i = 0; i <= 16; ++i) {
    for (long j = i + 1; j <= 16; ++j) {
      Rational x(i, 16), y(j, 16);  // deliberately not canonicalized
      auto d = violation_set(concave, x, y);
      EXPECT_EQ(d.x, ratio(i, 16));
      EXPECT_TRUE(d.components.empty()) << i << " " << j;
      EXPECT_NO_THROW(convexity_violation_set(concave, x, y));
    }
  }
}
