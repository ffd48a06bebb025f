#include <gtest/gtest.h>

#include "qcvx/corpus.hpp"
#include "qcvx/oracle.hpp"
#include "qcvx/violation_analysis.hpp"
#include "test_support.hpp"

using namespace qcvx;
using qcvx::test::q;

namespace {

ToleranceConfig grid(int n) {
  ToleranceConfig cfg;
  cfg.grid_points = n;
  return cfg;
}

OpenIntervalSet set_of(std::initializer_list<std::pair<const char*, const char*>> ivs) {
  std::vector<OpenInterval> raw;
  for (const auto& [u, v] : ivs) raw.emplace_back(q(u), q(v));
  return normalize(raw);
}

}  // namespace

TEST(OracleGrid, UniformPlusBreakpoints) {
  auto f = generate_cantor(2, CantorMode::set);
  auto g = oracle_grid(f, q("0"), q("1"), grid(5));
  EXPECT_TRUE(g.includes_breakpoints);
  EXPECT_TRUE(g.exact_comparisons);
  for (const auto& b : f.breakpoints()) EXPECT_TRUE(std::binary_search(g.points.begin(), g.points.end(), b));
  for (const char* u : {"0", "1/4", "1/2", "3/4", "1"}) {
    EXPECT_TRUE(std::binary_search(g.points.begin(), g.points.end(), q(u)));
  }
  EXPECT_TRUE(std::is_sorted(g.points.begin(), g.points.end()));
  EXPECT_EQ(std::adjacent_find(g.points.begin(), g.points.end()), g.points.end());
}

TEST(OracleQuasiconvex, Examples) {
  auto tent = oracle_quasiconvex(corpus::tent(), grid(101));
  EXPECT_FALSE(tent.is_quasiconvex_on_grid);
  bool has_canonical = false;
  for (const auto& t : tent.violating_triples) {
    auto p = tent.positions(t);
    if (p.x == 0 && p.y == 1 && p.z == q("1/2")) has_canonical = true;
  }
  EXPECT_TRUE(has_canonical);

  auto vee = oracle_quasiconvex(corpus::vee(), grid(101));
  EXPECT_TRUE(vee.is_quasiconvex_on_grid);
  EXPECT_TRUE(vee.violating_triples.empty());
  EXPECT_EQ(vee.violation_count, 0u);

  EXPECT_FALSE(oracle_quasiconvex(generate_cantor(3, CantorMode::set), grid(82)).is_quasiconvex_on_grid);
}

TEST(OracleQuasiconvex, TriplesRevalidate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto f = corpus::random_piecewise_linear(8, 70 + seed);
    auto v = oracle_quasiconvex(f, grid(41), 200);
    EXPECT_LE(v.violating_triples.size(), 200u);
    EXPECT_GE(v.violation_count, v.violating_triples.size());
    for (const auto& t : v.violating_triples) {
      auto p = v.positions(t);
      EXPECT_LT(p.x, p.z);
      EXPECT_LT(p.z, p.y);
      EXPECT_GT(evaluate(f, p.z), xreal_max(evaluate(f, p.x), evaluate(f, p.y)));
    }
  }
}

TEST(OracleQuasiconvex, AgreesWithExactAnalysis) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto f = corpus::random_piecewise_linear(8, 4000 + seed);
    EXPECT_EQ(oracle_quasiconvex(f, grid(51), 1).is_quasiconvex_on_grid, is_quasiconvex(f).is_quasiconvex) << seed;
  }
  for (int k = 1; k <= 3; ++k) {
    for (auto mode : {CantorMode::set, CantorMode::complement}) {
      auto f = generate_cantor(k, mode);
      EXPECT_EQ(oracle_quasiconvex(f, grid(11), 1).is_quasiconvex_on_grid, is_quasiconvex(f).is_quasiconvex);
    }
  }
}

TEST(OracleQuasiconvex, BlackBoxUsesEpsilon) {
  auto bump = Function1D::blackbox(
      [](const Rational& t) { return XReal(t == ratio(1, 2) ? ratio(1, 100000) * ratio(1, 100000) : Rational(0)); },
      q("0"), q("1"));
  auto cfg = grid(11);
  auto v = oracle_quasiconvex(bump, cfg);
  EXPECT_FALSE(v.grid.exact_comparisons);
  EXPECT_TRUE(v.is_quasiconvex_on_grid);  // the bump is below float_epsilon
  cfg.float_epsilon = 0;
  EXPECT_FALSE(oracle_quasiconvex(bump, cfg).is_quasiconvex_on_grid);
}

TEST(OracleQuasiconvex, TabulatedUsesSamples) {
  auto f = Function1D::tabulated({q("0"), q("1/3"), q("1")}, {XReal(0), XReal(1), XReal(0)});
  auto v = oracle_quasiconvex(f, grid(201));
  EXPECT_EQ(v.grid.points.size(), 3u);
  EXPECT_FALSE(v.is_quasiconvex_on_grid);
  EXPECT_EQ(v.violation_count, 1u);
}

TEST(OracleQuasiconvex, SegmentRestriction) {
  // g(u, v) = -(u^2 + v^2) is quasiconcave; restricted to a segment through
  // the origin it has an interior maximum.
  auto g = [](const Point& p) {
    return XReal(Rational(-(p.coordinates[0] * p.coordinates[0] + p.coordinates[1] * p.coordinates[1])));
  };
  auto h = restrict_to_segment(g, Segment{Point{{q("-1"), q("-1")}}, Point{{q("1"), q("1")}}}, grid(21));
  EXPECT_FALSE(oracle_quasiconvex(h, grid(21)).is_quasiconvex_on_grid);
  auto convex = [](const Point& p) { return XReal(Rational(p.coordinates[0] * p.coordinates[0])); };
  auto k = restrict_to_segment(convex, Segment{Point{{q("-1")}}, Point{{q("2")}}}, grid(21));
  EXPECT_TRUE(oracle_quasiconvex(k, grid(21)).is_quasiconvex_on_grid);
}

TEST(OracleViolationSet, Examples) {
  auto c1 = oracle_violation_set(generate_cantor(1, CantorMode::complement), q("0"), q("1"), grid(28));
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_LE(abs(Rational(c1[0].u() - q("1/3"))), q("1/27"));
  EXPECT_LE(abs(Rational(c1[0].v() - q("2/3"))), q("1/27"));

  auto m = corpus::monotone();
  EXPECT_TRUE(oracle_violation_set(m, q("0"), q("1"), grid(51)).empty());
  EXPECT_TRUE(oracle_violation_set(m, q("1/4"), q("1/2"), grid(51)).empty());

  auto t = oracle_violation_set(corpus::tent(), q("0"), q("1"), grid(51));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], OpenInterval(q("0"), q("1")));
}

TEST(DiffReport, Examples) {
  auto exact = set_of({{"1/3", "2/3"}});
  EXPECT_TRUE(diff_report(exact, set_of({{"9/27", "18/27"}}), q("1/27")).consistent);
  EXPECT_TRUE(diff_report(OpenIntervalSet{}, OpenIntervalSet{}, q("1/27")).consistent);
  auto missed = diff_report(exact, OpenIntervalSet{}, q("1/27"));
  EXPECT_FALSE(missed.consistent);
  ASSERT_EQ(missed.discrepancies.size(), 1u);
  EXPECT_EQ(missed.discrepancies[0].kind, Discrepancy::Kind::missed);
}

TEST(DiffReport, SpuriousAndShortComponents) {
  auto exact = set_of({{"1/3", "2/3"}});
  auto spurious = diff_report(exact, set_of({{"1/3", "2/3"}, {"4/5", "9/10"}}), q("1/27"));
  EXPECT_FALSE(spurious.consistent);
  EXPECT_EQ(spurious.discrepancies.at(0).kind, Discrepancy::Kind::spurious);
  // Components no longer than 2*slack may be missed by a grid.
  EXPECT_TRUE(diff_report(set_of({{"10/27", "11/27"}}), OpenIntervalSet{}, q("1/27")).consistent);
}

TEST(DiffReport, ExactVersusOracleOnCorpus) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto f = corpus::random_piecewise_linear(8, 800 + seed);
    auto b = f.breakpoints();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        auto cfg = grid(65);
        auto g = oracle_grid(f, b[i], b[j], cfg).points;
        Rational gap = 0;
        for (std::size_t k = 1; k < g.size(); ++k) gap = std::max(gap, Rational(g[k] - g[k - 1]));
        auto d = violation_set(f, b[i], b[j]);
        auto r = diff_report(d, oracle_violation_set(f, b[i], b[j], cfg), gap);
        EXPECT_TRUE(r.consistent) << seed << " " << to_string(b[i]) << " " << to_string(b[j]);
      }
    }
  }
}
