#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "orspan/error.hpp"
#include "orspan/instances.hpp"
#include "orspan/spanners_1d.hpp"
#include "orspan/spanners_2d.hpp"

using namespace orspan;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invalid_argument;
}

std::vector<Arc> back_of(const OneppbGraph& g) {
  return {g.back_edges().begin(), g.back_edges().end()};
}

}  // namespace

TEST(OneSpanner, Examples) {
  const auto tri = build_1spanner_1d(unit_spaced_points(3));
  EXPECT_EQ(tri.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(build_1spanner_1d(unit_spaced_points(8)).edge_count(), 18u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet p = random_sorted_line(20, seed);
    const auto g = build_1spanner_1d(p);
    EXPECT_EQ(g.edge_count(), 3 * 20 - 6u);
    EXPECT_NEAR(oracle::dilation(p, g.arcs()).dilation, 1.0, 1e-9);
  }
}

TEST(OneSpanner, Preconditions) {
  EXPECT_EQ(code_of([] { build_1spanner_1d(unit_spaced_points(2)); }), ErrorCode::too_few_points);
  EXPECT_EQ(code_of([] { build_1spanner_1d(PointSet::on_line({0, 2, 1})); }),
            ErrorCode::not_sorted);
  EXPECT_EQ(code_of([] { build_1spanner_1d(random_plane(4, 1)); }), ErrorCode::dimension_mismatch);
}

TEST(TwoPage, Examples) {
  EXPECT_NEAR(oriented_dilation(build_2page_2spanner(unit_spaced_points(3))).dilation, 1.0, 1e-12);
  const auto g5 = build_2page_2spanner(unit_spaced_points(5));
  EXPECT_EQ(g5.edge_count(), 7u);
  EXPECT_NEAR(oriented_dilation(g5).dilation, 4.0 / 3.0, 1e-12);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet p = random_sorted_line(30, seed);
    EXPECT_LE(oracle::dilation(p, build_2page_2spanner(p).arcs()).dilation, 2.0 + 1e-9);
  }
}

TEST(Candidates, MatchFullEvaluator) {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution keep(0.7);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + trial % 12;
    const PointSet p = random_sorted_line(n, trial);
    std::vector<OrientedGraph> graphs{build_1spanner_1d(p), build_2page_2spanner(p)};
    // Random subgraph of the 1-spanner.
    std::vector<Arc> sub;
    for (const Arc& a : build_1spanner_1d(p).arcs())
      if (keep(rng)) sub.push_back(a);
    graphs.push_back(OrientedGraph::build(p, sub));
    for (const auto& g : graphs) {
      const auto full = oriented_dilation(g);
      const auto cand = dilation_1d_candidates(g);
      if (!full.finite()) {
        EXPECT_FALSE(cand.finite());
      } else {
        EXPECT_NEAR(cand.dilation, full.dilation, 1e-12 * full.dilation);
      }
    }
  }
  EXPECT_NEAR(dilation_1d_candidates(build_1spanner_1d(random_sorted_line(25, 4))).dilation, 1.0,
              1e-12);
  EXPECT_EQ(code_of([] {
              dilation_1d_candidates(OrientedGraph::build(random_plane(4, 2), std::vector<Arc>{}));
            }),
            ErrorCode::dimension_mismatch);
}

TEST(Candidates, SkipTwoSufficesForOnePage) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const PointSet p = random_sorted_line(n, n);
    enumerate_maximal_1ppb(p, [&](const OneppbGraph& g) {
      EXPECT_NEAR(dilation_1d_candidates(g.graph(), CandidatePairs::skip2_only).dilation,
                  oriented_dilation(g.graph()).dilation, 1e-12);
    });
  }
}

TEST(OneppbGraph, Validation) {
  const PointSet p = unit_spaced_points(6);
  EXPECT_NO_THROW(OneppbGraph::from_back_edges(p, {{5, 0}, {3, 0}, {5, 3}}));
  EXPECT_EQ(code_of([&] { OneppbGraph::from_back_edges(p, {{3, 1}, {4, 2}}); }),
            ErrorCode::crossing_edges);
  EXPECT_EQ(code_of([&] { OneppbGraph::from_back_edges(p, {{0, 2}}); }),
            ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([&] { OneppbGraph::from_back_edges(p, {{2, 1}}); }),
            ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([&] { OneppbGraph::from_back_edges(p, {{2, 0}, {2, 0}}); }),
            ErrorCode::duplicate_edge);
  const auto g = OneppbGraph::from_back_edges(p, {{2, 0}});
  EXPECT_FALSE(g.maximal());
  EXPECT_EQ(g.graph().edge_count(), 6u);
  EXPECT_EQ(code_of([&] { dilation_1ppb(g); }), ErrorCode::not_maximal);
}

TEST(OrientOnePage, Examples) {
  const PointSet p3 = unit_spaced_points(3);
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_EQ(back_of(orient_one_page(p3, tri)), (std::vector<Arc>{{2, 0}}));

  const PointSet p5 = unit_spaced_points(5);
  const std::vector<Edge> fan{{1, 0}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {2, 4}, {0, 4}};
  EXPECT_EQ(back_of(orient_one_page(p5, fan)), (std::vector<Arc>{{2, 0}, {4, 0}, {4, 2}}));

  const std::vector<Edge> missing{{0, 1}, {0, 2}};
  EXPECT_EQ(code_of([&] { orient_one_page(p3, missing); }), ErrorCode::missing_baseline);
  const std::vector<Edge> crossing{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {1, 3}};
  EXPECT_EQ(code_of([&] { orient_one_page(p5, crossing); }), ErrorCode::crossing_edges);
}

TEST(OrientOnePage, NoOrientationBeatsIt) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 4; n <= 7; ++n) {
    const PointSet p = random_sorted_line(n, 40 + n);
    std::vector<std::vector<Arc>> all;
    enumerate_maximal_1ppb(p, [&](const OneppbGraph& g) { all.push_back(back_of(g)); });
    for (int pick = 0; pick < 3; ++pick) {
      const auto& back = all[rng() % all.size()];
      std::vector<Edge> edges;
      for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      for (const Arc& a : back) edges.push_back({a.to, a.from});
      const double oriented = oriented_dilation(orient_one_page(p, edges).graph()).dilation;
      EXPECT_NEAR(min_dilation_over_orientations(p, edges).dilation, oriented, 1e-12);
    }
  }
}

TEST(Greedy, UnitFivePoints) {
  const auto g = greedy_1ppb(unit_spaced_points(5));
  EXPECT_EQ(back_of(g), (std::vector<Arc>{{2, 0}, {4, 0}, {4, 2}}));
  EXPECT_DOUBLE_EQ(dilation_1ppb(g).dilation, 2.0);
  EXPECT_DOUBLE_EQ(oriented_dilation(g.graph()).dilation, 2.0);
}

TEST(Greedy, WorstCaseInstance) {
  const double eps = 0.01;
  const auto g = greedy_1ppb(greedy_worst_case_points(eps));
  // 1-based (3,1), (5,3), (6,3), (7,3) and the closing (7,1).
  EXPECT_EQ(back_of(g), (std::vector<Arc>{{2, 0}, {4, 2}, {5, 2}, {6, 0}, {6, 2}}));
  const auto r = oriented_dilation(g.graph());
  EXPECT_NEAR(r.dilation, (5 - 7 * eps) / (1 + eps), 1e-12);
  EXPECT_EQ(r.witness, (std::pair<Index, Index>{1, 3}));
}

TEST(Greedy, TrianglePoints) {
  EXPECT_EQ(back_of(greedy_1ppb(unit_spaced_points(3))), (std::vector<Arc>{{2, 0}}));
  EXPECT_EQ(code_of([] { greedy_1ppb(PointSet::on_line({0, 2, 1})); }), ErrorCode::not_sorted);
  EXPECT_EQ(code_of([] { greedy_1ppb(unit_spaced_points(2)); }), ErrorCode::too_few_points);
}

TEST(Greedy, MaximalAndBoundedOnRandomSets) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 60;
    const PointSet p = random_sorted_line(n, seed, -5.0, 5.0);
    const auto g = greedy_1ppb(p);
    EXPECT_TRUE(g.maximal());
    EXPECT_LE(dilation_1ppb(g).dilation, 5.0 + 1e-9);
  }
}

TEST(Greedy, MatchesGreedyTriangulationOnArc) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PointSet line = random_sorted_line(6 + seed % 5, seed);
    const auto g = greedy_1ppb(line);
    const Triangulation t = greedy_triangulation(wrap_on_arc(line, 1.0));
    std::vector<Edge> expected;
    for (Index i = 0; i + 1 < line.size(); ++i) expected.push_back({i, i + 1});
    for (const Arc& a : g.back_edges()) expected.push_back({a.to, a.from});
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(std::vector<Edge>(t.edges().begin(), t.edges().end()), expected);
  }
}

TEST(LinearDilation, Examples) {
  const auto top = OneppbGraph::from_back_edges(unit_spaced_points(5), {{2, 0}, {4, 2}, {4, 0}});
  const auto r = dilation_1ppb(top);
  EXPECT_DOUBLE_EQ(r.dilation, 2.0);
  EXPECT_EQ(r.witness, (std::pair<Index, Index>{1, 3}));

  const double eps = 0.01;
  const auto near_one = OneppbGraph::from_back_edges(near_one_spanner_points(eps), {{2, 0}, {4, 2}, {4, 0}});
  EXPECT_NEAR(dilation_1ppb(near_one).dilation, 1 + eps, 1e-12);
}

TEST(LinearDilation, MatchesOracleOnEveryMaximalGraph) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = 3 + seed;
    const PointSet p = random_sorted_line(n, 90 + seed);
    enumerate_maximal_1ppb(p, [&](const OneppbGraph& g) {
      const double fast = dilation_1ppb(g).dilation;
      EXPECT_NEAR(fast, oracle::dilation(p, g.graph().arcs()).dilation, 1e-12 * fast);
    });
  }
}

TEST(Enumeration, CountsAndUniqueness) {
  for (std::size_t n = 3; n <= 10; ++n) {
    std::set<std::vector<Arc>> seen;
    std::size_t count = 0;
    enumerate_maximal_1ppb(unit_spaced_points(n), [&](const OneppbGraph& g) {
      ++count;
      EXPECT_TRUE(g.maximal());
      seen.insert(back_of(g));
    });
    EXPECT_EQ(count, oracle::catalan(static_cast<unsigned>(n - 2))) << n;
    EXPECT_EQ(seen.size(), count);
    if (n <= 8) EXPECT_EQ(seen, oracle::all_maximal_back_edge_sets(n));
  }
}

TEST(Enumeration, FiveGraphsOnFivePoints) {
  std::vector<std::vector<Arc>> order;
  enumerate_maximal_1ppb(unit_spaced_points(5), [&](const OneppbGraph& g) { order.push_back(back_of(g)); });
  EXPECT_EQ(order.size(), 5u);
  std::vector<std::vector<Arc>> again;
  enumerate_maximal_1ppb(unit_spaced_points(5), [&](const OneppbGraph& g) { again.push_back(back_of(g)); });
  EXPECT_EQ(order, again);
}

TEST(Enumeration, Guard) {
  EXPECT_EQ(code_of([] { enumerate_maximal_1ppb(unit_spaced_points(15), [](const OneppbGraph&) {}); }),
            ErrorCode::guard_exceeded);
  EXPECT_EQ(code_of([] { enumerate_maximal_1ppb(unit_spaced_points(8), [](const OneppbGraph&) {}, 7); }),
            ErrorCode::guard_exceeded);
}
