#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orspan/error.hpp"
#include "orspan/instances.hpp"
#include "orspan/spanners_1d.hpp"

using namespace orspan;

namespace {

double enumeration_min(const PointSet& p) {
  double best = kInfinity;
  enumerate_maximal_1ppb(p, [&](const OneppbGraph& g) {
    best = std::min(best, oracle::dilation(p, g.graph().arcs()).dilation);
  });
  return best;
}

}  // namespace

TEST(Optimal1ppb, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const std::size_t n = 3 + seed % 7;
    const PointSet p = random_sorted_line(n, 500 + seed);
    const Optimal1ppb opt = optimal_1ppb(p);
    EXPECT_TRUE(opt.graph.maximal());
    EXPECT_NEAR(opt.dilation, enumeration_min(p), 1e-12) << "n=" << n;
    EXPECT_NEAR(opt.dilation, oriented_dilation(opt.graph.graph()).dilation, 1e-12);
    EXPECT_LE(opt.dilation, dilation_1ppb(greedy_1ppb(p)).dilation + 1e-12);
    if (n > 3) EXPECT_GT(opt.dilation, 1.0);
  }
}

TEST(Optimal1ppb, Examples) {
  EXPECT_DOUBLE_EQ(optimal_1ppb(unit_spaced_points(5)).dilation, 2.0);
  EXPECT_NEAR(optimal_1ppb(unit_spaced_points(3)).dilation, 1.0, 1e-15);
  const double eps = 0.01;
  const PointSet fig = greedy_worst_case_points(eps);
  const double opt = optimal_1ppb(fig).dilation;
  EXPECT_LE(opt, (2 - 2 * eps) / (1 + eps) + 1e-12);
  EXPECT_LT(opt, dilation_1ppb(greedy_1ppb(fig)).dilation);
  EXPECT_NEAR(optimal_1ppb(near_one_spanner_points(eps)).dilation, 1 + eps, 1e-12);
}

TEST(Optimal1ppb, Deterministic) {
  const PointSet p = random_sorted_line(9, 77);
  const auto a = optimal_1ppb(p);
  const auto b = optimal_1ppb(p);
  EXPECT_TRUE(std::ranges::equal(a.graph.back_edges(), b.graph.back_edges()));
}

TEST(Optimal1ppb, Guards) {
  try {
    optimal_1ppb(unit_spaced_points(13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::guard_exceeded);
  }
  EXPECT_NO_THROW(optimal_1ppb(unit_spaced_points(6), {.max_points = 6}));
  try {
    optimal_1ppb(unit_spaced_points(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_few_points);
  }
}
