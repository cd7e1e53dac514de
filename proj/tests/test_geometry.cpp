#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "orspan/error.hpp"
#include "orspan/geometry.hpp"
#include "orspan/instances.hpp"
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

}  // namespace

TEST(PointSet, DetectsSortedness) {
  EXPECT_TRUE(PointSet::on_line({0, 1, 2}).sorted_ascending());
  EXPECT_FALSE(PointSet::on_line({1, 0, 2}).sorted_ascending());
  EXPECT_EQ(PointSet::on_line({0, 1, 2}).dim(), 1);
  EXPECT_EQ(PointSet::in_plane({{0, 0}, {1, 1}}).dim(), 2);
}

TEST(PointSet, RejectsDuplicatesAndNonFinite) {
  EXPECT_EQ(code_of([] { PointSet::on_line({0, 1, 1}); }), ErrorCode::duplicate_point);
  EXPECT_EQ(code_of([] { PointSet::on_line({0, 1, 1 + 1e-13}); }), ErrorCode::duplicate_point);
  EXPECT_EQ(code_of([] { PointSet::in_plane({{0, 0}, {3, 4}, {0, 0}}); }),
            ErrorCode::duplicate_point);
  EXPECT_EQ(code_of([] { PointSet::on_line({0, NAN}); }), ErrorCode::invalid_argument);
  EXPECT_NO_THROW(PointSet::in_plane({{0, 0}, {0, 1}}));
}

TEST(PointSet, CopiesShareStorage) {
  const PointSet a = PointSet::on_line({0, 1, 2});
  const PointSet b = a;
  EXPECT_EQ(&a[0], &b[0]);
}

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(distance(PointSet::on_line({0, 3}), 0, 1), 3.0);
  EXPECT_DOUBLE_EQ(distance(PointSet::in_plane({{0, 0}, {3, 4}}), 0, 1), 5.0);
  const PointSet p = PointSet::on_line({0, 3});
  EXPECT_EQ(code_of([&] { distance(p, 0, 2); }), ErrorCode::index_out_of_range);
  EXPECT_EQ(code_of([&] { distance(p, 1, 1); }), ErrorCode::invalid_argument);
}

TEST(OptimalTriangle, LineExamples) {
  const PointSet p = PointSet::on_line({0, 1, 2});
  TrianglePick t = optimal_triangle(p, 0, 2);
  EXPECT_EQ(t.third, 1u);
  EXPECT_DOUBLE_EQ(t.perimeter, 4.0);
  t = optimal_triangle(p, 0, 1);
  EXPECT_EQ(t.third, 2u);
  EXPECT_DOUBLE_EQ(t.perimeter, 4.0);
}

TEST(OptimalTriangle, K4CornersPickCentre) {
  const PointSet k4 = make_k4_fixture(1.0);
  const TrianglePick t = optimal_triangle(k4, 0, 1);
  EXPECT_EQ(t.third, 2u);
  EXPECT_NEAR(t.perimeter, 1.0 + 2.0 / std::sqrt(3.0), 1e-12);
}

TEST(OptimalTriangle, TiesPickSmallestIndex) {
  // Points 0 and 3 are symmetric thirds for the pair (1, 2).
  const PointSet p = PointSet::on_line({0, 1, 2, 3});
  EXPECT_EQ(optimal_triangle(p, 1, 2).third, 0u);
}

TEST(OptimalTriangle, NeedsThreePoints) {
  const PointSet p = PointSet::on_line({0, 1});
  EXPECT_EQ(code_of([&] { optimal_triangle(p, 0, 1); }), ErrorCode::too_few_points);
  EXPECT_EQ(code_of([&] { TriangleTable t(p); }), ErrorCode::too_few_points);
}

TEST(TriangleTable, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const PointSet& p : {random_sorted_line(12, seed), random_plane(12, seed),
                              PointSet::on_line({5, 1, 9, 3, 7, 2})}) {
      const TriangleTable table(p);
      for (Index i = 0; i < p.size(); ++i) {
        for (Index j = 0; j < p.size(); ++j) {
          if (i == j) continue;
          EXPECT_NEAR(table.perimeter(i, j), oracle::triangle_perimeter(p, i, j), 1e-12);
          EXPECT_NEAR(optimal_triangle(p, i, j).perimeter, oracle::triangle_perimeter(p, i, j),
                      1e-12);
        }
      }
    }
  }
}

TEST(OptimalTriangle, Properties) {
  const PointSet line = random_sorted_line(15, 3);
  for (Index i = 0; i < line.size(); ++i) {
    for (Index j = i + 2; j < line.size(); ++j) {
      // Something lies strictly between: the perimeter is twice the span.
      EXPECT_DOUBLE_EQ(optimal_triangle(line, i, j).perimeter,
                       2.0 * (line.coord(j) - line.coord(i)));
    }
  }
  const PointSet p = random_plane(10, 4);
  std::vector<Point> moved;
  const double c = std::cos(0.7), s = std::sin(0.7);
  for (const Point& q : p.points()) moved.push_back({3.0 * (c * q.x - s * q.y) + 5, 3.0 * (s * q.x + c * q.y) - 2});
  const PointSet m = PointSet::in_plane(moved);
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = i + 1; j < p.size(); ++j) {
      const double t = optimal_triangle(p, i, j).perimeter;
      EXPECT_GE(t, 2.0 * distance(p, i, j));
      EXPECT_NEAR(optimal_triangle(m, i, j).perimeter, 3.0 * t, 1e-9);
    }
  }
}

TEST(Tolerance, ApproxEqual) {
  EXPECT_TRUE(approx_equal(1.0, 1.0 + 1e-10));
  EXPECT_FALSE(approx_equal(1.0, 1.0 + 1e-8));
  EXPECT_FALSE(approx_equal(1.0, INFINITY));
  EXPECT_TRUE(approx_equal(INFINITY, INFINITY));
}
