#include "orspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "orspan/error.hpp"

namespace orspan {

bool approx_equal(double a, double b, double rel_tol) noexcept {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel_tol * scale;
}

namespace {

void require_finite(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
      throw Error(ErrorCode::invalid_argument,
                  "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

void require_distinct(const std::vector<Point>& pts) {
  std::vector<Index> order(pts.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && a < b);
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Point& p = pts[order[k]];
    for (std::size_t m = k + 1; m < order.size(); ++m) {
      const Point& q = pts[order[m]];
      if (q.x - p.x > kDuplicateTol) break;
      if (std::abs(q.y - p.y) <= kDuplicateTol) {
        const Index a = std::min(order[k], order[m]);
        const Index b = std::max(order[k], order[m]);
        throw Error(ErrorCode::duplicate_point,
                    "points " + std::to_string(a) + " and " + std::to_string(b) +
                        " coincide");
      }
    }
  }
}

double raw_distance(const Point& p, const Point& q) noexcept {
  return std::hypot(p.x - q.x, p.y - q.y);
}

}  // namespace

PointSet::PointSet(int dim, std::vector<Point> points)
    : dim_(dim), points_(std::make_shared<const std::vector<Point>>(std::move(points))) {
  if (dim_ == 1) {
    const auto& pts = *points_;
    sorted_ = std::adjacent_find(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
                return !(a.x < b.x);
              }) == pts.end();
  }
}

PointSet PointSet::on_line(std::vector<double> coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (double c : coords) pts.push_back({c, 0.0});
  require_finite(pts);
  require_distinct(pts);
  return PointSet(1, std::move(pts));
}

PointSet PointSet::in_plane(std::vector<Point> points) {
  require_finite(points);
  require_distinct(points);
  return PointSet(2, std::move(points));
}

const Point& PointSet::at(Index i) const {
  check_index(i);
  return (*points_)[i];
}

void PointSet::check_index(Index i) const {
  if (i >= size()) {
    throw Error(ErrorCode::index_out_of_range,
                "index " + std::to_string(i) + " out of range for " +
                    std::to_string(size()) + " points");
  }
}

double distance(const PointSet& points, Index i, Index j) {
  points.check_index(i);
  points.check_index(j);
  if (i == j) throw Error(ErrorCode::invalid_argument, "distance needs two distinct indices");
  return raw_distance(points[i], points[j]);
}

TrianglePick optimal_triangle(const PointSet& points, Index i, Index j) {
  if (points.size() < 3) {
    throw Error(ErrorCode::too_few_points, "no oriented cycle exists for fewer than 3 points");
  }
  const double base = distance(points, i, j);
  TrianglePick best{0, std::numeric_limits<double>::infinity()};
  for (Index k = 0; k < points.size(); ++k) {
    if (k == i || k == j) continue;
    const double perimeter = raw_distance(points[i], points[k]) +
                             raw_distance(points[k], points[j]) + base;
    if (perimeter < best.perimeter) best = {k, perimeter};
  }
  return best;
}

TriangleTable::TriangleTable(const PointSet& points)
    : n_(points.size()), table_(n_ * n_, 0.0) {
  if (n_ < 3) {
    throw Error(ErrorCode::too_few_points, "no oriented cycle exists for fewer than 3 points");
  }
  if (points.dim() == 1) {
    std::vector<Index> order(n_);
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return points.coord(a) < points.coord(b); });
    std::vector<double> xs(n_);
    for (std::size_t r = 0; r < n_; ++r) xs[r] = points.coord(order[r]);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        double perimeter;
        if (b >= a + 2) {
          perimeter = 2.0 * (xs[b] - xs[a]);
        } else {
          perimeter = std::numeric_limits<double>::infinity();
          if (a > 0) perimeter = 2.0 * (xs[b] - xs[a - 1]);
          if (b + 1 < n_) perimeter = std::min(perimeter, 2.0 * (xs[b + 1] - xs[a]));
        }
        table_[order[a] * n_ + order[b]] = perimeter;
        table_[order[b] * n_ + order[a]] = perimeter;
      }
    }
    return;
  }
  for (Index i = 0; i < n_; ++i) {
    for (Index j = i + 1; j < n_; ++j) {
      const double perimeter = optimal_triangle(points, i, j).perimeter;
      table_[i * n_ + j] = perimeter;
      table_[j * n_ + i] = perimeter;
    }
  }
}

}  // namespace orspan
