#include "orspan/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "orspan/error.hpp"

namespace orspan {

namespace {

std::vector<double> distinct_sorted(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> xs;
  xs.reserve(n);
  while (xs.size() < n) {
    xs.push_back(dist(rng));
    if (xs.size() == n) {
      std::sort(xs.begin(), xs.end());
      // Redraw whatever lands too close to a neighbour.
      const auto close = [](double a, double b) { return b - a <= kDuplicateTol; };
      xs.erase(std::unique(xs.begin(), xs.end(), close), xs.end());
    }
  }
  return xs;
}

}  // namespace

PointSet random_sorted_line(std::size_t n, std::uint64_t seed, double lo, double hi) {
  if (!(lo < hi)) throw Error(ErrorCode::invalid_argument, "need lo < hi");
  std::mt19937_64 rng(seed);
  return PointSet::on_line(distinct_sorted(n, rng, lo, hi));
}

PointSet random_plane(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const Point p{dist(rng), dist(rng)};
    const bool clash = std::any_of(pts.begin(), pts.end(), [&](const Point& q) {
      return std::abs(p.x - q.x) <= kDuplicateTol && std::abs(p.y - q.y) <= kDuplicateTol;
    });
    if (!clash) pts.push_back(p);
  }
  return PointSet::in_plane(std::move(pts));
}

PointSet random_convex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<double> angles = distinct_sorted(n, rng, 0.0, 2.0 * std::numbers::pi);
  std::vector<Point> pts;
  pts.reserve(n);
  for (double a : angles) pts.push_back({std::cos(a), std::sin(a)});
  return PointSet::in_plane(std::move(pts));
}

PointSet wrap_on_arc(const PointSet& line, double radius) {
  if (line.dim() != 1) throw Error(ErrorCode::dimension_mismatch, "a 1D point set is required");
  if (!(radius > 0.0)) throw Error(ErrorCode::invalid_argument, "radius must be positive");
  std::vector<Point> pts;
  pts.reserve(line.size());
  for (Index i = 0; i < line.size(); ++i) {
    const double angle = line.coord(i) / radius;
    pts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return PointSet::in_plane(std::move(pts));
}

}  // namespace orspan
