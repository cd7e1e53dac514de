#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace orspan {

using Index = std::size_t;

/// Relative tolerance for every comparison between dilation values.
inline constexpr double kRelTol = 1e-9;

/// Two points closer than this (absolute, per coordinate) are duplicates.
inline constexpr double kDuplicateTol = 1e-12;

/// True when `a` and `b` agree within kRelTol relative to the larger magnitude.
bool approx_equal(double a, double b, double rel_tol = kRelTol) noexcept;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Immutable ordered point set in one or two dimensions.
///
/// Indices are stable 0-based handles. Copies share storage, so passing a
/// PointSet by value is cheap. One-dimensional sets store their coordinate in
/// `x` and keep `y == 0`.
class PointSet {
 public:
  /// Builds a 1D set in the given order; throws on duplicates or non-finite
  /// coordinates. Sortedness is detected, not enforced.
  static PointSet on_line(std::vector<double> coords);
  static PointSet in_plane(std::vector<Point> points);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_->size(); }
  bool empty() const noexcept { return points_->empty(); }

  const Point& operator[](Index i) const noexcept { return (*points_)[i]; }
  const Point& at(Index i) const;
  std::span<const Point> points() const noexcept { return *points_; }

  /// 1D coordinate of point `i` (the x coordinate for 2D sets).
  double coord(Index i) const noexcept { return (*points_)[i].x; }

  /// Only meaningful for dim() == 1: coordinates strictly increase with index.
  bool sorted_ascending() const noexcept { return sorted_; }

  void check_index(Index i) const;

 private:
  PointSet(int dim, std::vector<Point> points);

  int dim_ = 1;
  std::shared_ptr<const std::vector<Point>> points_;
  bool sorted_ = false;
};

/// Euclidean distance |p_i - p_j|. Requires i != j.
double distance(const PointSet& points, Index i, Index j);

/// Minimum-perimeter triangle through a fixed pair.
struct TrianglePick {
  Index third = 0;
  double perimeter = 0.0;
};

/// The optimal oriented triangle through p_i and p_j: the third point that
/// minimizes |p_i - p| + |p - p_j|, smallest index on ties.
TrianglePick optimal_triangle(const PointSet& points, Index i, Index j);

/// All-pairs optimal triangle perimeters, the normalizer of every dilation.
///
/// 1D sets use the closed form (2 * span when some point lies strictly
/// between the pair, otherwise the nearer outside neighbour) in O(n^2); 2D
/// sets scan all third points in O(n^3). Values agree with optimal_triangle()
/// up to floating-point rounding.
class TriangleTable {
 public:
  explicit TriangleTable(const PointSet& points);

  std::size_t size() const noexcept { return n_; }
  double perimeter(Index i, Index j) const noexcept { return table_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> table_;
};

}  // namespace orspan
