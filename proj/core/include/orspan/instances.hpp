#pragma once

#include <cstddef>
#include <cstdint>

#include "orspan/geometry.hpp"

namespace orspan {

/// n distinct sorted coordinates drawn uniformly from [lo, hi).
PointSet random_sorted_line(std::size_t n, std::uint64_t seed, double lo = 0.0, double hi = 1.0);

/// n distinct points drawn uniformly from the unit square.
PointSet random_plane(std::size_t n, std::uint64_t seed);

/// n points in convex position: uniform angles on the unit circle, listed
/// counter-clockwise.
PointSet random_convex(std::size_t n, std::uint64_t seed);

/// Maps a 1D set onto a circular arc: x becomes the angle x / radius, so
/// chord length is increasing in |x - x'| as long as the set spans less
/// than pi * radius.
PointSet wrap_on_arc(const PointSet& line, double radius);

}  // namespace orspan
