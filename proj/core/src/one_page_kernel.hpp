#pragma once

// Shared by dilation_1ppb() and the optimal 1-PPB table search.

#include <cstddef>
#include <limits>
#include <span>

#include "orspan/oriented_graph.hpp"

namespace orspan::detail {

inline constexpr Index kNone = std::numeric_limits<Index>::max();

/// Dilation of a maximal 1-PPB graph restricted to points lo..hi.
///
/// `leftmost_in[v]` is the smallest source of a back edge into v and
/// `rightmost_out[v]` the largest target of a back edge out of v (kNone when
/// absent); both are indexed by global point index, as is `xs`.
DilationReport one_page_dilation(std::span<const double> xs, Index lo, Index hi,
                                 std::span<const Index> leftmost_in,
                                 std::span<const Index> rightmost_out);

}  // namespace orspan::detail
