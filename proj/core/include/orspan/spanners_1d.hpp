#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "orspan/geometry.hpp"
#include "orspan/oriented_graph.hpp"

namespace orspan {

/// Baseline p_i -> p_{i+1} plus every skip-2 and skip-3 back edge (3n - 6
/// arcs). Oriented dilation exactly 1. Requires a sorted 1D set, n >= 3.
OrientedGraph build_1spanner_1d(const PointSet& points);

/// Baseline plus the skip-2 back edges (2n - 3 arcs); two-page plane with
/// oriented dilation at most 2.
OrientedGraph build_2page_2spanner(const PointSet& points);

enum class CandidatePairs {
  /// Pairs (i, i+2) and (j, j+3): exact for every oriented graph on a line.
  skip2_and_skip3,
  /// Pairs (i, i+2) only: exact for one-page graphs containing the baseline.
  skip2_only,
};

/// Oriented dilation of a graph on a sorted 1D set evaluated on the linear
/// set of candidate pairs only (every pair when n = 3).
DilationReport dilation_1d_candidates(const OrientedGraph& graph,
                                      CandidatePairs pairs = CandidatePairs::skip2_and_skip3);

/// One-page plane oriented graph on a sorted line: the full baseline
/// p_i -> p_{i+1} plus pairwise non-crossing back edges (r, l) with r >= l + 2.
class OneppbGraph {
 public:
  /// Validates the back edges (direction, span, duplicates, one-page
  /// planarity) and derives the oriented graph.
  static OneppbGraph from_back_edges(PointSet base, std::vector<Arc> back_edges);

  const PointSet& base() const noexcept { return graph_.base(); }
  /// Back edges sorted by (from, to).
  std::span<const Arc> back_edges() const noexcept { return back_edges_; }
  const OrientedGraph& graph() const noexcept { return graph_; }

  /// n - 2 back edges: a triangulation of the polygon spanned by the line order.
  bool maximal() const noexcept { return back_edges_.size() + 2 == base().size(); }

 private:
  OneppbGraph(std::vector<Arc> back_edges, OrientedGraph graph)
      : back_edges_(std::move(back_edges)), graph_(std::move(graph)) {}

  std::vector<Arc> back_edges_;
  OrientedGraph graph_;
};

/// Orients a one-page plane undirected edge set that contains every
/// consecutive pair: baseline left to right, all other edges right to left.
/// No other orientation of the same edges has smaller dilation.
OneppbGraph orient_one_page(const PointSet& points, std::span<const Edge> edges);

/// Greedy one-page plane 5-spanner in O(n log n).
///
/// Surviving points sit in a doubly linked list; an ordered set keyed by the
/// covering length next - prev picks the point to cover. Each extraction adds
/// the back edge (next, prev) and unlinks the covered point; the last one adds
/// the closing edge (p_{n-1}, p_0). Equal keys extract the smallest index.
OneppbGraph greedy_1ppb(const PointSet& points);

/// O(n) oriented dilation of a maximal 1-PPB graph from the four degree cases
/// of the middle point of each pair (p_{i-1}, p_{i+1}). Throws not_maximal
/// unless the graph has exactly n - 2 back edges.
DilationReport dilation_1ppb(const OneppbGraph& graph);

struct Optimal1ppb {
  OneppbGraph graph;
  double dilation = 0.0;
};

struct Optimal1ppbOptions {
  /// The table search is O(n^8); larger inputs throw guard_exceeded.
  std::size_t max_points = 12;
};

/// Maximal 1-PPB graph of minimum oriented dilation by dynamic programming
/// over sub-ranges (l, r) tagged with the boundary back edges (l', l) and
/// (r, r') that close the cycles through the first and last baseline edge.
Optimal1ppb optimal_1ppb(const PointSet& points, Optimal1ppbOptions options = {});

inline constexpr std::size_t kMaxEnumerationPoints = 14;

/// Calls `visit` once for each maximal 1-PPB graph on `points` (there are
/// Catalan(n - 2) of them), in a fixed order. Throws guard_exceeded above
/// `max_points`.
void enumerate_maximal_1ppb(const PointSet& points,
                            const std::function<void(const OneppbGraph&)>& visit,
                            std::size_t max_points = kMaxEnumerationPoints);

/// Seven points with gaps (3-5e, 1, e, 1-3e, 1-e, 1-e) on which the greedy
/// construction reaches dilation (5 - 7e) / (1 + e).
PointSet greedy_worst_case_points(double eps);

/// Five points with gaps (e, 1, 1, e) that admit a one-page spanner of
/// dilation 1 + e.
PointSet near_one_spanner_points(double eps);

/// n points at 0, 1, ..., n-1.
PointSet unit_spaced_points(std::size_t n);

}  // namespace orspan
