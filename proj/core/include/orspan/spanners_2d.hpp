#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "orspan/geometry.hpp"
#include "orspan/oriented_graph.hpp"

namespace orspan {

/// Plane straight-line undirected graph; edges normalized to a < b and sorted.
class Triangulation {
 public:
  /// Throws crossing_edges when two edges cross properly.
  static Triangulation from_edges(PointSet base, std::vector<Edge> edges);

  const PointSet& base() const noexcept { return base_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(Index u, Index v) const noexcept;

  /// Bounded faces: edge triangles with no point strictly inside, as sorted
  /// index triples in lexicographic order.
  std::vector<std::array<Index, 3>> faces() const;

 private:
  friend Triangulation greedy_triangulation(const PointSet& points);

  Triangulation(PointSet base, std::vector<Edge> edges)
      : base_(std::move(base)), edges_(std::move(edges)) {}

  PointSet base_;
  std::vector<Edge> edges_;
};

/// True when segments p_a p_b and p_c p_d meet in a single interior point.
/// Segments sharing an endpoint never cross.
bool segments_cross(const PointSet& points, Edge e, Edge f);

/// One triangle of the orientation sweep, in processing order.
struct OrientStep {
  std::array<Index, 3> triangle{};
  double perimeter = 0.0;
  /// Edges of the triangle already oriented when it was reached.
  int preoriented = 0;
};

struct OrientTrace {
  OrientedGraph graph;
  std::vector<OrientStep> steps;
};

/// Orients K_n by sweeping all triangles by increasing perimeter (ties by
/// index triple): a triangle with no oriented edge becomes the cycle
/// i -> j -> k -> i, one with a single oriented edge is closed into a cycle
/// around it, and anything else is left alone. Oriented dilation at most 2.
OrientedGraph orient_complete(const PointSet& points);

/// orient_complete() plus the per-triangle record of the sweep.
OrientTrace orient_complete_traced(const PointSet& points);

struct OrientationSearch {
  OrientedGraph graph;
  double dilation = 0.0;
};

inline constexpr std::size_t kMaxOrientationEdges = 24;

/// Tries all 2^m orientations of `edges` and returns the first one of minimum
/// dilation. Orientation number `mask` points edge e from a to b unless bit e
/// is set.
OrientationSearch min_dilation_over_orientations(const PointSet& points,
                                                 std::span<const Edge> edges,
                                                 std::size_t max_edges = kMaxOrientationEdges);

/// Inserts point pairs by increasing length (ties by index pair) whenever the
/// segment crosses no accepted edge. Rejects 1D input and collinear triples.
Triangulation greedy_triangulation(const PointSet& points);

/// Orients every bounded face as a directed 3-cycle. Adjacent faces get
/// opposite senses; in each connected group of faces the lexicographically
/// smallest face runs counter-clockwise. Edges on no face go from the smaller
/// to the larger index. Throws not_orientable if the face constraints clash.
OrientedGraph consistent_orientation(const Triangulation& triangulation);

/// Equilateral triangle of side `scale` and its centre, labelled p1, p2 (base
/// corners), p3 (centre), p4 (apex).
PointSet make_k4_fixture(double scale = 1.0);

/// n points on which every orientation of the greedy triangulation is poor:
/// p3..pn on a flat parabola at unit x-spacing, p2 one unit past p3 and
/// delta2 above it, p1 a further 1 + eps to the side and delta above p2.
/// The parabola sags by delta2 / 2 over the chain so p2 sees every chain
/// point and p1 ends up adjacent to p2 and pn only.
PointSet make_nonconvex_fixture(std::size_t n, double eps = 1e-2, double delta = 1e-3,
                                double delta2 = 1e-4);

struct DelaunayCounterexample {
  PointSet points;
  std::vector<Edge> edges;
};

/// Four points p1..p4 with the five edges p1p2, p1p3, p1p4, p2p3, p3p4:
/// p2, p3, p4 clustered near the bottom of a circle, p1 inside it at height
/// `separation` above p3.
DelaunayCounterexample make_delaunay_counterexample(double separation);

}  // namespace orspan
