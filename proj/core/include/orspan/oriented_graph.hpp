#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orspan/geometry.hpp"

namespace orspan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Directed edge `from -> to`.
struct Arc {
  Index from = 0;
  Index to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Undirected edge; constructors of edge lists normalize to a < b.
struct Edge {
  Index a = 0;
  Index b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Index vertex = 0;
  double weight = 0.0;
};

/// Directed, Euclidean-weighted graph on a PointSet with no antiparallel pair.
///
/// Adjacency is stored in compressed rows, each sorted by neighbour index,
/// so the leftmost/rightmost neighbour of a 1D vertex is an O(1) lookup.
class OrientedGraph {
 public:
  /// Throws not_oriented on an antiparallel pair, duplicate_edge on a repeated
  /// arc, self_loop on u == v and index_out_of_range on bad indices.
  static OrientedGraph build(PointSet base, std::span<const Arc> arcs);

  const PointSet& base() const noexcept { return base_; }
  std::size_t vertex_count() const noexcept { return base_.size(); }
  std::size_t edge_count() const noexcept { return out_nbrs_.size(); }

  std::span<const Neighbor> out(Index v) const noexcept {
    return {out_nbrs_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const Neighbor> in(Index v) const noexcept {
    return {in_nbrs_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  bool has_arc(Index from, Index to) const noexcept;

  /// All arcs, sorted by (from, to).
  std::vector<Arc> arcs() const;

 private:
  OrientedGraph() = default;

  PointSet base_ = PointSet::on_line({});
  std::vector<std::size_t> out_offsets_;
  std::vector<Neighbor> out_nbrs_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Neighbor> in_nbrs_;
};

/// Single-source shortest path lengths (nonnegative weights); unreachable
/// vertices get kInfinity.
std::vector<double> shortest_distances(const OrientedGraph& graph, Index source);

/// |C_G(i, j)| as the shortest closed walk through both vertices:
/// d(i, j) + d(j, i), kInfinity when either direction is unreachable.
double roundtrip_length(const OrientedGraph& graph, Index i, Index j);

struct PairDilation {
  Index u = 0;
  Index v = 0;
  double cycle_length = 0.0;
  double perimeter = 0.0;
  double dilation = 0.0;
};

struct DilationReport {
  double dilation = 0.0;
  std::pair<Index, Index> witness{0, 0};
  double cycle_length = 0.0;
  double perimeter = 0.0;
  /// Filled only when the caller asked for the per-pair table.
  std::vector<PairDilation> pairs;

  bool finite() const noexcept { return dilation < kInfinity; }
};

/// Folds candidate pairs into a DilationReport.
///
/// The reported dilation is the exact maximum. The witness is the first pair
/// offered whose value lies within kRelTol of that maximum, so feeding pairs
/// in lexicographic order yields the lexicographically smallest witness.
class DilationAccumulator {
 public:
  explicit DilationAccumulator(bool keep_pairs = false) : keep_pairs_(keep_pairs) {}

  void add(Index u, Index v, double cycle_length, double perimeter);
  DilationReport finish() &&;

 private:
  bool keep_pairs_;
  double max_ = 0.0;
  std::vector<PairDilation> seen_;
};

struct DilationOptions {
  bool all_pairs = false;
};

/// Exact oriented dilation over all unordered pairs: one Dijkstra per source,
/// O(n (m + n log n)) plus the triangle table.
DilationReport oriented_dilation(const OrientedGraph& graph, DilationOptions options = {});

/// Same, reusing a precomputed triangle table for graph.base().
DilationReport oriented_dilation(const OrientedGraph& graph, const TriangleTable& triangles,
                                 DilationOptions options = {});

}  // namespace orspan
