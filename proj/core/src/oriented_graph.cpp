#include "orspan/oriented_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "orspan/error.hpp"

namespace orspan {

namespace {

std::string arc_name(Index u, Index v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void fill_rows(std::size_t n, std::vector<std::pair<Index, Neighbor>> entries,
               std::vector<std::size_t>& offsets, std::vector<Neighbor>& nbrs) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && a.second.vertex < b.second.vertex);
  });
  offsets.assign(n + 1, 0);
  for (const auto& e : entries) ++offsets[e.first + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  nbrs.clear();
  nbrs.reserve(entries.size());
  for (const auto& e : entries) nbrs.push_back(e.second);
}

double ratio(double cycle_length, double perimeter) {
  return cycle_length == kInfinity ? kInfinity : cycle_length / perimeter;
}

}  // namespace

OrientedGraph OrientedGraph::build(PointSet base, std::span<const Arc> arcs) {
  const std::size_t n = base.size();
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  for (const Arc& a : sorted) {
    base.check_index(a.from);
    base.check_index(a.to);
    if (a.from == a.to) {
      throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(a.from));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::duplicate_edge, "duplicate edge " + arc_name(dup->from, dup->to));
  }
  for (const Arc& a : sorted) {
    if (std::binary_search(sorted.begin(), sorted.end(), Arc{a.to, a.from})) {
      throw Error(ErrorCode::not_oriented,
                  "not an oriented graph: both " + arc_name(a.from, a.to) + " and " +
                      arc_name(a.to, a.from) + " present");
    }
  }

  std::vector<std::pair<Index, Neighbor>> out_entries;
  std::vector<std::pair<Index, Neighbor>> in_entries;
  out_entries.reserve(sorted.size());
  in_entries.reserve(sorted.size());
  for (const Arc& a : sorted) {
    const double w = distance(base, a.from, a.to);
    out_entries.push_back({a.from, Neighbor{a.to, w}});
    in_entries.push_back({a.to, Neighbor{a.from, w}});
  }

  OrientedGraph g;
  g.base_ = std::move(base);
  fill_rows(n, std::move(out_entries), g.out_offsets_, g.out_nbrs_);
  fill_rows(n, std::move(in_entries), g.in_offsets_, g.in_nbrs_);
  return g;
}

bool OrientedGraph::has_arc(Index from, Index to) const noexcept {
  if (from >= vertex_count()) return false;
  const auto row = out(from);
  return std::binary_search(row.begin(), row.end(), Neighbor{to, 0.0},
                            [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(edge_count());
  for (Index u = 0; u < vertex_count(); ++u) {
    for (const Neighbor& nb : out(u)) result.push_back({u, nb.vertex});
  }
  return result;
}

std::vector<double> shortest_distances(const OrientedGraph& graph, Index source) {
  graph.base().check_index(source);
  std::vector<double> dist(graph.vertex_count(), kInfinity);
  using Entry = std::pair<double, Index>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const Neighbor& nb : graph.out(u)) {
      const double candidate = d + nb.weight;
      if (candidate < dist[nb.vertex]) {
        dist[nb.vertex] = candidate;
        heap.push({candidate, nb.vertex});
      }
    }
  }
  return dist;
}

double roundtrip_length(const OrientedGraph& graph, Index i, Index j) {
  graph.base().check_index(i);
  graph.base().check_index(j);
  if (i == j) throw Error(ErrorCode::invalid_argument, "roundtrip needs two distinct vertices");
  const double there = shortest_distances(graph, i)[j];
  const double back = shortest_distances(graph, j)[i];
  return there == kInfinity || back == kInfinity ? kInfinity : there + back;
}

void DilationAccumulator::add(Index u, Index v, double cycle_length, double perimeter) {
  const PairDilation entry{u, v, cycle_length, perimeter, ratio(cycle_length, perimeter)};
  if (keep_pairs_) {
    seen_.push_back(entry);
    return;
  }
  // Keep only the pairs that can still become the witness; the admission
  // threshold max / (1 + tol) only grows, so dropped pairs never come back.
  max_ = std::max(max_, entry.dilation);
  const double threshold = max_ == kInfinity ? kInfinity : max_ / (1.0 + kRelTol);
  if (entry.dilation >= threshold) seen_.push_back(entry);
  std::erase_if(seen_, [&](const PairDilation& p) { return p.dilation < threshold; });
}

DilationReport DilationAccumulator::finish() && {
  DilationReport report;
  if (seen_.empty()) return report;
  double best = 0.0;
  for (const auto& p : seen_) best = std::max(best, p.dilation);
  const double threshold = best == kInfinity ? kInfinity : best / (1.0 + kRelTol);
  for (const auto& p : seen_) {
    if (p.dilation >= threshold) {
      report.witness = {p.u, p.v};
      report.cycle_length = p.cycle_length;
      report.perimeter = p.perimeter;
      break;
    }
  }
  report.dilation = best;
  if (keep_pairs_) report.pairs = std::move(seen_);
  return report;
}

DilationReport oriented_dilation(const OrientedGraph& graph, DilationOptions options) {
  if (graph.vertex_count() < 3) {
    throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
  }
  return oriented_dilation(graph, TriangleTable(graph.base()), options);
}

DilationReport oriented_dilation(const OrientedGraph& graph, const TriangleTable& triangles,
                                 DilationOptions options) {
  const std::size_t n = graph.vertex_count();
  if (n < 3) throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
  if (triangles.size() != n) {
    throw Error(ErrorCode::invalid_argument, "triangle table does not match the graph");
  }
  std::vector<std::vector<double>> dist;
  dist.reserve(n);
  for (Index s = 0; s < n; ++s) dist.push_back(shortest_distances(graph, s));

  DilationAccumulator acc(options.all_pairs);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      const double there = dist[u][v];
      const double back = dist[v][u];
      const double cycle = there == kInfinity || back == kInfinity ? kInfinity : there + back;
      acc.add(u, v, cycle, triangles.perimeter(u, v));
    }
  }
  return std::move(acc).finish();
}

}  // namespace orspan
