#include "orspan/spanners_1d.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "one_page_kernel.hpp"
#include "orspan/error.hpp"

namespace orspan {

namespace {

std::string arc_name(const Arc& a) {
  return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

void require_sorted_line(const PointSet& points) {
  if (points.dim() != 1) {
    throw Error(ErrorCode::dimension_mismatch, "a 1D point set is required");
  }
  if (points.size() < 3) {
    throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
  }
  if (!points.sorted_ascending()) {
    throw Error(ErrorCode::not_sorted, "1D points must be sorted ascending");
  }
}

std::vector<double> coordinates(const PointSet& points) {
  std::vector<double> xs(points.size());
  for (Index i = 0; i < points.size(); ++i) xs[i] = points.coord(i);
  return xs;
}

std::vector<Arc> baseline(std::size_t n) {
  std::vector<Arc> arcs;
  arcs.reserve(3 * n);
  for (Index i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return arcs;
}

}  // namespace

namespace detail {

DilationReport one_page_dilation(std::span<const double> xs, Index lo, Index hi,
                                 std::span<const Index> leftmost_in,
                                 std::span<const Index> rightmost_out) {
  DilationAccumulator acc;
  for (Index i = lo + 1; i < hi; ++i) {
    const bool has_in = leftmost_in[i] != kNone;
    const bool has_out = rightmost_out[i] != kNone;
    Index l = i - 1;
    Index r = i + 1;
    if (has_in && has_out) {
      l = rightmost_out[i];
      r = leftmost_in[i];
    } else if (has_in) {
      r = leftmost_in[i - 1];
    } else if (has_out) {
      l = rightmost_out[i + 1];
    }
    acc.add(i - 1, i + 1, 2.0 * (xs[r] - xs[l]), 2.0 * (xs[i + 1] - xs[i - 1]));
  }
  return std::move(acc).finish();
}

}  // namespace detail

OrientedGraph build_1spanner_1d(const PointSet& points) {
  require_sorted_line(points);
  const std::size_t n = points.size();
  std::vector<Arc> arcs = baseline(n);
  for (Index j = 0; j + 2 < n; ++j) arcs.push_back({j + 2, j});
  for (Index k = 0; k + 3 < n; ++k) arcs.push_back({k + 3, k});
  return OrientedGraph::build(points, arcs);
}

OrientedGraph build_2page_2spanner(const PointSet& points) {
  require_sorted_line(points);
  const std::size_t n = points.size();
  std::vector<Arc> arcs = baseline(n);
  for (Index j = 0; j + 2 < n; ++j) arcs.push_back({j + 2, j});
  return OrientedGraph::build(points, arcs);
}

DilationReport dilation_1d_candidates(const OrientedGraph& graph, CandidatePairs pairs) {
  const PointSet& points = graph.base();
  require_sorted_line(points);
  const std::size_t n = points.size();
  std::vector<std::vector<double>> dist;
  dist.reserve(n);
  for (Index s = 0; s < n; ++s) dist.push_back(shortest_distances(graph, s));

  const auto cycle = [&](Index u, Index v) {
    const double there = dist[u][v];
    const double back = dist[v][u];
    return there == kInfinity || back == kInfinity ? kInfinity : there + back;
  };
  DilationAccumulator acc;
  if (n == 3) {
    // One triangle: all three pairs share it, so evaluate every pair.
    for (Index u = 0; u < 3; ++u)
      for (Index v = u + 1; v < 3; ++v) acc.add(u, v, cycle(u, v), 2.0 * (points.coord(2) - points.coord(0)));
    return std::move(acc).finish();
  }
  for (Index i = 0; i + 2 < n; ++i) {
    acc.add(i, i + 2, cycle(i, i + 2), 2.0 * (points.coord(i + 2) - points.coord(i)));
    if (pairs == CandidatePairs::skip2_and_skip3 && i + 3 < n) {
      acc.add(i, i + 3, cycle(i, i + 3), 2.0 * (points.coord(i + 3) - points.coord(i)));
    }
  }
  return std::move(acc).finish();
}

OneppbGraph OneppbGraph::from_back_edges(PointSet base, std::vector<Arc> back_edges) {
  require_sorted_line(base);
  const std::size_t n = base.size();
  for (const Arc& a : back_edges) {
    base.check_index(a.from);
    base.check_index(a.to);
    if (a.from < a.to + 2) {
      throw Error(ErrorCode::invalid_argument,
                  "back edge " + arc_name(a) + " must point left and skip a vertex");
    }
  }
  std::sort(back_edges.begin(), back_edges.end());
  if (auto dup = std::adjacent_find(back_edges.begin(), back_edges.end());
      dup != back_edges.end()) {
    throw Error(ErrorCode::duplicate_edge, "duplicate edge " + arc_name(*dup));
  }

  // Intervals [to, from] must be laminar (nested or interior-disjoint).
  std::vector<Arc> by_span = back_edges;
  std::sort(by_span.begin(), by_span.end(), [](const Arc& a, const Arc& b) {
    return a.to < b.to || (a.to == b.to && a.from > b.from);
  });
  std::vector<Arc> open;
  for (const Arc& a : by_span) {
    while (!open.empty() && open.back().from <= a.to) open.pop_back();
    if (!open.empty() && a.from > open.back().from) {
      throw Error(ErrorCode::crossing_edges,
                  "back edges " + arc_name(open.back()) + " and " + arc_name(a) + " cross");
    }
    open.push_back(a);
  }

  std::vector<Arc> arcs = baseline(n);
  arcs.insert(arcs.end(), back_edges.begin(), back_edges.end());
  OrientedGraph graph = OrientedGraph::build(std::move(base), arcs);
  return OneppbGraph(std::move(back_edges), std::move(graph));
}

OneppbGraph orient_one_page(const PointSet& points, std::span<const Edge> edges) {
  require_sorted_line(points);
  const std::size_t n = points.size();
  std::vector<bool> has_base(n, false);
  std::vector<Arc> back;
  std::vector<Edge> seen;
  for (Edge e : edges) {
    points.check_index(e.a);
    points.check_index(e.b);
    if (e.a == e.b) throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    seen.push_back(e);
    if (e.b == e.a + 1) {
      has_base[e.a] = true;
    } else {
      back.push_back({e.b, e.a});
    }
  }
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
    throw Error(ErrorCode::duplicate_edge,
                "duplicate edge {" + std::to_string(dup->a) + "," + std::to_string(dup->b) + "}");
  }
  for (Index i = 0; i + 1 < n; ++i) {
    if (!has_base[i]) {
      throw Error(ErrorCode::missing_baseline,
                  "missing consecutive pair {" + std::to_string(i) + "," + std::to_string(i + 1) +
                      "}");
    }
  }
  return OneppbGraph::from_back_edges(points, std::move(back));
}

OneppbGraph greedy_1ppb(const PointSet& points) {
  require_sorted_line(points);
  const std::size_t n = points.size();
  std::vector<Index> prev(n), next(n);
  for (Index i = 0; i < n; ++i) {
    prev[i] = i == 0 ? detail::kNone : i - 1;
    next[i] = i + 1 == n ? detail::kNone : i + 1;
  }
  const auto key = [&](Index i) {
    return std::pair{points.coord(next[i]) - points.coord(prev[i]), i};
  };

  std::set<std::pair<double, Index>> queue;
  for (Index i = 1; i + 1 < n; ++i) queue.insert(key(i));

  std::vector<Arc> back;
  back.reserve(n - 2);
  while (!queue.empty()) {
    const Index p = queue.begin()->second;
    queue.erase(queue.begin());
    const Index a = prev[p];
    const Index b = next[p];
    back.push_back({b, a});
    const bool a_inner = a != 0;
    const bool b_inner = b != n - 1;
    if (a_inner) queue.erase(key(a));
    if (b_inner) queue.erase(key(b));
    next[a] = b;
    prev[b] = a;
    if (a_inner) queue.insert(key(a));
    if (b_inner) queue.insert(key(b));
  }
  return OneppbGraph::from_back_edges(points, std::move(back));
}

DilationReport dilation_1ppb(const OneppbGraph& graph) {
  if (!graph.maximal()) {
    throw Error(ErrorCode::not_maximal,
                "expected " + std::to_string(graph.base().size() - 2) + " back edges, got " +
                    std::to_string(graph.back_edges().size()));
  }
  const OrientedGraph& g = graph.graph();
  const std::size_t n = g.vertex_count();
  std::vector<Index> leftmost_in(n, detail::kNone);
  std::vector<Index> rightmost_out(n, detail::kNone);
  for (Index v = 0; v < n; ++v) {
    // Rows are sorted: the baseline predecessor comes first among in-neighbours,
    // the baseline successor last among out-neighbours.
    const auto in = g.in(v);
    const std::size_t first_back = v == 0 ? 0 : 1;
    if (in.size() > first_back) leftmost_in[v] = in[first_back].vertex;
    const auto out = g.out(v);
    const std::size_t baseline_out = v + 1 == n ? 0 : 1;
    if (out.size() > baseline_out) rightmost_out[v] = out[out.size() - 1 - baseline_out].vertex;
  }
  const std::vector<double> xs = coordinates(g.base());
  return detail::one_page_dilation(xs, 0, n - 1, leftmost_in, rightmost_out);
}

void enumerate_maximal_1ppb(const PointSet& points,
                            const std::function<void(const OneppbGraph&)>& visit,
                            std::size_t max_points) {
  require_sorted_line(points);
  const std::size_t n = points.size();
  if (n > max_points) {
    throw Error(ErrorCode::guard_exceeded, "enumeration limited to " +
                                               std::to_string(max_points) + " points, got " +
                                               std::to_string(n));
  }
  std::vector<Arc> back;
  // Triangulates the polygon l..r closed by (r, l): pick the apex k of the
  // triangle on (r, l), then the two sides, continuation-passing.
  std::function<void(Index, Index, const std::function<void()>&)> fill =
      [&](Index l, Index r, const std::function<void()>& done) {
        if (r < l + 2) {
          done();
          return;
        }
        back.push_back({r, l});
        for (Index k = l + 1; k < r; ++k) {
          fill(l, k, [&] { fill(k, r, done); });
        }
        back.pop_back();
      };
  fill(0, n - 1, [&] { visit(OneppbGraph::from_back_edges(points, back)); });
}

PointSet greedy_worst_case_points(double eps) {
  if (!(eps > 0.0 && eps < 0.2)) {
    throw Error(ErrorCode::invalid_argument, "eps must lie in (0, 0.2)");
  }
  const double gaps[] = {3.0 - 5.0 * eps, 1.0, eps, 1.0 - 3.0 * eps, 1.0 - eps, 1.0 - eps};
  std::vector<double> xs{0.0};
  for (double g : gaps) xs.push_back(xs.back() + g);
  return PointSet::on_line(std::move(xs));
}

PointSet near_one_spanner_points(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "eps must lie in (0, 1)");
  }
  return PointSet::on_line({0.0, eps, 1.0 + eps, 2.0 + eps, 2.0 + 2.0 * eps});
}

PointSet unit_spaced_points(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i);
  return PointSet::on_line(std::move(xs));
}

}  // namespace orspan
