#include "orspan/spanners_2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <tuple>

#include "orspan/error.hpp"

namespace orspan {

namespace {

constexpr double kOrientTol = 1e-12;

// Sign of the turn a -> b -> c; 0 when the area is negligible relative to
// the lengths involved.
int orientation(const Point& a, const Point& b, const Point& c) {
  const double ux = b.x - a.x, uy = b.y - a.y;
  const double vx = c.x - a.x, vy = c.y - a.y;
  const double det = ux * vy - uy * vx;
  const double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
  if (std::abs(det) <= kOrientTol * scale) return 0;
  return det > 0 ? 1 : -1;
}

std::string edge_name(Edge e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

std::vector<Edge> normalized_edges(const PointSet& points, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    points.check_index(e.a);
    points.check_index(e.b);
    if (e.a == e.b) throw Error(ErrorCode::self_loop, "self-loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
    throw Error(ErrorCode::duplicate_edge, "duplicate edge " + edge_name(*dup));
  }
  return out;
}

void require_plane(const PointSet& points) {
  if (points.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "a 2D point set is required");
  if (points.size() < 3) throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
}

}  // namespace

bool segments_cross(const PointSet& points, Edge e, Edge f) {
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  const Point& p = points.at(e.a);
  const Point& q = points.at(e.b);
  const Point& r = points.at(f.a);
  const Point& s = points.at(f.b);
  const int d1 = orientation(p, q, r);
  const int d2 = orientation(p, q, s);
  const int d3 = orientation(r, s, p);
  const int d4 = orientation(r, s, q);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

Triangulation Triangulation::from_edges(PointSet base, std::vector<Edge> edges) {
  if (base.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "a 2D point set is required");
  std::vector<Edge> sorted = normalized_edges(base, edges);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (segments_cross(base, sorted[i], sorted[j])) {
        throw Error(ErrorCode::crossing_edges,
                    "edges " + edge_name(sorted[i]) + " and " + edge_name(sorted[j]) + " cross");
      }
    }
  }
  return Triangulation(std::move(base), std::move(sorted));
}

bool Triangulation::has_edge(Index u, Index v) const noexcept {
  const Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::array<Index, 3>> Triangulation::faces() const {
  const std::size_t n = base_.size();
  std::vector<std::vector<Index>> adj(n);
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<std::array<Index, 3>> result;
  for (const Edge& e : edges_) {
    for (Index c : adj[e.b]) {
      if (c <= e.b || !std::binary_search(adj[e.a].begin(), adj[e.a].end(), c)) continue;
      const Point& pa = base_[e.a];
      const Point& pb = base_[e.b];
      const Point& pc = base_[c];
      const int sense = orientation(pa, pb, pc);
      if (sense == 0) continue;
      bool empty = true;
      for (Index q = 0; q < n && empty; ++q) {
        if (q == e.a || q == e.b || q == c) continue;
        const Point& pq = base_[q];
        if (orientation(pa, pb, pq) == sense && orientation(pb, pc, pq) == sense &&
            orientation(pc, pa, pq) == sense) {
          empty = false;
        }
      }
      if (empty) result.push_back({e.a, e.b, c});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

OrientTrace orient_complete_traced(const PointSet& points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
  }
  const std::size_t n = points.size();
  std::vector<std::tuple<double, Index, Index, Index>> triangles;
  triangles.reserve(n * (n - 1) * (n - 2) / 6);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double ij = distance(points, i, j);
      for (Index k = j + 1; k < n; ++k) {
        triangles.emplace_back(ij + distance(points, j, k) + distance(points, i, k), i, j, k);
      }
    }
  }
  std::sort(triangles.begin(), triangles.end());

  // dir[u * n + v] == 1 iff u -> v has been chosen.
  std::vector<std::uint8_t> dir(n * n, 0);
  const auto oriented = [&](Index u, Index v) { return dir[u * n + v] || dir[v * n + u]; };
  const auto set = [&](Index u, Index v) { dir[u * n + v] = 1; };

  OrientTrace trace{OrientedGraph::build(points, {}), {}};
  trace.steps.reserve(triangles.size());
  for (const auto& [perimeter, i, j, k] : triangles) {
    const std::array<std::pair<Index, Index>, 3> sides{{{i, j}, {j, k}, {k, i}}};
    int count = 0;
    for (const auto& [u, v] : sides) count += oriented(u, v) ? 1 : 0;
    trace.steps.push_back({{i, j, k}, perimeter, count});
    if (count == 0) {
      set(i, j);
      set(j, k);
      set(k, i);
    } else if (count == 1) {
      for (const auto& [u, v] : sides) {
        if (!oriented(u, v)) continue;
        const Index a = dir[u * n + v] ? u : v;
        const Index b = a == u ? v : u;
        const Index c = i + j + k - a - b;
        set(b, c);
        set(c, a);
        break;
      }
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(n * (n - 1) / 2);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      if (dir[v * n + u]) {
        arcs.push_back({v, u});
      } else {
        arcs.push_back({u, v});
      }
    }
  }
  trace.graph = OrientedGraph::build(points, arcs);
  return trace;
}

OrientedGraph orient_complete(const PointSet& points) {
  return std::move(orient_complete_traced(points).graph);
}

OrientationSearch min_dilation_over_orientations(const PointSet& points,
                                                 std::span<const Edge> edges,
                                                 std::size_t max_edges) {
  if (points.size() < 3) {
    throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
  }
  const std::vector<Edge> sorted = normalized_edges(points, edges);
  const std::size_t m = sorted.size();
  if (m > max_edges) {
    throw Error(ErrorCode::guard_exceeded, "orientation search limited to " +
                                               std::to_string(max_edges) + " edges, got " +
                                               std::to_string(m));
  }
  const std::size_t n = points.size();
  const TriangleTable triangles(points);
  std::vector<double> length(m);
  for (std::size_t e = 0; e < m; ++e) length[e] = distance(points, sorted[e].a, sorted[e].b);

  // Dense Floyd-Warshall per orientation; the winner is re-evaluated with
  // the library evaluator below.
  std::vector<double> d(n * n);
  double best = kInfinity;
  std::uint64_t best_mask = 0;
  bool have_best = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(d.begin(), d.end(), kInfinity);
    for (Index v = 0; v < n; ++v) d[v * n + v] = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      const bool flip = (mask >> e) & 1U;
      const Index u = flip ? sorted[e].b : sorted[e].a;
      const Index v = flip ? sorted[e].a : sorted[e].b;
      d[u * n + v] = length[e];
    }
    for (Index k = 0; k < n; ++k) {
      for (Index i = 0; i < n; ++i) {
        const double dik = d[i * n + k];
        if (dik == kInfinity) continue;
        for (Index j = 0; j < n; ++j) {
          const double via = dik + d[k * n + j];
          if (via < d[i * n + j]) d[i * n + j] = via;
        }
      }
    }
    double worst = 0.0;
    for (Index u = 0; u < n && worst < best; ++u) {
      for (Index v = u + 1; v < n; ++v) {
        const double there = d[u * n + v];
        const double back = d[v * n + u];
        if (there == kInfinity || back == kInfinity) {
          worst = kInfinity;
          break;
        }
        worst = std::max(worst, (there + back) / triangles.perimeter(u, v));
      }
    }
    if (!have_best || worst < best) {
      best = worst;
      best_mask = mask;
      have_best = true;
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    if ((best_mask >> e) & 1U) {
      arcs.push_back({sorted[e].b, sorted[e].a});
    } else {
      arcs.push_back({sorted[e].a, sorted[e].b});
    }
  }
  OrientedGraph graph = OrientedGraph::build(points, arcs);
  const double dilation = oriented_dilation(graph, triangles).dilation;
  return {std::move(graph), dilation};
}

Triangulation greedy_triangulation(const PointSet& points) {
  require_plane(points);
  const std::size_t n = points.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        if (orientation(points[i], points[j], points[k]) == 0) {
          throw Error(ErrorCode::degenerate, "points " + std::to_string(i) + ", " +
                                                 std::to_string(j) + ", " + std::to_string(k) +
                                                 " are collinear");
        }
      }
    }
  }

  std::vector<std::tuple<double, Index, Index>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) pairs.emplace_back(distance(points, i, j), i, j);
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<Edge> accepted;
  for (const auto& [len, i, j] : pairs) {
    const Edge candidate{i, j};
    const bool blocked = std::any_of(accepted.begin(), accepted.end(), [&](const Edge& e) {
      return segments_cross(points, candidate, e);
    });
    if (!blocked) accepted.push_back(candidate);
  }
  std::sort(accepted.begin(), accepted.end());
  return Triangulation(points, std::move(accepted));
}

OrientedGraph consistent_orientation(const Triangulation& triangulation) {
  const PointSet& points = triangulation.base();
  const auto faces = triangulation.faces();

  std::map<Edge, std::vector<std::size_t>> faces_of;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& [a, b, c] = faces[f];
    faces_of[{a, b}].push_back(f);
    faces_of[{b, c}].push_back(f);
    faces_of[{a, c}].push_back(f);
  }

  // +1: counter-clockwise, -1: clockwise. Faces across an edge alternate.
  std::vector<int> sense(faces.size(), 0);
  for (std::size_t root = 0; root < faces.size(); ++root) {
    if (sense[root] != 0) continue;
    sense[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t f = todo.front();
      todo.pop();
      const auto& [a, b, c] = faces[f];
      for (const Edge& e : {Edge{a, b}, Edge{b, c}, Edge{a, c}}) {
        for (std::size_t g : faces_of[e]) {
          if (g == f) continue;
          if (sense[g] == 0) {
            sense[g] = -sense[f];
            todo.push(g);
          } else if (sense[g] == sense[f]) {
            throw Error(ErrorCode::not_orientable,
                        "faces sharing edge " + edge_name(e) + " cannot both be cycles");
          }
        }
      }
    }
  }

  std::map<Edge, Arc> chosen;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto [a, b, c] = faces[f];
    if (orientation(points[a], points[b], points[c]) * sense[f] < 0) std::swap(b, c);
    for (const Arc& arc : {Arc{a, b}, Arc{b, c}, Arc{c, a}}) {
      const Edge e{std::min(arc.from, arc.to), std::max(arc.from, arc.to)};
      const auto [it, inserted] = chosen.emplace(e, arc);
      if (!inserted && it->second != arc) {
        throw Error(ErrorCode::not_orientable,
                    "faces disagree on the direction of edge " + edge_name(e));
      }
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(triangulation.edges().size());
  for (const Edge& e : triangulation.edges()) {
    const auto it = chosen.find(e);
    arcs.push_back(it == chosen.end() ? Arc{e.a, e.b} : it->second);
  }
  return OrientedGraph::build(points, arcs);
}

PointSet make_k4_fixture(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::invalid_argument, "scale must be positive");
  }
  const double r3 = std::sqrt(3.0);
  return PointSet::in_plane({{0.0, 0.0},
                             {scale, 0.0},
                             {scale / 2.0, scale * r3 / 6.0},
                             {scale / 2.0, scale * r3 / 2.0}});
}

PointSet make_nonconvex_fixture(std::size_t n, double eps, double delta, double delta2) {
  if (n < 5) throw Error(ErrorCode::invalid_argument, "the fixture needs n >= 5");
  if (!(eps > 0.0 && eps < 0.5)) throw Error(ErrorCode::invalid_argument, "eps must lie in (0, 0.5)");
  if (!(delta > 0.0 && delta < eps)) {
    throw Error(ErrorCode::invalid_argument, "delta must lie in (0, eps)");
  }
  // p1 p_i must pass below p2 for every chain point p_i.
  if (!(delta2 > 0.0 && delta > delta2 * (1.0 + eps))) {
    throw Error(ErrorCode::invalid_argument, "need 0 < delta2 and delta > delta2 * (1 + eps)");
  }
  const double span = static_cast<double>(n - 3);
  const double c = delta2 / (2.0 * span * span);
  std::vector<Point> pts(n);
  for (std::size_t i = 3; i <= n; ++i) {
    const double x = static_cast<double>(n - i);
    pts[i - 1] = {x, -c * x * x};
  }
  pts[1] = {static_cast<double>(n - 2), pts[2].y + delta2};
  pts[0] = {static_cast<double>(n - 1) + eps, pts[1].y + delta};
  return PointSet::in_plane(std::move(pts));
}

DelaunayCounterexample make_delaunay_counterexample(double separation) {
  if (!(separation > 0.0) || !std::isfinite(separation)) {
    throw Error(ErrorCode::invalid_argument, "separation must be positive");
  }
  const double w = std::min(1.0, 0.25 * separation);
  const double radius = 0.52 * separation;
  const double h = radius - std::sqrt(radius * radius - w * w);
  PointSet points = PointSet::in_plane({{0.0, separation}, {w, h}, {0.0, 0.0}, {-w, h}});
  return {std::move(points), {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}};
}

}  // namespace orspan
