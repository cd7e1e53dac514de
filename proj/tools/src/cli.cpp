#include "orspan_cli/cli.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <utility>

#include "orspan/error.hpp"
#include "orspan/instances.hpp"
#include "orspan/spanners_1d.hpp"
#include "orspan/spanners_2d.hpp"
#include "orspan_cli/io.hpp"

namespace orspan::cli {

namespace {

constexpr std::array<std::pair<std::string_view, Algorithm>, 6> kAlgorithms{{
    {"oneD-1spanner", Algorithm::line_1spanner},
    {"oneD-2page", Algorithm::line_2page},
    {"oneD-greedy", Algorithm::line_greedy},
    {"oneD-optimal", Algorithm::line_optimal},
    {"twoD-complete", Algorithm::plane_complete},
    {"twoD-greedy", Algorithm::plane_greedy},
}};

constexpr std::array<std::pair<std::string_view, InstanceKind>, 8> kKinds{{
    {"line", InstanceKind::line},
    {"plane", InstanceKind::plane},
    {"convex", InstanceKind::convex},
    {"greedy-worst", InstanceKind::greedy_worst},
    {"near-one", InstanceKind::near_one},
    {"k4", InstanceKind::k4},
    {"nonconvex", InstanceKind::nonconvex},
    {"delaunay", InstanceKind::delaunay},
}};

struct SortedView {
  PointSet points;
  std::vector<Index> original;  // sorted position -> file index
};

SortedView sorted_view(const PointSet& points) {
  std::vector<Index> order(points.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return points.coord(a) < points.coord(b); });
  std::vector<double> xs;
  xs.reserve(order.size());
  for (Index i : order) xs.push_back(points.coord(i));
  return {PointSet::on_line(std::move(xs)), std::move(order)};
}

std::vector<Arc> construct(const PointSet& points, Algorithm algorithm,
                           std::optional<std::size_t> guard) {
  switch (algorithm) {
    case Algorithm::line_1spanner:
      return build_1spanner_1d(points).arcs();
    case Algorithm::line_2page:
      return build_2page_2spanner(points).arcs();
    case Algorithm::line_greedy:
      return greedy_1ppb(points).graph().arcs();
    case Algorithm::line_optimal: {
      Optimal1ppbOptions options;
      if (guard) options.max_points = *guard;
      return optimal_1ppb(points, options).graph.graph().arcs();
    }
    case Algorithm::plane_complete:
      return orient_complete(points).arcs();
    case Algorithm::plane_greedy:
      return consistent_orientation(greedy_triangulation(points)).arcs();
  }
  throw Error(ErrorCode::invalid_argument, "unknown algorithm");
}

PointSet load_points(const RunConfig& config) {
  if (config.input.empty()) throw Error(ErrorCode::invalid_argument, "--input is required");
  return parse_points(read_file(config.input));
}

OrientedGraph load_graph(const RunConfig& config, const PointSet& points) {
  if (config.edges.empty()) throw Error(ErrorCode::invalid_argument, "--edges is required");
  return OrientedGraph::build(points, parse_edges(read_file(config.edges)));
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
  } else {
    write_file(config.output, text);
  }
}

nlohmann::json line_oracle(const PointSet& points, const RunConfig& config) {
  if (!points.sorted_ascending()) {
    throw Error(ErrorCode::not_sorted, "the oracle needs sorted 1D input");
  }
  const std::size_t limit = config.guard.value_or(10);
  if (points.size() > limit) {
    throw Error(ErrorCode::guard_exceeded, "oracle limited to " + std::to_string(limit) +
                                               " points, got " + std::to_string(points.size()));
  }
  std::size_t graphs = 0;
  double worst_gap = 0.0;
  double best = kInfinity;
  std::vector<Arc> best_back;
  enumerate_maximal_1ppb(
      points,
      [&](const OneppbGraph& g) {
        ++graphs;
        const double fast = dilation_1ppb(g).dilation;
        const double exact = oriented_dilation(g.graph()).dilation;
        worst_gap = std::max(worst_gap, std::abs(fast - exact) / exact);
        if (fast < best) {
          best = fast;
          best_back.assign(g.back_edges().begin(), g.back_edges().end());
        }
      },
      limit);
  const Optimal1ppb optimal = optimal_1ppb(points, {.max_points = limit});
  const double greedy = dilation_1ppb(greedy_1ppb(points)).dilation;

  nlohmann::json j;
  j["dimension"] = 1;
  j["points"] = points.size();
  j["graphs"] = graphs;
  j["max_relative_gap_linear_vs_exact"] = worst_gap;
  j["enumeration_min"] = best;
  j["enumeration_argmin_back_edges"] = nlohmann::json::array();
  for (const Arc& a : best_back) j["enumeration_argmin_back_edges"].push_back({a.from, a.to});
  j["optimal"] = optimal.dilation;
  j["greedy"] = greedy;
  j["agree"] = worst_gap <= 1e-12 && approx_equal(optimal.dilation, best, 1e-12);
  return j;
}

nlohmann::json plane_oracle(const PointSet& points, const RunConfig& config) {
  std::vector<Edge> edges;
  std::string source;
  if (!config.edges.empty()) {
    for (const Arc& a : parse_edges(read_file(config.edges))) {
      edges.push_back({std::min(a.from, a.to), std::max(a.from, a.to)});
    }
    source = "file";
  } else {
    const Triangulation t = greedy_triangulation(points);
    edges.assign(t.edges().begin(), t.edges().end());
    source = "greedy_triangulation";
  }
  const std::size_t limit = config.guard.value_or(kMaxOrientationEdges);
  const OrientationSearch search = min_dilation_over_orientations(points, edges, limit);

  nlohmann::json j;
  j["dimension"] = 2;
  j["points"] = points.size();
  j["edge_source"] = source;
  j["edges"] = edges.size();
  j["orientations"] = std::uint64_t{1} << edges.size();
  j["min_dilation"] = number_or_null(search.dilation);
  j["argmin_edges"] = nlohmann::json::array();
  for (const Arc& a : search.graph.arcs()) j["argmin_edges"].push_back({a.from, a.to});
  try {
    const Triangulation t = Triangulation::from_edges(points, edges);
    j["consistent_orientation"] =
        number_or_null(oriented_dilation(consistent_orientation(t)).dilation);
  } catch (const Error&) {
    j["consistent_orientation"] = nullptr;
  }
  j["orient_complete"] = oriented_dilation(orient_complete(points)).dilation;
  return j;
}

PointSet generate(const RunConfig& config) {
  switch (config.kind) {
    case InstanceKind::line:
      return random_sorted_line(config.n, config.seed);
    case InstanceKind::plane:
      return random_plane(config.n, config.seed);
    case InstanceKind::convex:
      return random_convex(config.n, config.seed);
    case InstanceKind::greedy_worst:
      return greedy_worst_case_points(config.eps);
    case InstanceKind::near_one:
      return near_one_spanner_points(config.eps);
    case InstanceKind::k4:
      return make_k4_fixture(1.0);
    case InstanceKind::nonconvex:
      return make_nonconvex_fixture(config.n, config.eps);
    case InstanceKind::delaunay:
      return make_delaunay_counterexample(config.separation).points;
  }
  throw Error(ErrorCode::invalid_argument, "unknown instance kind");
}

int dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::build: {
      const PointSet points = load_points(config);
      if (points.dim() != required_dimension(config.algorithm)) {
        throw Error(ErrorCode::dimension_mismatch,
                    std::string(to_string(config.algorithm)) + " needs " +
                        std::to_string(required_dimension(config.algorithm)) + "D input, got " +
                        std::to_string(points.dim()) + "D");
      }
      emit(config, out, format_edges(build_edges(points, config.algorithm, config.sort, config.guard)));
      return 0;
    }
    case Command::dilation: {
      const PointSet points = load_points(config);
      const OrientedGraph graph = load_graph(config, points);
      const DilationReport report = oriented_dilation(graph, {.all_pairs = config.all_pairs});
      emit(config, out, report_to_json(report).dump(2) + "\n");
      return 0;
    }
    case Command::oracle: {
      const PointSet points = load_points(config);
      const nlohmann::json j =
          points.dim() == 1 ? line_oracle(points, config) : plane_oracle(points, config);
      emit(config, out, j.dump(2) + "\n");
      return 0;
    }
    case Command::render: {
      const PointSet points = load_points(config);
      emit(config, out, render_svg(load_graph(config, points)));
      return 0;
    }
    case Command::generate:
      emit(config, out, format_points(generate(config)));
      return 0;
  }
  return 1;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [key, value] : kAlgorithms) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [key, value] : kAlgorithms) {
    if (value == algorithm) return key;
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (const auto& [key, value] : kKinds) {
    if (key == name) return value;
  }
  return std::nullopt;
}

int required_dimension(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::plane_complete:
    case Algorithm::plane_greedy:
      return 2;
    default:
      return 1;
  }
}

std::vector<Arc> build_edges(const PointSet& points, Algorithm algorithm, bool sort,
                             std::optional<std::size_t> guard) {
  if (required_dimension(algorithm) != 1 || points.sorted_ascending() || !sort) {
    return construct(points, algorithm, guard);
  }
  const SortedView view = sorted_view(points);
  std::vector<Arc> arcs = construct(view.points, algorithm, guard);
  for (Arc& a : arcs) a = {view.original[a.from], view.original[a.to]};
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const Error& e) {
    err << "error: " << orspan::to_string(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace orspan::cli
