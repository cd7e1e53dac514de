#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "orspan/oriented_graph.hpp"

namespace orspan::cli {

enum class Command { build, dilation, oracle, render, generate };

enum class Algorithm {
  line_1spanner,
  line_2page,
  line_greedy,
  line_optimal,
  plane_complete,
  plane_greedy,
};

enum class InstanceKind { line, plane, convex, greedy_worst, near_one, k4, nonconvex, delaunay };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algorithm);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);

/// 1D algorithms accept only dim == 1 input and vice versa.
int required_dimension(Algorithm algorithm);

struct RunConfig {
  Command command = Command::build;
  Algorithm algorithm = Algorithm::line_greedy;
  InstanceKind kind = InstanceKind::line;
  std::string input;
  std::string edges;
  /// Empty: write to the provided output stream.
  std::string output;
  /// Sort 1D input internally; emitted indices still refer to file order.
  bool sort = false;
  bool all_pairs = false;
  double eps = 0.01;
  double separation = 10.0;
  std::size_t n = 10;
  std::optional<std::size_t> guard;
  std::uint64_t seed = 1;
};

/// Runs one command. Module errors are reported on `err` as
/// "error: <code>: <message>" and yield exit status 1.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Edge list of the chosen construction on `points`, in the index space of
/// `points`. With `sort`, unsorted 1D input is sorted and mapped back.
std::vector<Arc> build_edges(const PointSet& points, Algorithm algorithm, bool sort,
                             std::optional<std::size_t> guard);

}  // namespace orspan::cli
