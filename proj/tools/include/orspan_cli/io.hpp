#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orspan/oriented_graph.hpp"

namespace orspan::cli {

/// One point per line, 1 or 2 whitespace-separated decimals, `#` comments,
/// LF or CRLF. The column count must not change between lines.
PointSet parse_points(std::string_view text);

/// One directed pair "u v" per line, same comment and line-ending rules.
std::vector<Arc> parse_edges(std::string_view text);

std::string format_points(const PointSet& points);
std::string format_edges(std::span<const Arc> arcs);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// {dilation, witness, cycle_length, perimeter, finite[, pairs]}; infinite
/// values become null.
nlohmann::json report_to_json(const DilationReport& report);

/// Finite doubles as numbers, infinity as null.
nlohmann::json number_or_null(double value);

/// Labelled dots and arrowed edges. 1D sets are drawn on a horizontal line
/// with consecutive edges straight, right-to-left edges arched above and any
/// other left-to-right edge arched below.
std::string render_svg(const OrientedGraph& graph);

}  // namespace orspan::cli
