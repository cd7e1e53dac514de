#include "orspan_cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orspan/error.hpp"

namespace orspan::cli {

namespace {

// Splits text into lines with comments stripped; calls fn(line_no, tokens)
// for every line that still has tokens.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    const auto is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
    };
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      const std::size_t start = pos;
      while (pos < line.size() && !is_space(line[pos])) ++pos;
      if (pos > start) tokens.push_back(line.substr(start, pos - start));
    }
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

double to_double(std::size_t line_no, std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    parse_fail(line_no, "not a finite number: '" + std::string(token) + "'");
  }
  return value;
}

Index to_index(std::size_t line_no, std::string_view token) {
  Index value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(line_no, "not a vertex index: '" + std::string(token) + "'");
  }
  return value;
}

std::string shortest(double v) {
  return nlohmann::json(v).dump();
}

}  // namespace

PointSet parse_points(std::string_view text) {
  std::size_t columns = 0;
  std::vector<Point> pts;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.size() > 2) parse_fail(line_no, "expected 1 or 2 columns");
    if (columns == 0) columns = tokens.size();
    if (tokens.size() != columns) {
      parse_fail(line_no, "expected " + std::to_string(columns) + " columns, got " +
                              std::to_string(tokens.size()));
    }
    Point p{to_double(line_no, tokens[0]), 0.0};
    if (columns == 2) p.y = to_double(line_no, tokens[1]);
    pts.push_back(p);
  });
  if (pts.empty()) throw Error(ErrorCode::parse_error, "no points in input");
  if (columns == 2) return PointSet::in_plane(std::move(pts));
  std::vector<double> xs;
  xs.reserve(pts.size());
  for (const Point& p : pts) xs.push_back(p.x);
  return PointSet::on_line(std::move(xs));
}

std::vector<Arc> parse_edges(std::string_view text) {
  std::vector<Arc> arcs;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 2) parse_fail(line_no, "expected a pair 'u v'");
    arcs.push_back({to_index(line_no, tokens[0]), to_index(line_no, tokens[1])});
  });
  return arcs;
}

std::string format_points(const PointSet& points) {
  std::string out;
  for (const Point& p : points.points()) {
    out += shortest(p.x);
    if (points.dim() == 2) out += " " + shortest(p.y);
    out += "\n";
  }
  return out;
}

std::string format_edges(std::span<const Arc> arcs) {
  std::string out;
  for (const Arc& a : arcs) out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path.string());
}

nlohmann::json number_or_null(double value) {
  if (std::isfinite(value)) return value;
  return nullptr;
}

nlohmann::json report_to_json(const DilationReport& report) {
  nlohmann::json j;
  j["dilation"] = number_or_null(report.dilation);
  j["witness"] = {report.witness.first, report.witness.second};
  j["cycle_length"] = number_or_null(report.cycle_length);
  j["perimeter"] = number_or_null(report.perimeter);
  j["finite"] = report.finite();
  if (!report.pairs.empty()) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const PairDilation& p : report.pairs) {
      pairs.push_back({{"u", p.u},
                       {"v", p.v},
                       {"cycle_length", number_or_null(p.cycle_length)},
                       {"perimeter", p.perimeter},
                       {"dilation", number_or_null(p.dilation)}});
    }
    j["pairs"] = std::move(pairs);
  }
  return j;
}

std::string render_svg(const OrientedGraph& graph) {
  const PointSet& points = graph.base();
  const std::size_t n = points.size();
  constexpr double kWidth = 800.0;
  constexpr double kMargin = 40.0;

  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (n > 0) {
    min_x = max_x = points[0].x;
    min_y = max_y = points[0].y;
    for (const Point& p : points.points()) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double s = (kWidth - 2.0 * kMargin) / span;
  const bool line = points.dim() == 1;
  const double height = line ? kWidth / 2.0 : (max_y - min_y) * s + 2.0 * kMargin;
  const double base_y = height / 2.0;

  const auto sx = [&](Index i) { return kMargin + (points[i].x - min_x) * s; };
  const auto sy = [&](Index i) { return line ? base_y : height - kMargin - (points[i].y - min_y) * s; };

  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                kWidth, height, kWidth, height);
  out += buf;
  out +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
      "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
      "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const Arc& a : graph.arcs()) {
    const double x1 = sx(a.from), y1 = sy(a.from), x2 = sx(a.to), y2 = sy(a.to);
    const bool straight = !line || a.to == a.from + 1;
    if (straight) {
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#333\" "
                    "marker-end=\"url(#arrow)\"/>\n",
                    x1, y1, x2, y2);
    } else {
      // Back edges arch above the line, other forward edges below.
      const double lift = std::abs(x2 - x1) * 0.5 * (a.to < a.from ? -1.0 : 1.0);
      std::snprintf(buf, sizeof buf,
                    "<path d=\"M%.2f,%.2f Q%.2f,%.2f %.2f,%.2f\" fill=\"none\" stroke=\"#333\" "
                    "marker-end=\"url(#arrow)\"/>\n",
                    x1, y1, (x1 + x2) / 2.0, base_y + lift, x2, y2);
    }
    out += buf;
  }
  for (Index i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>"
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" font-family=\"sans-serif\">%zu</text>\n",
                  sx(i), sy(i), sx(i) + 5.0, sy(i) + 16.0, i);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace orspan::cli
