#include "orspan/error.hpp"

namespace orspan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::duplicate_point: return "duplicate_point";
    case ErrorCode::too_few_points: return "too_few_points";
    case ErrorCode::not_oriented: return "not_oriented";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::self_loop: return "self_loop";
    case ErrorCode::not_sorted: return "not_sorted";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::crossing_edges: return "crossing_edges";
    case ErrorCode::missing_baseline: return "missing_baseline";
    case ErrorCode::not_maximal: return "not_maximal";
    case ErrorCode::not_orientable: return "not_orientable";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::guard_exceeded: return "guard_exceeded";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace orspan
