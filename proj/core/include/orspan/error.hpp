#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orspan {

enum class ErrorCode {
  invalid_argument,
  index_out_of_range,
  duplicate_point,
  too_few_points,
  not_oriented,
  duplicate_edge,
  self_loop,
  not_sorted,
  dimension_mismatch,
  crossing_edges,
  missing_baseline,
  not_maximal,
  not_orientable,
  degenerate,
  guard_exceeded,
  parse_error,
  io_error,
};

/// Stable identifier used in machine-readable error lines, e.g. "not_oriented".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orspan
