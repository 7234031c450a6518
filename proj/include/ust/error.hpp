#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ust {

/// Stable error categories. The CLI prints `code_name(code)` so scripts can
/// match on it.
enum class ErrorCode {
  invalid_argument,
  out_of_range,
  disconnected,
  self_edge,
  too_large,
  not_spanning_tree,
  parse_error,
  numeric,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::self_edge: return "self_edge";
    case ErrorCode::too_large: return "too_large";
    case ErrorCode::not_spanning_tree: return "not_spanning_tree";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::numeric: return "numeric";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ust
