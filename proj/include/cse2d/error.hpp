#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cse2d {

enum class Errc {
  ragged_rows,
  symbol_out_of_range,
  anchor_out_of_range,
  dimension_mismatch,
  empty_block,
  rank_out_of_range,
  oversize_query,
  not_primitive,
  ledger_incomplete,
  axis_unavailable,
  underdetermined_counts,
  inconsistent_counts,
  non_positive,
  value_out_of_interval,
  bad_magic,
  unsupported_version,
  truncated_stream,
  too_large,
  cap_exceeded,
  bad_spec,
  bad_format,
};

std::string_view errc_name(Errc code) noexcept;

// Every recoverable failure in the library is reported through this type;
// code() identifies the condition, what() carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cse2d
