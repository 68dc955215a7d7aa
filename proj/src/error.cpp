#include "cse2d/error.hpp"

namespace cse2d {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ragged_rows: return "RaggedRows";
    case Errc::symbol_out_of_range: return "SymbolOutOfRange";
    case Errc::anchor_out_of_range: return "AnchorOutOfRange";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_block: return "EmptyBlock";
    case Errc::rank_out_of_range: return "RankOutOfRange";
    case Errc::oversize_query: return "OversizeQuery";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::ledger_incomplete: return "LedgerIncomplete";
    case Errc::axis_unavailable: return "AxisUnavailable";
    case Errc::underdetermined_counts: return "UnderdeterminedCounts";
    case Errc::inconsistent_counts: return "InconsistentCounts";
    case Errc::non_positive: return "NonPositive";
    case Errc::value_out_of_interval: return "ValueOutOfInterval";
    case Errc::bad_magic: return "BadMagic";
    case Errc::unsupported_version: return "UnsupportedVersion";
    case Errc::truncated_stream: return "TruncatedStream";
    case Errc::too_large: return "TooLarge";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::bad_spec: return "BadSpec";
    case Errc::bad_format: return "BadFormat";
  }
  return "Unknown";
}

}  // namespace cse2d
