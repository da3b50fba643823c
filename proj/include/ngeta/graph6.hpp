#pragma once

#include <string>
#include <string_view>

#include "ngeta/graph.hpp"

namespace ngeta {

/// Optional stream header accepted in front of the first graph6 record.
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 record (short form only: 1 <= n <= 62, further capped at
/// kMaxOrder). A leading ">>graph6<<" header and a trailing '\r' are
/// tolerated. Padding bits must be zero. Throws ErrorCode::malformed_record or
/// ErrorCode::order_out_of_range.
Graph parse_graph6(std::string_view record);

std::string emit_graph6(const Graph& g);

}  // namespace ngeta
