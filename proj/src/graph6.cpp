#include "ngeta/graph6.hpp"

#include "ngeta/error.hpp"

namespace ngeta {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::malformed_record, "graph6: " + why); }

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.starts_with(kGraph6Header)) record.remove_prefix(kGraph6Header.size());
  if (!record.empty() && record.back() == '\r') record.remove_suffix(1);
  if (record.empty()) malformed("empty record");
  for (char ch : record) {
    const auto byte = static_cast<unsigned char>(ch);
    if (byte < 63 || byte > 126) malformed("byte " + std::to_string(byte) + " outside 63..126");
  }

  const int first = static_cast<unsigned char>(record[0]) - 63;
  if (first == 63) {
    throw Error(ErrorCode::order_out_of_range, "graph6: long-form orders (n > 62) are not supported");
  }
  const int n = first;
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::order_out_of_range,
                "graph6: order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }

  const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (pair_count + 5) / 6;
  if (record.size() - 1 < byte_count) malformed("truncated record");
  if (record.size() - 1 > byte_count) malformed("trailing bytes after edge data");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(record[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    const int byte = static_cast<unsigned char>(record[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) malformed("nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int bits = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + bits));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
  return out;
}

}  // namespace ngeta
