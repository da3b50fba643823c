#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ngeta/graph.hpp"

namespace ngeta {

inline constexpr int kMaxLabeledOrder = 8;
inline constexpr int kMaxTreeOrder = 18;
inline constexpr int kMinUnicyclicOrder = 4;
inline constexpr int kMaxUnicyclicOrder = 10;

enum class ClassKind { all_labeled, trees, unicyclic, stream };

/// Textual forms: `labeled:N`, `trees:N`, `unicyclic:N`, `graph6:PATH`
/// (PATH `-` reads standard input).
struct GraphClassSpec {
  ClassKind kind = ClassKind::all_labeled;
  int order = 0;       // unused for streams
  std::string source;  // streams only

  static GraphClassSpec parse(std::string_view text);
  static GraphClassSpec labeled(int n) { return {ClassKind::all_labeled, n, {}}; }
  static GraphClassSpec trees(int n) { return {ClassKind::trees, n, {}}; }
  static GraphClassSpec unicyclic(int n) { return {ClassKind::unicyclic, n, {}}; }
  static GraphClassSpec stream(std::string source) { return {ClassKind::stream, 0, std::move(source)}; }

  /// Throws ErrorCode::order_out_of_range when the order is beyond the class limit.
  void validate() const;
  std::string to_string() const;
};

/// All 2^(n(n-1)/2) labeled graphs on n vertices, indexed by their pair mask
/// (see Graph::from_pair_mask), in ascending mask order.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(int n);

  int order() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << (n_ * (n_ - 1) / 2); }
  Graph at(std::uint64_t index) const { return Graph::from_pair_mask(n_, index); }

 private:
  int n_;
};

/// Isomorph-free free trees of order n by level-sequence successor
/// generation (center-rooted canonical level sequences).
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);
  std::optional<Graph> next();

 private:
  int n_;
  bool started_ = false;
  std::optional<std::vector<int>> layout_;
};

std::vector<Graph> free_trees(int n);

/// One representative per isomorphism class of connected graphs with n
/// vertices and n edges, sorted by canonical form.
std::vector<Graph> unicyclic_graphs(int n);

/// Reads graph6 records line by line. Blank lines are skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, int order_cap = kMaxOrder) : in_(in), cap_(order_cap) {}

  /// Next graph, or nullopt at end of input. Errors carry the line number.
  std::optional<Graph> next();
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  int cap_;
  std::size_t line_ = 0;
};

std::vector<Graph> stream_graph6(std::istream& in, int order_cap = kMaxOrder);

/// A class laid out for indexed, chunkable access: labeled classes are
/// decoded lazily from the index, everything else is materialized.
class GraphCollection {
 public:
  /// `stdin_stream` serves `graph6:-`; other paths are opened as files.
  static GraphCollection from_spec(const GraphClassSpec& spec, std::istream* stdin_stream = nullptr);
  static GraphCollection from_graphs(std::vector<Graph> graphs);

  std::uint64_t size() const;
  Graph at(std::uint64_t index) const;

 private:
  explicit GraphCollection(std::variant<LabeledGraphs, std::vector<Graph>> items) : items_(std::move(items)) {}
  std::variant<LabeledGraphs, std::vector<Graph>> items_;
};

}  // namespace ngeta
