#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ngeta {

using Vertex = int;
using Count = std::uint64_t;

/// Largest supported order. Adjacency rows are single 32-bit words.
inline constexpr int kMaxOrder = 32;

/// Largest order accepted by canonical_form().
inline constexpr int kMaxCanonicalOrder = 10;

/// Bitmask over the vertices of a graph. Bit v set means vertex v is a member.
class VertexSet {
 public:
  using Bits = std::uint32_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs);

  static constexpr VertexSet single(Vertex v) { return VertexSet(Bits{1} << v); }
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Lowest member; undefined on the empty set.
  constexpr Vertex lowest() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (Bits{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(Bits{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Bits bits_ = 0;
};

/// Simple undirected graph of order 1..kMaxOrder stored as adjacency bitsets.
/// Instances are immutable; the edit helpers return modified copies.
class Graph {
 public:
  /// Edgeless graph of order n.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  /// Rows are validated: symmetric, irreflexive, no bits at or above n.
  static Graph from_rows(std::span<const VertexSet::Bits> rows);
  /// Bit e of `mask` is the e-th vertex pair in column-major upper-triangle
  /// order (0,1),(0,2),(1,2),(0,3),... Requires n <= 11.
  static Graph from_pair_mask(int n, std::uint64_t mask);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  VertexSet::Bits row(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  /// Inverse of from_pair_mask().
  std::uint64_t pair_mask() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Induced subgraph on s, relabeled 0..|s|-1 in ascending vertex order.
  Graph induced(VertexSet s) const;
  /// Vertex v of this graph becomes vertex new_label[v] of the result.
  Graph relabeled(std::span<const Vertex> new_label) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::array<VertexSet::Bits, kMaxOrder> rows_{};
};

/// Shortest-path diameter. Disconnected graphs have an infinite diameter.
class Diameter {
 public:
  static constexpr Diameter infinite() { return Diameter(); }
  constexpr explicit Diameter(int value) : value_(value) {}

  constexpr bool is_infinite() const { return value_ < 0; }
  /// Finite value; throws on an infinite diameter.
  int value() const;
  std::string to_string() const;
  friend constexpr bool operator==(Diameter, Diameter) = default;

 private:
  constexpr Diameter() = default;
  int value_ = -1;
};

/// Canonical labeling certificate: the lexicographically least column-major
/// upper-triangle bitstring over all relabelings. The first string bit is the
/// most significant bit of `bits`, so ordering by value is ordering by string.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;

  std::string bitstring() const;
  /// The canonically labeled representative.
  Graph graph() const;
  friend constexpr auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Whether <s> is connected. Throws on empty s.
bool is_connected(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);

/// Vertices reachable from `seed` inside s (seed must lie in s).
VertexSet reach_within(const Graph& g, VertexSet s, Vertex seed);
std::vector<VertexSet> components(const Graph& g, VertexSet s);
int component_count(const Graph& g, VertexSet s);

Diameter diameter(const Graph& g);
VertexSet cut_vertices(const Graph& g);
VertexSet pendant_vertices(const Graph& g);
VertexSet isolated_vertices(const Graph& g);
bool is_p4_free(const Graph& g);
bool is_tree(const Graph& g);

/// Degrees in non-increasing order.
std::vector<int> degree_sequence(const Graph& g);

/// Throws ErrorCode::order_out_of_range for order > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace ngeta
