#include "ngeta/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "ngeta/error.hpp"

namespace ngeta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::order_out_of_range: return "order_out_of_range";
    case ErrorCode::invalid_parameter: return "invalid_parameter";
    case ErrorCode::not_a_tree: return "not_a_tree";
    case ErrorCode::disconnected_input: return "disconnected_input";
    case ErrorCode::malformed_record: return "malformed_record";
    case ErrorCode::usage: return "usage";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxOrder) {
      throw Error(ErrorCode::precondition, "vertex id out of range: " + std::to_string(v));
    }
    bits_ |= Bits{1} << v;
  }
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::order_out_of_range,
                "graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::precondition,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw Error(ErrorCode::precondition, "self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= VertexSet::Bits{1} << v;
    g.rows_[v] |= VertexSet::Bits{1} << u;
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::span<const VertexSet::Bits> rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  const auto inside = VertexSet::full(n).bits();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~inside) throw Error(ErrorCode::precondition, "adjacency row has bits beyond order");
    if ((rows[v] >> v) & 1U) throw Error(ErrorCode::precondition, "adjacency is not irreflexive");
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u) {
    for (Vertex v : VertexSet(rows[u])) {
      if (!((rows[v] >> u) & 1U)) throw Error(ErrorCode::precondition, "adjacency is not symmetric");
    }
  }
  return g;
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  if (n > 11) throw Error(ErrorCode::order_out_of_range, "pair mask supports order <= 11");
  Graph g(n);
  int e = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++e) {
      if ((mask >> e) & 1U) {
        g.rows_[i] |= VertexSet::Bits{1} << j;
        g.rows_[j] |= VertexSet::Bits{1} << i;
      }
    }
  }
  return g;
}

std::uint64_t Graph::pair_mask() const {
  if (n_ > 11) throw Error(ErrorCode::order_out_of_range, "pair mask supports order <= 11");
  std::uint64_t mask = 0;
  int e = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i, ++e) {
      if (has_edge(i, j)) mask |= std::uint64_t{1} << e;
    }
  }
  return mask;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::precondition, "self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[u] |= VertexSet::Bits{1} << v;
  g.rows_[v] |= VertexSet::Bits{1} << u;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.rows_[u] &= ~(VertexSet::Bits{1} << v);
  g.rows_[v] &= ~(VertexSet::Bits{1} << u);
  return g;
}

Graph Graph::induced(VertexSet s) const {
  if (s.empty() || !s.is_subset_of(vertices())) {
    throw Error(ErrorCode::precondition, "induced subgraph needs a nonempty subset of the vertices");
  }
  std::array<Vertex, kMaxOrder> label{};
  int next = 0;
  for (Vertex v : s) label[v] = next++;
  Graph g(next);
  for (Vertex v : s) {
    for (Vertex w : neighbors(v) & s) g.rows_[label[v]] |= VertexSet::Bits{1} << label[w];
  }
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw Error(ErrorCode::precondition, "relabeling must cover every vertex");
  }
  VertexSet::Bits seen = 0;
  for (Vertex l : new_label) {
    check_vertex(l);
    seen |= VertexSet::Bits{1} << l;
  }
  if (seen != vertices().bits()) throw Error(ErrorCode::precondition, "relabeling is not a permutation");
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    for (Vertex w : neighbors(v)) g.rows_[new_label[v]] |= VertexSet::Bits{1} << new_label[w];
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

int Diameter::value() const {
  if (is_infinite()) throw Error(ErrorCode::precondition, "diameter is infinite");
  return value_;
}

std::string Diameter::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<VertexSet::Bits, kMaxOrder> rows{};
  const auto all = g.vertices().bits();
  for (int v = 0; v < n; ++v) rows[v] = all & ~g.row(v) & ~(VertexSet::Bits{1} << v);
  return Graph::from_rows(std::span(rows.data(), n));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<Vertex, Vertex>> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), es);
}

VertexSet reach_within(const Graph& g, VertexSet s, Vertex seed) {
  VertexSet::Bits reach = VertexSet::Bits{1} << seed;
  VertexSet::Bits frontier = reach;
  const VertexSet::Bits allowed = s.bits();
  while (frontier) {
    VertexSet::Bits next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    frontier = next & allowed & ~reach;
    reach |= frontier;
  }
  return VertexSet(reach);
}

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error(ErrorCode::precondition, "connectivity of the empty vertex set");
  return reach_within(g, s, s.lowest()) == s;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  while (!s.empty()) {
    VertexSet c = reach_within(g, s, s.lowest());
    out.push_back(c);
    s = s - c;
  }
  return out;
}

int component_count(const Graph& g, VertexSet s) {
  int count = 0;
  while (!s.empty()) {
    s = s - reach_within(g, s, s.lowest());
    ++count;
  }
  return count;
}

Diameter diameter(const Graph& g) {
  const auto all = g.vertices();
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet::Bits reach = VertexSet::Bits{1} << v;
    VertexSet::Bits frontier = reach;
    int depth = 0;
    while (true) {
      VertexSet::Bits next = 0;
      for (Vertex w : VertexSet(frontier)) next |= g.row(w);
      frontier = next & ~reach;
      if (!frontier) break;
      reach |= frontier;
      ++depth;
    }
    if (reach != all.bits()) return Diameter::infinite();
    best = std::max(best, depth);
  }
  return Diameter(best);
}

VertexSet cut_vertices(const Graph& g) {
  const auto all = g.vertices();
  const int base = component_count(g, all);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (component_count(g, all.without(v)) > base) out = out.with(v);
  }
  return out;
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out = out.with(v);
  }
  return out;
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out = out.with(v);
  }
  return out;
}

bool is_p4_free(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const VertexSet quad{a, b, c, d};
          int edges = 0;
          int max_degree = 0;
          for (Vertex v : quad) {
            const int deg = (g.neighbors(v) & quad).size();
            edges += deg;
            max_degree = std::max(max_degree, deg);
          }
          // 3 edges, max degree 2, on 4 vertices: a path (the other two
          // 3-edge shapes are the claw and triangle plus isolated vertex,
          // both of which have a degree-3 or degree-0 vertex).
          if (edges == 6 && max_degree == 2 && is_connected(g, quad)) return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.order() - 1 && is_connected(g);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string CanonicalForm::bitstring() const {
  const int m = order * (order - 1) / 2;
  std::string s(m, '0');
  for (int k = 0; k < m; ++k) {
    if ((bits >> (m - 1 - k)) & 1U) s[k] = '1';
  }
  return s;
}

Graph CanonicalForm::graph() const {
  const int m = order * (order - 1) / 2;
  std::vector<std::pair<Vertex, Vertex>> es;
  int k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((bits >> (m - 1 - k)) & 1U) es.emplace_back(i, j);
    }
  }
  return Graph::from_edges(order, es);
}

namespace {

// Branch and bound over relabelings. Positions are filled in order; placing
// position p fixes string bits [p(p-1)/2, p(p+1)/2), the p-th column. A
// partial string that already exceeds the best prefix is cut off. Unplaced
// vertices that are twins in g are interchangeable by an automorphism fixing
// every other vertex, so only one of each twin group is tried per node.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), m_(n_ * (n_ - 1) / 2) {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (a == b) continue;
        const auto na = g.neighbors(a).without(b);
        const auto nb = g.neighbors(b).without(a);
        if (na == nb) twins_[a] = twins_[a].with(b);
      }
    }
  }

  std::uint64_t run() {
    best_ = std::numeric_limits<std::uint64_t>::max();
    descend(0, g_.vertices(), 0);
    return best_;
  }

 private:
  void descend(int position, VertexSet unplaced, std::uint64_t prefix) {
    if (unplaced.empty()) {
      best_ = std::min(best_, prefix);
      return;
    }
    const int prefix_len = position * (position + 1) / 2;
    VertexSet tried;
    for (Vertex v : unplaced) {
      if (twins_[v].intersects(tried)) continue;
      tried = tried.with(v);
      std::uint64_t next = prefix;
      for (int i = 0; i < position; ++i) next = (next << 1) | (g_.has_edge(placed_[i], v) ? 1U : 0U);
      if (m_ > 0) {
        const std::uint64_t best_prefix = best_ >> (m_ - prefix_len);
        if (best_ != std::numeric_limits<std::uint64_t>::max() && next > best_prefix) continue;
      }
      placed_[position] = v;
      descend(position + 1, unplaced.without(v), next);
    }
  }

  const Graph& g_;
  int n_;
  int m_;
  std::array<VertexSet, kMaxOrder> twins_{};
  std::array<Vertex, kMaxOrder> placed_{};
  std::uint64_t best_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::order_out_of_range,
                "canonical form supports order <= " + std::to_string(kMaxCanonicalOrder));
  }
  CanonicalSearch search(g);
  return CanonicalForm{g.order(), search.run()};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace ngeta
