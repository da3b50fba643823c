#include "ngeta/eta.hpp"

#include <array>

#include "ngeta/error.hpp"

namespace ngeta {

namespace {

using Bits = VertexSet::Bits;

void check_scan_limit(const Graph& g, int scan_limit) {
  if (scan_limit < 1 || scan_limit > kDefaultScanLimit) {
    throw Error(ErrorCode::precondition,
                "scan limit must lie in 1.." + std::to_string(kDefaultScanLimit));
  }
  if (g.order() > scan_limit) {
    throw Error(ErrorCode::order_out_of_range, "order " + std::to_string(g.order()) +
                                                   " above scan limit " + std::to_string(scan_limit));
  }
}

// Hot-loop flood fill over raw rows; `s` must be nonempty.
inline bool connected_mask(const Bits* rows, Bits s) {
  Bits reach = s & (~s + 1);
  Bits frontier = reach;
  while (frontier) {
    Bits next = 0;
    for (Bits f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & s & ~reach;
    reach |= frontier;
  }
  return reach == s;
}

std::array<Bits, kMaxOrder> rows_of(const Graph& g) {
  std::array<Bits, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  return rows;
}

class ExtensionCounter {
 public:
  ExtensionCounter(const Graph& g, EtaProfile& profile) : rows_(rows_of(g)), profile_(profile) {}

  // Counts connected T with s <= T, T disjoint from `excluded`, where
  // `frontier` = N(s) minus s minus excluded.
  void grow(Bits s, Bits frontier, Bits excluded) {
    while (frontier) {
      const Bits w = frontier & (~frontier + 1);
      const Bits with_w = s | w;
      const Bits w_frontier = (frontier | rows_[std::countr_zero(w)]) & ~with_w & ~excluded;
      grow(with_w, w_frontier, excluded);
      // Branch without w: w joins the excluded set.
      excluded |= w;
      frontier &= ~w;
    }
    profile_.add(std::popcount(s));
  }

 private:
  std::array<Bits, kMaxOrder> rows_;
  EtaProfile& profile_;
};

}  // namespace

EtaProfile eta_subset_scan(const Graph& g, int scan_limit) {
  check_scan_limit(g, scan_limit);
  const auto rows = rows_of(g);
  const int n = g.order();
  std::array<Count, kMaxOrder + 1> by_size{};
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < end; ++s) {
    const Bits mask = static_cast<Bits>(s);
    if (connected_mask(rows.data(), mask)) ++by_size[std::popcount(mask)];
  }
  EtaProfile profile(n);
  for (int k = 1; k <= n; ++k) profile.add(k, by_size[k]);
  return profile;
}

EtaProfile eta_extension(const Graph& g, int scan_limit) {
  check_scan_limit(g, scan_limit);
  EtaProfile profile(g.order());
  ExtensionCounter counter(g, profile);
  for (int v = 0; v < g.order(); ++v) {
    const Bits self = Bits{1} << v;
    const Bits below = self - 1;
    counter.grow(self, g.row(v) & ~below, below | self);
  }
  return profile;
}

Count eta_tree_dp(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::not_a_tree, "eta_tree_dp requires a tree");
  const int n = t.order();
  // BFS order from vertex 0; parents precede children.
  std::array<Vertex, kMaxOrder> order{};
  std::array<Vertex, kMaxOrder> parent{};
  parent[0] = -1;
  int head = 0;
  int tail = 1;
  Bits seen = 1;
  while (head < tail) {
    const Vertex v = order[head++];
    for (Vertex w : VertexSet(t.row(v) & ~seen)) {
      seen |= Bits{1} << w;
      parent[w] = v;
      order[tail++] = w;
    }
  }
  // rooted[v]: subtrees whose topmost vertex is v = prod over children (1 + rooted[child]).
  std::array<Count, kMaxOrder> rooted{};
  rooted.fill(1);
  Count total = 0;
  for (int i = n - 1; i >= 0; --i) {
    const Vertex v = order[i];
    total += rooted[v];
    if (parent[v] >= 0) rooted[parent[v]] *= 1 + rooted[v];
  }
  return total;
}

Count eta_rooted(const Graph& g, VertexSet roots, int scan_limit) {
  check_scan_limit(g, scan_limit);
  if (roots.empty()) throw Error(ErrorCode::precondition, "eta_rooted needs at least one root");
  if (!roots.is_subset_of(g.vertices())) throw Error(ErrorCode::precondition, "root outside the graph");
  const auto rows = rows_of(g);
  const Bits rest = g.vertices().bits() & ~roots.bits();
  Count count = 0;
  // Every subset of `rest`, the empty one included.
  Bits extra = rest;
  while (true) {
    if (connected_mask(rows.data(), roots.bits() | extra)) ++count;
    if (extra == 0) break;
    extra = (extra - 1) & rest;
  }
  return count;
}

Count eta(const Graph& g, int scan_limit) { return eta_subset_scan(g, scan_limit).total(); }

NgReport ng_report(const Graph& g, int scan_limit) {
  check_scan_limit(g, scan_limit);
  const int n = g.order();
  const auto rows = rows_of(g);
  const auto bar_rows = rows_of(complement(g));
  NgReport r;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < end; ++s) {
    const Bits mask = static_cast<Bits>(s);
    const bool in_g = connected_mask(rows.data(), mask);
    const bool in_bar = connected_mask(bar_rows.data(), mask);
    r.eta_g += in_g;
    r.eta_gbar += in_bar;
    if (in_g && in_bar && (mask & (mask - 1))) ++r.ng_set_size;
  }
  r.sum = r.eta_g + r.eta_gbar;
  if (r.sum != (end - 1) + static_cast<Count>(n) + r.ng_set_size) {
    throw Error(ErrorCode::internal, "eta(G)+eta(Gbar) disagrees with 2^n-1+n+|N(G,Gbar)|");
  }
  return r;
}

namespace {

void check_disjoint_pair(const Graph& g, VertexSet x, VertexSet y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::precondition, "x and y must be nonempty");
  if (x.intersects(y)) throw Error(ErrorCode::precondition, "x and y must be disjoint");
  if (!(x | y).is_subset_of(g.vertices())) throw Error(ErrorCode::precondition, "x or y outside the graph");
}

}  // namespace

Count s_count(const Graph& g, VertexSet x, VertexSet y) {
  check_disjoint_pair(g, x, y);
  const VertexSet xy = x | y;
  const int m = xy.size();
  if (m + 1 > kMaxOrder) throw Error(ErrorCode::order_out_of_range, "x|y too large for the apex graph");

  // Auxiliary graph: <x|y> relabeled 0..m-1, apex at m adjacent to all of x.
  std::array<Vertex, kMaxOrder> label{};
  int next = 0;
  for (Vertex v : xy) label[v] = next++;
  std::array<Bits, kMaxOrder> aux_rows{};
  Bits x_local = 0;
  Bits y_local = 0;
  for (Vertex v : xy) {
    Bits row = 0;
    for (Vertex w : g.neighbors(v) & xy) row |= Bits{1} << label[w];
    if (x.contains(v)) {
      row |= Bits{1} << m;
      aux_rows[m] |= Bits{1} << label[v];
      x_local |= Bits{1} << label[v];
    } else {
      y_local |= Bits{1} << label[v];
    }
    aux_rows[label[v]] = row;
  }
  const Graph aux = Graph::from_rows(std::span(aux_rows.data(), m + 1));
  const auto rows = rows_of(aux);
  const Bits apex = Bits{1} << m;

  Count count = 0;
  const Bits all = (Bits{1} << m) - 1;
  for (Bits z = all; z; z = (z - 1) & all) {
    if ((z & x_local) && (z & y_local) && connected_mask(rows.data(), z | apex)) ++count;
  }
  return count;
}

Count r_count(const Graph& g, VertexSet x, VertexSet y) {
  check_disjoint_pair(g, x, y);
  const Bits xs = x.bits();
  const Bits ys = y.bits();
  const Bits all = xs | ys;
  Count count = 0;
  for (Bits z = all; z; z = (z - 1) & all) {
    if (!(z & xs) || !(z & ys)) continue;
    bool crossing = false;
    for (Vertex v : VertexSet(z & xs)) {
      if (g.row(v) & z & ys) {
        crossing = true;
        break;
      }
    }
    count += crossing;
  }
  return count;
}

}  // namespace ngeta
