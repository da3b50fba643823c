#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library: adjacency is a plain matrix and every connectivity test is
// a fresh BFS.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ngeta/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const ngeta::Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = g.has_edge(u, v);
  }
  return m;
}

inline Matrix complement(const Matrix& a) {
  Matrix m = a;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < a.size(); ++v) m[u][v] = u != v && !a[u][v];
  }
  return m;
}

inline bool connected(const Matrix& a, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<bool> in(a.size(), false), seen(a.size(), false);
  for (int v : s) in[v] = true;
  std::queue<int> q;
  q.push(s[0]);
  seen[s[0]] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (in[w] && !seen[w] && a[v][w]) {
        seen[w] = true;
        ++reached;
        q.push(static_cast<int>(w));
      }
    }
  }
  return reached == s.size();
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

// Connected induced subgraphs by size; index 0 unused.
inline std::vector<std::uint64_t> profile(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const auto vs = members(s);
    if (connected(a, vs)) ++counts[vs.size()];
  }
  return counts;
}

inline std::uint64_t eta(const Matrix& a) {
  const auto p = profile(a);
  return std::accumulate(p.begin(), p.end(), std::uint64_t{0});
}

inline std::uint64_t rooted(const Matrix& a, std::uint64_t roots) {
  const int n = static_cast<int>(a.size());
  std::uint64_t count = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if ((s & roots) == roots && connected(a, members(s))) ++count;
  }
  return count;
}

// s and r counts straight from their definitions.
inline std::uint64_t s_count(const Matrix& a, std::uint64_t x, std::uint64_t y) {
  const int n = static_cast<int>(a.size());
  Matrix aux(n + 1, std::vector<bool>(n + 1, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) aux[u][v] = a[u][v];
    if ((x >> u) & 1U) aux[u][n] = aux[n][u] = true;
  }
  std::uint64_t count = 0;
  const std::uint64_t xy = x | y;
  for (std::uint64_t z = 1; z < (std::uint64_t{1} << n); ++z) {
    if ((z & ~xy) || !(z & x) || !(z & y)) continue;
    auto vs = members(z);
    vs.insert(vs.begin(), n);
    if (connected(aux, vs)) ++count;
  }
  return count;
}

inline std::uint64_t r_count(const Matrix& a, std::uint64_t x, std::uint64_t y) {
  const int n = static_cast<int>(a.size());
  std::uint64_t count = 0;
  const std::uint64_t xy = x | y;
  for (std::uint64_t z = 1; z < (std::uint64_t{1} << n); ++z) {
    if ((z & ~xy) || !(z & x) || !(z & y)) continue;
    bool edge = false;
    for (int u : members(z & x)) {
      for (int v : members(z & y)) edge = edge || a[u][v];
    }
    count += edge;
  }
  return count;
}

// Least column-major upper-triangle string over all n! relabelings.
inline std::string canonical_string(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    // p[new] = old
    std::string s;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) s += a[p[i]][p[j]] ? '1' : '0';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Tree from a Pruefer sequence over 0..n-1.
inline std::vector<std::pair<int, int>> pruefer_tree(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

// Isomorphism invariant of a free tree: the least AHU string over its centers.
inline std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::function<std::string(int, int)> code = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v]) {
      if (w != parent) kids.push_back(code(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : layer) {
    const std::string s = code(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

inline std::string tree_code(const ngeta::Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return tree_code(adj);
}

// Isomorphism classes of trees of order n (n >= 2) via all Pruefer sequences.
inline std::set<std::string> pruefer_tree_classes(int n) {
  std::set<std::string> classes;
  if (n == 2) {
    classes.insert(tree_code(std::vector<std::vector<int>>{{1}, {0}}));
    return classes;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : pruefer_tree(seq, n)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    classes.insert(tree_code(adj));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
  return classes;
}

// Reference graph6 encoder over the pair list, one bit at a time.
inline std::string graph6(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(a[i][j] ? 1 : 0);
  }
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = 2 * v + bits[k + b];
    out += static_cast<char>(63 + v);
  }
  return out;
}

}  // namespace oracle
