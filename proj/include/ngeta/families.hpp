#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ngeta/eta.hpp"
#include "ngeta/graph.hpp"

namespace ngeta {

enum class Family { star, complete, path, cycle, double_star, r_graph, u_graph };

/// A named construction with its integer parameters.
///
/// Textual form is `name:p1[,p2]`, e.g. `star:7`, `double_star:2,3`, `r:6,2`,
/// `u:8`. Accepted names: star, complete (or k), path (or p), cycle (or c),
/// double_star, r_graph (or r), u_graph (or u).
struct FamilySpec {
  Family family = Family::star;
  std::vector<int> params;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Deterministic labeled instance. Centers come first, then the clique
/// vertices, then leaves:
///   star:n          center 0, leaves 1..n-1                  (n >= 1)
///   complete:n      K_n                                      (n >= 1)
///   path:n          0-1-...-(n-1)                             (n >= 1)
///   cycle:n         path plus edge (n-1)-0                    (n >= 3)
///   double_star:t,s centers 0 (s leaves) and 1 (t leaves); order t+s+2,
///                   degree sequence (s+1, t+1, 1, ..., 1)     (1 <= t <= s)
///   r_graph:n,k     K_{n-k} on 0..n-k-1, k leaves on vertex 0 (n > 4, 1 <= k < n-2)
///   u_graph:n       triangle 0,1,2 with n-3 leaves on 0      (n > 3)
Graph build(const FamilySpec& spec);

/// Merge of vertex u of g with vertex v of h, plus one isolated vertex.
///
/// Labels: g keeps 0..|g|-1 (u is the merged vertex), the rest of h follows in
/// ascending order, the isolated vertex is last. The returned record carries
/// the brute-force values that the construction identities are checked on.
struct MergeResult {
  Graph graph;
  Count eta_merged = 0;          // eta(B u K1)
  Count eta_merged_bar = 0;      // eta(complement of B u K1)
  Count eta_union = 0;           // eta(G u H)
  Count eta_union_bar = 0;       // eta(complement of G u H)
  Count eta_g = 0, eta_h = 0;
  Count rooted_g = 0, rooted_h = 0;  // eta(G)_u, eta(H)_v
};

/// Throws ErrorCode::disconnected_input unless g and h are connected, and
/// ErrorCode::internal if either closed form disagrees with brute force.
MergeResult merge_with_k1(const Graph& g, Vertex u, const Graph& h, Vertex v);

/// H: v joined to a new vertex c carrying k leaves. K: v carrying k+1 new
/// leaves. Both have order |g|+k+1; new vertices are appended, c first.
struct StretchResult {
  Graph h;
  Graph k;
  int order = 0;
  int r = 0;                       // degree of v in the complement of g
  std::int64_t eta_difference = 0;  // eta(K) - eta(H)
  std::int64_t bar_difference = 0;  // eta(Kbar) - eta(Hbar)
  Count rooted_v = 0;              // eta(G)_v

  std::int64_t combined_difference() const { return eta_difference + bar_difference; }
};

/// Throws ErrorCode::disconnected_input for disconnected g, and
/// ErrorCode::internal if either difference formula fails or the combined
/// difference is not positive when r >= 2.
StretchResult stretch_pair(const Graph& g, Vertex v, int k);

}  // namespace ngeta
