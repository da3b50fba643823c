#pragma once

#include <cstdint>
#include <vector>

#include "ngeta/graph.hpp"

namespace ngeta {

/// Default and maximum order for the 2^n subset sweeps.
inline constexpr int kDefaultScanLimit = 26;

/// Number of connected induced subgraphs by vertex count.
class EtaProfile {
 public:
  explicit EtaProfile(int order) : counts_(order + 1, 0) {}

  int order() const { return static_cast<int>(counts_.size()) - 1; }
  /// Count of connected sets of exactly k vertices, 1 <= k <= order.
  Count at(int k) const { return counts_.at(k); }
  Count total() const { return total_; }

  void add(int k, Count c = 1) {
    counts_.at(k) += c;
    total_ += c;
  }

  friend bool operator==(const EtaProfile&, const EtaProfile&) = default;

 private:
  std::vector<Count> counts_;
  Count total_ = 0;
};

/// eta(G), eta(complement G) and the number of sets of size > 1 connected in both.
struct NgReport {
  Count eta_g = 0;
  Count eta_gbar = 0;
  Count sum = 0;
  Count ng_set_size = 0;

  friend bool operator==(const NgReport&, const NgReport&) = default;
};

/// Sweep of every nonempty vertex subset with a flood-fill connectivity test.
EtaProfile eta_subset_scan(const Graph& g, int scan_limit = kDefaultScanLimit);

/// Independent route: for each v, grows the connected sets whose minimum
/// vertex is v by branching include/exclude on the lowest frontier vertex.
EtaProfile eta_extension(const Graph& g, int scan_limit = kDefaultScanLimit);

/// Number of subtrees of a tree in linear time. Throws ErrorCode::not_a_tree.
Count eta_tree_dp(const Graph& t);

/// Connected induced subgraphs that contain every vertex of `roots`.
Count eta_rooted(const Graph& g, VertexSet roots, int scan_limit = kDefaultScanLimit);

/// Convenience: eta_subset_scan(g).total().
Count eta(const Graph& g, int scan_limit = kDefaultScanLimit);

/// One sweep over all subsets evaluating connectivity in g and its complement.
/// Verifies sum == 2^n - 1 + n + ng_set_size before returning.
NgReport ng_report(const Graph& g, int scan_limit = kDefaultScanLimit);

/// Z subset of x|y meeting both x and y with <{apex} | Z> connected, where the
/// apex is a new vertex adjacent to every vertex of x.
Count s_count(const Graph& g, VertexSet x, VertexSet y);

/// Z subset of x|y meeting both x and y where <Z> has an edge between x and y.
Count r_count(const Graph& g, VertexSet x, VertexSet y);

}  // namespace ngeta
