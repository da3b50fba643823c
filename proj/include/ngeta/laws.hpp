#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ngeta/eta.hpp"
#include "ngeta/generators.hpp"
#include "ngeta/graph.hpp"

namespace ngeta {

struct SearchOptions {
  int workers = 1;
  int scan_limit = kDefaultScanLimit;
  std::size_t max_counterexamples = 100;
};

/// One isomorphism class attaining an extreme: its canonical form and the
/// first labeled member met in class order. Above kMaxCanonicalOrder the form
/// is absent and the class is taken to be isomorph-free already.
struct Certificate {
  std::optional<CanonicalForm> form;
  Graph witness;
};

struct ExtremalReport {
  std::string class_spec;
  int order = 0;
  Count min = 0;
  Count max = 0;
  std::vector<Certificate> argmin;  // sorted by canonical form, else class order
  std::vector<Certificate> argmax;  // sorted by canonical form, else class order
  std::uint64_t class_size = 0;
};

struct Counterexample {
  std::string graph6;
  std::string detail;
};

struct LawReport {
  LawReport() = default;
  LawReport(std::string law_id, std::string domain_text) : law(std::move(law_id)), domain(std::move(domain_text)) {}

  std::string law;
  std::string domain;
  std::uint64_t instances_checked = 0;
  std::uint64_t counterexample_total = 0;
  std::vector<Counterexample> counterexamples;  // first max_counterexamples, in class order
  std::vector<std::string> notes;               // informational observations

  bool pass() const { return counterexamples.empty(); }
  void add_counterexample(const Graph& g, std::string detail, std::size_t cap);
};

/// Evaluates ng_report on every member; all members must share one order.
/// Output does not depend on opts.workers.
ExtremalReport search_extremal(const GraphCollection& graphs, const std::string& class_spec,
                               const SearchOptions& opts = {});
ExtremalReport search_extremal(const GraphClassSpec& spec, const SearchOptions& opts = {},
                               std::istream* stdin_stream = nullptr);

/// sum >= 2^n+n-1 with equality exactly on P4-free graphs.
LawReport check_min_bound(const GraphCollection& graphs, const std::string& domain, const SearchOptions& opts = {});
/// eta_k(G) + eta_k(Gbar) >= C(n,k) for every k >= 2.
LawReport check_per_size_bound(const GraphCollection& graphs, const std::string& domain,
                               const SearchOptions& opts = {});
/// Rooted pair counts: sum >= 2^(n-2), equality when u,v are split in G or Gbar.
LawReport check_pair_lemma(const GraphCollection& graphs, const std::string& domain, const SearchOptions& opts = {});
/// Rooted vertex counts: sum >= 2^(n-1)+1, equality for isolated v, strict when
/// G and Gbar are both connected and n > 1.
LawReport check_vertex_lemma(const GraphCollection& graphs, const std::string& domain,
                             const SearchOptions& opts = {});
/// Deleting an edge uv with N(u)-v = N(v)-u leaves the sum unchanged.
LawReport check_twin_edge(const GraphCollection& graphs, const std::string& domain, const SearchOptions& opts = {});
/// s_G(X,Y) + s_Gbar(Y,X) >= (2^|X|-1)(2^|Y|-1). Every disjoint (X,Y) for
/// order <= 6; otherwise `samples_per_graph` pairs drawn from a per-graph seed.
LawReport check_subset_counter_inequality(const GraphCollection& graphs, const std::string& domain,
                                          const SearchOptions& opts = {}, int samples_per_graph = 16);

/// Disjoint-union identity over explicit (h, k) pairs.
LawReport check_disjoint_union(const std::vector<std::pair<Graph, Graph>>& pairs, const std::string& domain,
                               const SearchOptions& opts = {});
/// Every labeled pair (h, k) with |h| + |k| = n, 2 <= n <= 8.
LawReport check_disjoint_union(int n, const SearchOptions& opts = {});

struct MergeInstance {
  Graph g;
  Vertex u;
  Graph h;
  Vertex v;
};
struct StretchInstance {
  Graph g;
  Vertex v;
  int k;
};

/// Both merge identities plus the two inequalities. The sum equality case is
/// u and v universal, or either side of order 1.
LawReport check_merge(const std::vector<MergeInstance>& instances, const std::string& domain,
                      const SearchOptions& opts = {});
/// Both stretch identities plus positivity for r >= 2.
LawReport check_stretch(const std::vector<StretchInstance>& instances, const std::string& domain,
                        const SearchOptions& opts = {});
/// Every connected labeled (g, h) with |g|+|h| = n (n <= 6) and every (u, v);
/// `count` seeded random instances of total order n otherwise.
std::vector<MergeInstance> merge_instances(int n, std::size_t count = 500, std::uint64_t seed = 1);
/// Every connected labeled g, vertex v and k >= 1 with |g|+k+1 = n (n <= 6);
/// `count` seeded random instances of order n otherwise.
std::vector<StretchInstance> stretch_instances(int n, std::size_t count = 500, std::uint64_t seed = 1);

/// Max-class properties: G and Gbar connected, diameter <= 3, no pendant
/// vertex, no cut vertex. Without a stream, requires 5 <= n <= 7.
LawReport check_maximal_properties(int n, const SearchOptions& opts = {}, const GraphCollection* stream = nullptr);
/// Every maximal graph has diameter exactly 2 (complement diameters noted).
LawReport check_conjecture(int n, const SearchOptions& opts = {}, const GraphCollection* stream = nullptr);
/// Star is the unique tree minimizer; balanced double star the unique maximizer
/// for n >= 6; two maximizers (P5, double star) at n = 5. 2 <= n <= 16.
LawReport check_tree_theorems(int n, const SearchOptions& opts = {});
/// ng_sum(double_star t,s) = 2^n + 2^(n-2) - 2^t - 2^s + n for every
/// 1 <= t <= s with t+s = n-2.
LawReport check_double_star_formula(int n);
/// Star, R_{n,k} (every valid k) and U_n attain 2^n+n-1 and are P4-free.
LawReport check_family_minimizers(int n);
/// U_n attains the unicyclic minimum, uniquely for n >= 5. 4 <= n <= 10.
LawReport check_unicyclic_minimum(int n, const SearchOptions& opts = {});
/// ng_sum(P4) = 20 > ng_sum(C4) = 19.
LawReport check_p4_c4_example();

/// Law identifiers accepted by run_law, in the order `check all` runs them.
const std::vector<std::string>& law_names();
/// Whether `law` has a meaningful built-in domain at order n.
bool law_applies(const std::string& law, int n);
/// Runs one named law at order n. `stream`, when given, replaces the built-in
/// labeled class for class-quantified laws and the maximal-graph laws.
LawReport run_law(const std::string& law, int n, const SearchOptions& opts = {},
                  const GraphCollection* stream = nullptr);

/// Random connected graph: random recursive spanning tree plus extra edges with
/// probability p.
template <class Rng>
Graph random_connected_graph(int n, double p, Rng& rng);
template <class Rng>
Graph random_graph(int n, double p, Rng& rng);

template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) es.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, es);
}

template <class Rng>
Graph random_connected_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int j = 1; j < n; ++j) {
    std::uniform_int_distribution<int> parent(0, j - 1);
    const int a = parent(rng);
    for (int i = 0; i < j; ++i) {
      if (i == a || coin(rng)) es.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, es);
}

}  // namespace ngeta
