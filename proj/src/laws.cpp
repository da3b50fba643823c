#include "ngeta/laws.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "ngeta/error.hpp"
#include "ngeta/families.hpp"
#include "ngeta/graph6.hpp"

namespace ngeta {

namespace {

// Splits [0, size) into contiguous chunks, evaluates them on `workers`
// threads and returns the per-chunk results in chunk order. Callers fold the
// results front to back, so the outcome matches a sequential run.
template <class Partial, class Work>
std::vector<Partial> run_chunks(std::uint64_t size, int workers, Work work) {
  if (workers < 1) throw Error(ErrorCode::precondition, "worker count must be >= 1");
  const std::uint64_t chunk_count =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(size, static_cast<std::uint64_t>(workers) * 16));
  std::vector<Partial> parts(chunk_count);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(workers);

  auto body = [&](int w) {
    try {
      for (std::uint64_t c = next++; c < chunk_count; c = next++) {
        parts[c] = work(size * c / chunk_count, size * (c + 1) / chunk_count);
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next = chunk_count;
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return parts;
}

struct LawPartial {
  std::uint64_t instances = 0;
  std::uint64_t total = 0;
  std::vector<Counterexample> list;
};

using InstanceCheck = std::function<std::optional<Counterexample>(std::uint64_t)>;

LawReport run_indexed_law(std::uint64_t size, std::string law, std::string domain, const SearchOptions& opts,
                          const InstanceCheck& check) {
  const std::size_t cap = opts.max_counterexamples;
  auto parts = run_chunks<LawPartial>(size, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
    LawPartial p;
    for (std::uint64_t i = begin; i < end; ++i) {
      ++p.instances;
      if (auto bad = check(i)) {
        ++p.total;
        if (p.list.size() < cap) p.list.push_back(std::move(*bad));
      }
    }
    return p;
  });
  LawReport report{std::move(law), std::move(domain)};
  for (auto& p : parts) {
    report.instances_checked += p.instances;
    report.counterexample_total += p.total;
    for (auto& c : p.list) {
      if (report.counterexamples.size() < cap) report.counterexamples.push_back(std::move(c));
    }
  }
  return report;
}

using GraphCheck = std::function<std::optional<std::string>(const Graph&)>;

LawReport run_graph_law(const GraphCollection& graphs, std::string law, std::string domain,
                        const SearchOptions& opts, const GraphCheck& check) {
  return run_indexed_law(graphs.size(), std::move(law), std::move(domain), opts,
                         [&](std::uint64_t i) -> std::optional<Counterexample> {
                           const Graph g = graphs.at(i);
                           if (auto detail = check(g)) return Counterexample{emit_graph6(g), std::move(*detail)};
                           return std::nullopt;
                         });
}

Count pow2(int e) { return Count{1} << e; }

Count binomial(int n, int k) {
  Count c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Count min_sum(int n) { return pow2(n) + n - 1; }

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

}  // namespace

void LawReport::add_counterexample(const Graph& g, std::string detail, std::size_t cap) {
  ++counterexample_total;
  if (counterexamples.size() < cap) counterexamples.push_back({emit_graph6(g), std::move(detail)});
}

// ---------------------------------------------------------------------------
// Extremal search

namespace {

struct SearchPartial {
  std::uint64_t count = 0;
  int order = 0;
  Count min = 0;
  Count max = 0;
  std::vector<Graph> argmin;
  std::vector<Graph> argmax;

  void absorb_value(Count value, const Graph& g) {
    if (count == 0 || value < min) {
      min = value;
      argmin.clear();
    }
    if (value == min) argmin.push_back(g);
    if (count == 0 || value > max) {
      max = value;
      argmax.clear();
    }
    if (value == max) argmax.push_back(g);
    ++count;
  }

  void absorb(SearchPartial&& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = std::move(other);
      return;
    }
    if (other.order != order) throw Error(ErrorCode::precondition, "graph class mixes orders");
    if (other.min < min) {
      min = other.min;
      argmin = std::move(other.argmin);
    } else if (other.min == min) {
      argmin.insert(argmin.end(), other.argmin.begin(), other.argmin.end());
    }
    if (other.max > max) {
      max = other.max;
      argmax = std::move(other.argmax);
    } else if (other.max == max) {
      argmax.insert(argmax.end(), other.argmax.begin(), other.argmax.end());
    }
    count += other.count;
  }
};

std::vector<Certificate> certificates(const std::vector<Graph>& graphs) {
  if (!graphs.empty() && graphs.front().order() > kMaxCanonicalOrder) {
    std::vector<Certificate> out;
    for (const Graph& g : graphs) out.push_back({std::nullopt, g});
    return out;
  }
  std::map<CanonicalForm, Graph> classes;
  for (const Graph& g : graphs) classes.try_emplace(canonical_form(g), g);
  std::vector<Certificate> out;
  out.reserve(classes.size());
  for (auto& [form, g] : classes) out.push_back({form, g});
  return out;
}

}  // namespace

ExtremalReport search_extremal(const GraphCollection& graphs, const std::string& class_spec,
                               const SearchOptions& opts) {
  auto parts = run_chunks<SearchPartial>(graphs.size(), opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
    SearchPartial p;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Graph g = graphs.at(i);
      if (p.count == 0) {
        p.order = g.order();
      } else if (g.order() != p.order) {
        throw Error(ErrorCode::precondition, "graph class mixes orders");
      }
      p.absorb_value(ng_report(g, opts.scan_limit).sum, g);
    }
    return p;
  });
  SearchPartial all;
  for (auto& p : parts) all.absorb(std::move(p));
  if (all.count == 0) throw Error(ErrorCode::precondition, "extremal search over an empty class");

  ExtremalReport report;
  report.class_spec = class_spec;
  report.order = all.order;
  report.min = all.min;
  report.max = all.max;
  report.class_size = all.count;
  report.argmin = certificates(all.argmin);
  report.argmax = certificates(all.argmax);
  return report;
}

ExtremalReport search_extremal(const GraphClassSpec& spec, const SearchOptions& opts, std::istream* stdin_stream) {
  return search_extremal(GraphCollection::from_spec(spec, stdin_stream), spec.to_string(), opts);
}

// ---------------------------------------------------------------------------
// Class-quantified laws

LawReport check_min_bound(const GraphCollection& graphs, const std::string& domain, const SearchOptions& opts) {
  return run_graph_law(graphs, "min-bound", domain, opts, [&](const Graph& g) -> std::optional<std::string> {
    const Count sum = ng_report(g, opts.scan_limit).sum;
    const Count bound = min_sum(g.order());
    const bool p4_free = is_p4_free(g);
    if (sum < bound) return cat("sum ", sum, " below 2^n+n-1 = ", bound);
    if ((sum == bound) != p4_free) {
      return cat("sum ", sum, (sum == bound ? " attains" : " exceeds"), " the bound but is_p4_free = ", p4_free);
    }
    return std::nullopt;
  });
}

LawReport check_per_size_bound(const GraphCollection& graphs, const std::string& domain,
                               const SearchOptions& opts) {
  return run_graph_law(graphs, "per-size", domain, opts, [&](const Graph& g) -> std::optional<std::string> {
    const int n = g.order();
    const EtaProfile a = eta_subset_scan(g, opts.scan_limit);
    const EtaProfile b = eta_subset_scan(complement(g), opts.scan_limit);
    for (int k = 2; k <= n; ++k) {
      if (a.at(k) + b.at(k) < binomial(n, k)) {
        return cat("k=", k, ": ", a.at(k), "+", b.at(k), " < C(n,k) = ", binomial(n, k));
      }
    }
    return std::nullopt;
  });
}

LawReport check_pair_lemma(const GraphCollection& graphs, const std::string& domain, const SearchOptions& opts) {
  return run_graph_law(graphs, "pair-lemma", domain, opts, [&](const Graph& g) -> std::optional<std::string> {
    const int n = g.order();
    const Graph bar = complement(g);
    const auto g_parts = components(g, g.vertices());
    const auto bar_parts = components(bar, bar.vertices());
    auto split = [](const std::vector<VertexSet>& parts, Vertex u, Vertex v) {
      for (auto c : parts) {
        if (c.contains(u)) return !c.contains(v);
      }
      return false;
    };
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const VertexSet roots{u, v};
        const Count sum = eta_rooted(g, roots, opts.scan_limit) + eta_rooted(bar, roots, opts.scan_limit);
        const Count bound = pow2(n - 2);
        if (sum < bound) return cat("pair ", u, ",", v, ": ", sum, " < 2^(n-2) = ", bound);
        if ((split(g_parts, u, v) || split(bar_parts, u, v)) && sum != bound) {
          return cat("pair ", u, ",", v, " lies in different components but sum ", sum, " != ", bound);
        }
      }
    }
    return std::nullopt;
  });
}

LawReport check_vertex_lemma(const GraphCollection& graphs, const std::string& domain,
                             const SearchOptions& opts) {
  return run_graph_law(graphs, "vertex-lemma", domain, opts, [&](const Graph& g) -> std::optional<std::string> {
    const int n = g.order();
    const Graph bar = complement(g);
    const bool both_connected = is_connected(g) && is_connected(bar);
    for (int v = 0; v < n; ++v) {
      const auto root = VertexSet::single(v);
      const Count sum = eta_rooted(g, root, opts.scan_limit) + eta_rooted(bar, root, opts.scan_limit);
      const Count bound = pow2(n - 1) + 1;
      if (sum < bound) return cat("vertex ", v, ": ", sum, " < 2^(n-1)+1 = ", bound);
      if ((g.degree(v) == 0 || bar.degree(v) == 0) && sum != bound) {
        return cat("vertex ", v, " is isolated in G or Gbar but sum ", sum, " != ", bound);
      }
      if (both_connected && n > 1 && sum == bound) {
        return cat("vertex ", v, ": G and Gbar connected yet sum attains ", bound);
      }
    }
    return std::nullopt;
  });
}

LawReport check_twin_edge(const GraphCollection& graphs, const std::string& domain, const SearchOptions& opts) {
  return run_graph_law(graphs, "twin-edge", domain, opts, [&](const Graph& g) -> std::optional<std::string> {
    std::optional<Count> base;
    for (auto [u, v] : g.edges()) {
      if (g.neighbors(u).without(v) != g.neighbors(v).without(u)) continue;
      if (!base) base = ng_report(g, opts.scan_limit).sum;
      const Count after = ng_report(g.without_edge(u, v), opts.scan_limit).sum;
      if (after != *base) return cat("twin edge ", u, "-", v, ": sum ", *base, " becomes ", after);
    }
    return std::nullopt;
  });
}

namespace {

std::optional<std::string> check_subset_pair(const Graph& g, const Graph& bar, VertexSet x, VertexSet y) {
  const Count lhs = s_count(g, x, y) + s_count(bar, y, x);
  const Count rhs = (pow2(x.size()) - 1) * (pow2(y.size()) - 1);
  if (lhs < rhs) return cat("X=", x.bits(), " Y=", y.bits(), ": ", lhs, " < ", rhs);
  const Count r = r_count(g, x, y);
  if (s_count(g, x, y) > r) return cat("X=", x.bits(), " Y=", y.bits(), ": s > r");
  if (r != r_count(g, y, x)) return cat("X=", x.bits(), " Y=", y.bits(), ": r not symmetric");
  return std::nullopt;
}

}  // namespace

LawReport check_subset_counter_inequality(const GraphCollection& graphs, const std::string& domain,
                                          const SearchOptions& opts, int samples_per_graph) {
  return run_graph_law(graphs, "subset-counter", domain, opts, [&](const Graph& g) -> std::optional<std::string> {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    const Graph bar = complement(g);
    if (n <= 6) {
      // Each vertex goes to X, Y or neither: 3^n assignments.
      int assignments = 1;
      for (int i = 0; i < n; ++i) assignments *= 3;
      for (int a = 0; a < assignments; ++a) {
        VertexSet x, y;
        for (int v = 0, rest = a; v < n; ++v, rest /= 3) {
          if (rest % 3 == 1) x = x.with(v);
          if (rest % 3 == 2) y = y.with(v);
        }
        if (x.empty() || y.empty()) continue;
        if (auto bad = check_subset_pair(g, bar, x, y)) return bad;
      }
      return std::nullopt;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ std::hash<std::string>{}(emit_graph6(g)));
    std::uniform_int_distribution<int> side(0, 2);
    for (int s = 0; s < samples_per_graph;) {
      VertexSet x, y;
      for (int v = 0; v < n; ++v) {
        const int pick = side(rng);
        if (pick == 1) x = x.with(v);
        if (pick == 2) y = y.with(v);
      }
      if (x.empty() || y.empty()) continue;
      ++s;
      if (auto bad = check_subset_pair(g, bar, x, y)) return bad;
    }
    return std::nullopt;
  });
}

LawReport check_disjoint_union(const std::vector<std::pair<Graph, Graph>>& pairs, const std::string& domain,
                               const SearchOptions& opts) {
  return run_indexed_law(pairs.size(), "disjoint-union", domain, opts,
                         [&](std::uint64_t i) -> std::optional<Counterexample> {
                           const auto& [h, k] = pairs[i];
                           const Graph both = disjoint_union(h, k);
                           const Count lhs = ng_report(both, opts.scan_limit).sum;
                           const Count rhs = ng_report(h, opts.scan_limit).sum + ng_report(k, opts.scan_limit).sum +
                                             (pow2(h.order()) - 1) * (pow2(k.order()) - 1);
                           if (lhs == rhs) return std::nullopt;
                           return Counterexample{emit_graph6(both), cat("union of ", emit_graph6(h), " and ",
                                                                        emit_graph6(k), ": ", lhs, " != ", rhs)};
                         });
}

LawReport check_disjoint_union(int n, const SearchOptions& opts) {
  if (n < 2 || n > kMaxLabeledOrder) throw Error(ErrorCode::order_out_of_range, "disjoint-union law needs 2 <= n <= 8");
  std::vector<std::pair<Graph, Graph>> pairs;
  for (int a = 1; a < n; ++a) {
    const LabeledGraphs hs(a);
    const LabeledGraphs ks(n - a);
    for (std::uint64_t i = 0; i < hs.size(); ++i) {
      for (std::uint64_t j = 0; j < ks.size(); ++j) pairs.emplace_back(hs.at(i), ks.at(j));
    }
  }
  return check_disjoint_union(pairs, cat("all labeled (H,K), |H|+|K| = ", n), opts);
}

// ---------------------------------------------------------------------------
// Constructions

LawReport check_merge(const std::vector<MergeInstance>& instances, const std::string& domain,
                      const SearchOptions& opts) {
  return run_indexed_law(
      instances.size(), "merge", domain, opts, [&](std::uint64_t i) -> std::optional<Counterexample> {
        const auto& in = instances[i];
        const std::string tag = cat("g=", emit_graph6(in.g), " u=", in.u, " h=", emit_graph6(in.h), " v=", in.v, ": ");
        try {
          const MergeResult r = merge_with_k1(in.g, in.u, in.h, in.v);
          auto bad = [&](std::string what) { return Counterexample{emit_graph6(r.graph), tag + what}; };
          const bool trivial = in.g.order() == 1 || in.h.order() == 1;
          if (r.eta_merged < r.eta_union) return bad("eta(B u K1) < eta(G u H)");
          if ((r.eta_merged == r.eta_union) != trivial) return bad("eta equality case mismatch");
          const Count merged = r.eta_merged + r.eta_merged_bar;
          const Count apart = r.eta_union + r.eta_union_bar;
          // An order-1 side makes B u K1 equal to G u H, whatever the other side.
          const bool universal = in.g.degree(in.u) == in.g.order() - 1 && in.h.degree(in.v) == in.h.order() - 1;
          if (merged < apart) return bad("sum decreases under merging");
          if ((merged == apart) != (universal || trivial)) return bad("sum equality case mismatch");
          return std::nullopt;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::internal) throw;
          return Counterexample{emit_graph6(in.g), tag + e.what()};
        }
      });
}

LawReport check_stretch(const std::vector<StretchInstance>& instances, const std::string& domain,
                        const SearchOptions& opts) {
  return run_indexed_law(instances.size(), "stretch", domain, opts,
                         [&](std::uint64_t i) -> std::optional<Counterexample> {
                           const auto& in = instances[i];
                           try {
                             stretch_pair(in.g, in.v, in.k);
                             return std::nullopt;
                           } catch (const Error& e) {
                             if (e.code() != ErrorCode::internal) throw;
                             return Counterexample{emit_graph6(in.g), cat("v=", in.v, " k=", in.k, ": ", e.what())};
                           }
                         });
}

namespace {

std::vector<Graph> connected_labeled(int n) {
  std::vector<Graph> out;
  const LabeledGraphs all(n);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    Graph g = all.at(i);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

Graph make_universal(const Graph& g, Vertex u) {
  Graph out = g;
  for (int w = 0; w < g.order(); ++w) {
    if (w != u) out = out.with_edge(u, w);
  }
  return out;
}

}  // namespace

std::vector<MergeInstance> merge_instances(int n, std::size_t count, std::uint64_t seed) {
  if (n < 2 || n > kDefaultScanLimit) throw Error(ErrorCode::order_out_of_range, "merge instances need 2 <= n <= 26");
  std::vector<MergeInstance> out;
  if (n <= 6) {
    for (int a = 1; a < n; ++a) {
      const auto gs = connected_labeled(a);
      const auto hs = connected_labeled(n - a);
      for (const auto& g : gs) {
        for (const auto& h : hs) {
          for (int u = 0; u < a; ++u) {
            for (int v = 0; v < n - a; ++v) out.push_back({g, u, h, v});
          }
        }
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> split(1, n - 1);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::bernoulli_distribution equality_case(0.25);
  while (out.size() < count) {
    const int a = split(rng);
    const int b = n - a;
    Graph g = random_connected_graph(a, density(rng), rng);
    Graph h = random_connected_graph(b, density(rng), rng);
    const Vertex u = std::uniform_int_distribution<int>(0, a - 1)(rng);
    const Vertex v = std::uniform_int_distribution<int>(0, b - 1)(rng);
    if (equality_case(rng)) {
      g = make_universal(g, u);
      h = make_universal(h, v);
    }
    out.push_back({g, u, h, v});
  }
  return out;
}

std::vector<StretchInstance> stretch_instances(int n, std::size_t count, std::uint64_t seed) {
  if (n < 3 || n > kDefaultScanLimit) throw Error(ErrorCode::order_out_of_range, "stretch instances need 3 <= n <= 26");
  std::vector<StretchInstance> out;
  if (n <= 6) {
    for (int k = 1; k <= n - 2; ++k) {
      const int m = n - k - 1;
      for (const auto& g : connected_labeled(m)) {
        for (int v = 0; v < m; ++v) out.push_back({g, v, k});
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, n - 2);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  while (out.size() < count) {
    const int k = length(rng);
    const int m = n - k - 1;
    const Graph g = random_connected_graph(m, density(rng), rng);
    out.push_back({g, std::uniform_int_distribution<int>(0, m - 1)(rng), k});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximal graphs

namespace {

ExtremalReport maximal_search(int n, const SearchOptions& opts, const GraphCollection* stream) {
  if (stream) {
    ExtremalReport r = search_extremal(*stream, "graph6 stream", opts);
    if (r.order != n) {
      throw Error(ErrorCode::precondition,
                  cat("stream holds order-", r.order, " graphs but order ", n, " was requested"));
    }
    return r;
  }
  if (n < 5 || n > 7) {
    throw Error(ErrorCode::usage, cat("maximal-graph laws need 5 <= n <= 7 without a graph6 stream (got ", n, ")"));
  }
  return search_extremal(GraphClassSpec::labeled(n), opts);
}

std::string describe_class(const Graph& g) {
  return cat(emit_graph6(g), " diam(G)=", diameter(g).to_string(), " diam(Gbar)=", diameter(complement(g)).to_string());
}

}  // namespace

LawReport check_maximal_properties(int n, const SearchOptions& opts, const GraphCollection* stream) {
  const ExtremalReport search = maximal_search(n, opts, stream);
  LawReport report{"maximal-properties", stream ? cat("graph6 stream, n = ", n) : cat("labeled:", n)};
  report.notes.push_back(cat("max sum ", search.max, " over ", search.class_size, " graphs, ", search.argmax.size(),
                             " maximal class(es)"));
  for (const auto& cert : search.argmax) {
    ++report.instances_checked;
    report.notes.push_back("maximal " + describe_class(cert.witness));
    const Graph& g = cert.witness;
    const Graph bar = complement(g);
    for (int pass = 0; pass < 2; ++pass) {
      const Graph& side = pass == 0 ? g : bar;
      const std::string which = pass == 0 ? "G" : "Gbar";
      const Diameter d = diameter(side);
      if (d.is_infinite()) {
        report.add_counterexample(g, which + " is disconnected", opts.max_counterexamples);
        continue;
      }
      if (d.value() < 2 || d.value() > 3) {
        report.add_counterexample(g, cat(which, " has diameter ", d.value()), opts.max_counterexamples);
      }
      if (!pendant_vertices(side).empty()) {
        report.add_counterexample(g, which + " has a pendant vertex", opts.max_counterexamples);
      }
      if (!cut_vertices(side).empty()) {
        report.add_counterexample(g, which + " has a cut vertex", opts.max_counterexamples);
      }
    }
  }
  return report;
}

LawReport check_conjecture(int n, const SearchOptions& opts, const GraphCollection* stream) {
  const ExtremalReport search = maximal_search(n, opts, stream);
  LawReport report{"conjecture", stream ? cat("graph6 stream, n = ", n) : cat("labeled:", n)};
  report.notes.push_back(cat("max sum ", search.max, ", ", search.argmax.size(), " maximal class(es)"));
  for (const auto& cert : search.argmax) {
    ++report.instances_checked;
    report.notes.push_back("maximal " + describe_class(cert.witness));
    const Diameter d = diameter(cert.witness);
    if (d != Diameter(2)) {
      report.add_counterexample(cert.witness, "maximal graph has diameter " + d.to_string(), opts.max_counterexamples);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Trees and families

LawReport check_tree_theorems(int n, const SearchOptions& opts) {
  if (n < 2 || n > 16) throw Error(ErrorCode::order_out_of_range, "tree theorems are checked for 2 <= n <= 16");
  const ExtremalReport search = search_extremal(GraphClassSpec::trees(n), opts);
  LawReport report{"trees", cat("trees:", n)};
  report.instances_checked = search.class_size;
  const std::size_t cap = opts.max_counterexamples;
  report.notes.push_back(cat("min ", search.min, " over ", search.argmin.size(), " class(es); max ", search.max,
                             " over ", search.argmax.size(), " class(es)"));

  const Graph star = build(FamilySpec{Family::star, {n}});
  if (search.min != min_sum(n)) {
    report.add_counterexample(search.argmin.front().witness, cat("tree minimum ", search.min, " != ", min_sum(n)), cap);
  }
  // Among trees the degree sequence pins down stars and double stars, so no
  // canonical form is needed above its order limit.
  if (search.argmin.size() != 1 || degree_sequence(search.argmin.front().witness) != degree_sequence(star)) {
    report.add_counterexample(search.argmin.front().witness, "tree minimizer is not uniquely the star", cap);
  }

  if (n >= 6) {
    const int t = (n - 2) / 2;
    const int s = (n - 1) / 2;
    const Graph balanced = build(FamilySpec{Family::double_star, {t, s}});
    const Count expected = 5 * pow2(n - 2) - pow2(s) - pow2(t) + n;
    if (search.max != expected) {
      report.add_counterexample(search.argmax.front().witness, cat("tree maximum ", search.max, " != ", expected), cap);
    }
    if (search.argmax.size() != 1 || degree_sequence(search.argmax.front().witness) != degree_sequence(balanced)) {
      report.add_counterexample(search.argmax.front().witness, "tree maximizer is not uniquely the balanced double star",
                                cap);
    }
  } else if (n == 5) {
    const Graph path = build(FamilySpec{Family::path, {5}});
    const Graph h21 = build(FamilySpec{Family::double_star, {1, 2}});
    bool has_path = false;
    bool has_h21 = false;
    for (const auto& cert : search.argmax) {
      has_path |= is_isomorphic(cert.witness, path);
      has_h21 |= is_isomorphic(cert.witness, h21);
    }
    if (search.max != 39 || search.argmax.size() != 2 || !has_path || !has_h21) {
      report.add_counterexample(search.argmax.front().witness, "order-5 maximizers are not exactly P5 and H(1,2) at 39",
                                cap);
    }
  }
  return report;
}

LawReport check_double_star_formula(int n) {
  if (n < 4 || n > kDefaultScanLimit) throw Error(ErrorCode::order_out_of_range, "double-star formula needs 4 <= n <= 26");
  LawReport report{"double-star", cat("1 <= t <= s, t+s = ", n - 2)};
  for (int t = 1; t <= (n - 2) / 2; ++t) {
    const int s = n - 2 - t;
    const Graph g = build(FamilySpec{Family::double_star, {t, s}});
    ++report.instances_checked;
    const Count sum = ng_report(g).sum;
    const Count formula = pow2(n) + pow2(n - 2) - pow2(t) - pow2(s) + n;
    if (sum != formula) report.add_counterexample(g, cat("t=", t, " s=", s, ": ", sum, " != ", formula), 100);
  }
  return report;
}

LawReport check_family_minimizers(int n) {
  if (n < 1 || n > kDefaultScanLimit) throw Error(ErrorCode::order_out_of_range, "family minimizers need 1 <= n <= 26");
  LawReport report{"family-minimizers", cat("star, R(n,k), U(n) at n = ", n)};
  std::vector<FamilySpec> specs{{Family::star, {n}}};
  if (n > 4) {
    for (int k = 1; k < n - 2; ++k) specs.push_back({Family::r_graph, {n, k}});
  }
  if (n > 3) specs.push_back({Family::u_graph, {n}});
  for (const auto& spec : specs) {
    const Graph g = build(spec);
    ++report.instances_checked;
    const Count sum = ng_report(g).sum;
    if (sum != min_sum(n) || !is_p4_free(g)) {
      report.add_counterexample(g, cat(spec.to_string(), ": sum ", sum, " p4_free ", is_p4_free(g)), 100);
    }
  }
  return report;
}

LawReport check_unicyclic_minimum(int n, const SearchOptions& opts) {
  const ExtremalReport search = search_extremal(GraphClassSpec::unicyclic(n), opts);
  LawReport report{"unicyclic", cat("unicyclic:", n)};
  report.instances_checked = search.class_size;
  const Graph u = build(FamilySpec{Family::u_graph, {n}});
  bool attained = false;
  for (const auto& cert : search.argmin) {
    attained |= is_isomorphic(cert.witness, u);
    report.notes.push_back("minimizer " + emit_graph6(cert.witness));
  }
  const std::size_t cap = opts.max_counterexamples;
  if (search.min != min_sum(n) || !attained) {
    report.add_counterexample(u, cat("U_n does not attain the unicyclic minimum ", search.min), cap);
  }
  if (n >= 5 && search.argmin.size() != 1) {
    report.add_counterexample(u, cat(search.argmin.size(), " unicyclic minimizers, expected only U_n"), cap);
  }
  return report;
}

LawReport check_p4_c4_example() {
  LawReport report{"p4-c4", "P4 and C4"};
  const Graph p4 = build(FamilySpec{Family::path, {4}});
  const Graph c4 = build(FamilySpec{Family::cycle, {4}});
  const Count p = ng_report(p4).sum;
  const Count c = ng_report(c4).sum;
  report.instances_checked = 2;
  report.notes.push_back(cat("sum(P4) = ", p, ", sum(C4) = ", c));
  if (p != 20) report.add_counterexample(p4, cat("sum ", p, " != 20"), 100);
  if (c != 19) report.add_counterexample(c4, cat("sum ", c, " != 19"), 100);
  if (!(p > c)) report.add_counterexample(c4, "closing P4 into C4 did not lower the sum", 100);
  return report;
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{
      "min-bound", "per-size",    "pair-lemma",         "vertex-lemma", "twin-edge",         "subset-counter",
      "disjoint-union", "merge",  "stretch",            "maximal-properties", "conjecture", "trees",
      "double-star", "family-minimizers", "unicyclic", "p4-c4"};
  return names;
}

namespace {

bool class_law(const std::string& law) {
  return law == "min-bound" || law == "per-size" || law == "pair-lemma" || law == "vertex-lemma" ||
         law == "twin-edge" || law == "subset-counter";
}

}  // namespace

bool law_applies(const std::string& law, int n) {
  if (class_law(law)) return n >= 1 && n <= kMaxLabeledOrder;
  if (law == "disjoint-union") return n >= 2 && n <= kMaxLabeledOrder;
  if (law == "merge") return n >= 2 && n <= 16;
  if (law == "stretch") return n >= 3 && n <= 16;
  if (law == "maximal-properties" || law == "conjecture") return n >= 5 && n <= 7;
  if (law == "trees") return n >= 2 && n <= 16;
  if (law == "double-star") return n >= 4 && n <= 18;
  if (law == "family-minimizers") return n >= 1 && n <= 20;
  if (law == "unicyclic") return n >= kMinUnicyclicOrder && n <= kMaxUnicyclicOrder;
  if (law == "p4-c4") return true;
  return false;
}

LawReport run_law(const std::string& law, int n, const SearchOptions& opts, const GraphCollection* stream) {
  if (std::find(law_names().begin(), law_names().end(), law) == law_names().end()) {
    throw Error(ErrorCode::usage, "unknown law '" + law + "'");
  }
  if (class_law(law)) {
    const GraphCollection labeled =
        stream ? *stream : GraphCollection::from_spec(GraphClassSpec::labeled(n));
    const std::string domain = stream ? std::string("graph6 stream") : cat("labeled:", n);
    if (law == "min-bound") return check_min_bound(labeled, domain, opts);
    if (law == "per-size") return check_per_size_bound(labeled, domain, opts);
    if (law == "pair-lemma") return check_pair_lemma(labeled, domain, opts);
    if (law == "vertex-lemma") return check_vertex_lemma(labeled, domain, opts);
    if (law == "twin-edge") return check_twin_edge(labeled, domain, opts);
    return check_subset_counter_inequality(labeled, domain, opts);
  }
  if (law == "disjoint-union") return check_disjoint_union(n, opts);
  if (law == "merge") {
    return check_merge(merge_instances(n), n <= 6 ? cat("all connected labeled pairs, total order ", n)
                                                  : cat("500 seeded random instances, total order ", n),
                       opts);
  }
  if (law == "stretch") {
    return check_stretch(stretch_instances(n), n <= 6 ? cat("all connected labeled g, total order ", n)
                                                      : cat("500 seeded random instances, order ", n),
                         opts);
  }
  if (law == "maximal-properties") return check_maximal_properties(n, opts, stream);
  if (law == "conjecture") return check_conjecture(n, opts, stream);
  if (law == "trees") return check_tree_theorems(n, opts);
  if (law == "double-star") return check_double_star_formula(n);
  if (law == "family-minimizers") return check_family_minimizers(n);
  if (law == "unicyclic") return check_unicyclic_minimum(n, opts);
  return check_p4_c4_example();
}

}  // namespace ngeta
