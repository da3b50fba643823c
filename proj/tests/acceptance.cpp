// Acceptance checks. Each criterion prints one [PASS] or [FAIL] line followed
// by indented detail lines. Time budgets are wall-clock seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ngeta/eta.hpp"
#include "ngeta/families.hpp"
#include "ngeta/generators.hpp"
#include "ngeta/graph6.hpp"
#include "ngeta/laws.hpp"
#include "ngeta/report.hpp"
#include "oracles.hpp"

using namespace ngeta;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  template <typename... Args>
  void note(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    details.push_back(os.str());
  }

  template <typename... Args>
  void require(bool ok, const Args&... args) {
    if (!ok) {
      pass = false;
      note("failed: ", args...);
    }
  }

  void require(const LawReport& r) {
    require(r.pass(), r.law, " on ", r.domain, ": ", r.counterexample_total, " counterexample(s)");
    for (const auto& c : r.counterexamples) note("  ", c.graph6, " ", c.detail);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return seconds_since(start);
}

std::string cat_labeled(int n) { return "labeled:" + std::to_string(n); }

Graph cycle_graph(int n) { return build(FamilySpec{Family::cycle, {n}}); }

GraphCollection labeled(int n) { return GraphCollection::from_spec(GraphClassSpec::labeled(n)); }

GraphCollection random_graphs(int lo, int hi, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_graph(lo + static_cast<int>(i % (hi - lo + 1)), density(rng), rng));
  }
  return GraphCollection::from_graphs(std::move(out));
}

// Minimum law over all labeled graphs, n = 2..7.
Outcome criterion1() {
  constexpr double kSingleBudget = 15 * 60;
  constexpr double kParallelBudget = 3 * 60;
  Outcome o;
  for (int n = 2; n <= 6; ++n) o.require(check_min_bound(labeled(n), cat_labeled(n)));
  for (int workers : {1, 8}) {
    LawReport r;
    const double t = timed([&] { r = check_min_bound(labeled(7), "labeled:7", {workers}); });
    o.require(r);
    o.note("n=7 workers=", workers, ": ", r.instances_checked, " graphs in ", t, " s");
    o.require(t <= (workers == 1 ? kSingleBudget : kParallelBudget), "n=7 with ", workers, " worker(s) exceeded budget");
  }
  return o;
}

// Per-size bound for n <= 6.
Outcome criterion2() {
  constexpr double kBudget = 60;
  Outcome o;
  const double t = timed([&] {
    for (int n = 1; n <= 6; ++n) o.require(check_per_size_bound(labeled(n), cat_labeled(n)));
  });
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// Tree minimizer and maximizer for n = 2..14.
Outcome criterion3() {
  constexpr double kBudget = 120;
  Outcome o;
  const double t = timed([&] {
    for (int n = 2; n <= 14; ++n) o.require(check_tree_theorems(n));
  });
  const ExtremalReport five = search_extremal(GraphClassSpec::trees(5));
  o.note("trees:5 max ", five.max, " over ", five.argmax.size(), " classes");
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// Double-star closed form for 1 <= t <= s, t + s <= 14.
Outcome criterion4() {
  constexpr double kBudget = 60;
  Outcome o;
  const double t = timed([&] {
    for (int n = 4; n <= 16; ++n) o.require(check_double_star_formula(n));
  });
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// Maximal graphs for n = 5, 6, 7.
Outcome criterion5() {
  constexpr double kBudget = 15 * 60;
  Outcome o;
  const double t = timed([&] {
    for (int n = 5; n <= 7; ++n) {
      const ExtremalReport r = search_extremal(GraphClassSpec::labeled(n));
      o.note("n=", n, ": max ", r.max, " over ", r.argmax.size(), " class(es)");
      bool complementary = r.argmax.size() == 1;
      if (r.argmax.size() == 2) {
        complementary = is_isomorphic(r.argmax[0].witness, complement(r.argmax[1].witness));
      } else if (r.argmax.size() == 1) {
        complementary = is_isomorphic(r.argmax[0].witness, complement(r.argmax[0].witness));
      }
      o.note("  classes closed under complementation: ", complementary ? "yes" : "no");
      o.require(r.argmax.size() == 1, "n=", n, ": maximal class not unique up to isomorphism");
      for (const auto& cert : r.argmax) {
        for (int pass = 0; pass < 2; ++pass) {
          const Graph g = pass == 0 ? cert.witness : complement(cert.witness);
          const std::string name = emit_graph6(cert.witness) + (pass == 0 ? "" : " complement");
          const Diameter d = diameter(g);
          o.note("  ", name, ": diameter ", d.to_string(), ", pendant ", pendant_vertices(g).size(), ", cut ",
                 cut_vertices(g).size());
          o.require(is_connected(g), name, " is disconnected");
          o.require(d == Diameter(2), name, " has diameter ", d.to_string());
          o.require(pendant_vertices(g).empty(), name, " has a pendant vertex");
          o.require(cut_vertices(g).empty(), name, " has a cut vertex");
        }
      }
      if (n == 5) {
        o.require(r.max == 42 && r.argmax.size() == 1 && is_isomorphic(r.argmax[0].witness, cycle_graph(5)),
                  "n=5 maximum is not C5 at 42");
      }
    }
  });
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// Merge and stretch identities on random instances.
Outcome criterion6() {
  constexpr double kBudget = 120;
  constexpr std::size_t kInstances = 500;
  Outcome o;
  const double t = timed([&] {
    std::vector<MergeInstance> merges;
    std::vector<StretchInstance> stretches;
    for (int n = 7; n <= 14; ++n) {
      for (auto& in : merge_instances(n, kInstances / 8 + 1, 100 + n)) merges.push_back(std::move(in));
      for (auto& in : stretch_instances(n, kInstances / 8 + 1, 200 + n)) stretches.push_back(std::move(in));
    }
    merges.erase(merges.begin() + kInstances, merges.end());
    stretches.erase(stretches.begin() + kInstances, stretches.end());
    std::size_t equality = 0;
    for (const auto& in : merges) {
      equality += in.g.degree(in.u) == in.g.order() - 1 && in.h.degree(in.v) == in.h.order() - 1;
    }
    o.note(merges.size(), " merges, ", equality, " with both endpoints universal");
    o.require(equality > 0, "no equality-case merge instances");
    o.require(check_merge(merges, "random"));
    o.require(check_stretch(stretches, "random"));
    o.note(stretches.size(), " stretches");
  });
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// Rooted lemmas, twin edges, the s/r inequality and the disjoint-union identity.
Outcome criterion7() {
  constexpr double kBudget = 300;
  Outcome o;
  const double t = timed([&] {
    for (int n = 2; n <= 6; ++n) {
      const auto all = labeled(n);
      const std::string domain = cat_labeled(n);
      o.require(check_pair_lemma(all, domain));
      o.require(check_vertex_lemma(all, domain));
      o.require(check_twin_edge(all, domain));
      o.require(check_subset_counter_inequality(all, domain));
      o.require(check_disjoint_union(n));
    }
    const auto sample = random_graphs(7, 10, 400, 7);
    o.require(check_pair_lemma(sample, "random 7..10"));
    o.require(check_vertex_lemma(sample, "random 7..10"));
    o.require(check_twin_edge(sample, "random 7..10"));
    o.require(check_subset_counter_inequality(sample, "random 7..10"));
    std::mt19937_64 rng(70);
    std::vector<std::pair<Graph, Graph>> pairs;
    for (int i = 0; i < 400; ++i) {
      const int n = 7 + i % 4;
      const int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
      pairs.emplace_back(random_graph(a, 0.5, rng), random_graph(n - a, 0.5, rng));
    }
    o.require(check_disjoint_union(pairs, "random 7..10"));
  });
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// The three eta engines agree.
Outcome criterion8() {
  constexpr double kBudget = 300;
  Outcome o;
  const double t = timed([&] {
    std::size_t compared = 0;
    for (int n = 1; n <= 6; ++n) {
      const LabeledGraphs all(n);
      for (std::uint64_t i = 0; i < all.size(); ++i, ++compared) {
        const Graph g = all.at(i);
        o.require(eta_subset_scan(g) == eta_extension(g), emit_graph6(g));
      }
    }
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int i = 0; i < 1000; ++i, ++compared) {
      const Graph g = random_graph(1 + i % 12, density(rng), rng);
      o.require(eta_subset_scan(g) == eta_extension(g), emit_graph6(g));
    }
    o.note(compared, " graphs compared by scan and extension");
    std::size_t trees = 0;
    for (int n = 1; n <= 14; ++n) {
      for (const Graph& tree : free_trees(n)) {
        ++trees;
        o.require(eta_tree_dp(tree) == eta(tree), emit_graph6(tree));
      }
    }
    o.note(trees, " trees compared by tree recursion and scan");
  });
  o.require(t <= kBudget, "took ", t, " s");
  return o;
}

// P4 against C4.
Outcome criterion9() {
  Outcome o;
  const NgReport p4 = ng_report(parse_graph6("Ch"));
  const NgReport c4 = ng_report(cycle_graph(4));
  o.note("P4 ", p4.sum, ", C4 ", c4.sum);
  o.require(p4.sum == 20 && c4.sum == 19, "sums differ from 20 and 19");
  o.require(check_p4_c4_example());
  return o;
}

// graph6 round trip, free-tree counts and search determinism.
Outcome criterion10() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const LabeledGraphs all(n);
    for (std::uint64_t i = 0; i < all.size(); ++i) {
      const Graph g = all.at(i);
      const std::string text = emit_graph6(g);
      o.require(text == oracle::graph6(oracle::matrix(g)) && parse_graph6(text) == g, "round trip of ", text);
    }
  }
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= 14; ++n) {
    const auto trees = free_trees(n);
    o.require(trees.size() == counts[n - 1], "free trees of order ", n, ": ", trees.size());
    if (n >= 2 && n <= 9) {
      std::set<std::string> codes;
      for (const Graph& tree : trees) codes.insert(oracle::tree_code(tree));
      o.require(codes == oracle::pruefer_tree_classes(n), "trees of order ", n, " differ from the Pruefer classes");
    }
  }
  for (const auto& spec : {GraphClassSpec::labeled(6), GraphClassSpec::trees(12), GraphClassSpec::unicyclic(8)}) {
    const std::string one = extremal_json(search_extremal(spec, {1})).dump();
    for (int workers : {2, 8}) {
      o.require(extremal_json(search_extremal(spec, {workers})).dump() == one, spec.to_string(), " differs with ",
                workers, " workers");
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "minimum law over labeled graphs n=2..7", criterion1},
      {2, "per-size bound n<=6", criterion2},
      {3, "tree extremes n=2..14", criterion3},
      {4, "double-star closed form t+s<=14", criterion4},
      {5, "maximal graphs n=5..7", criterion5},
      {6, "merge and stretch identities", criterion6},
      {7, "lemma suite", criterion7},
      {8, "eta engine equivalence", criterion8},
      {9, "P4 versus C4", criterion9},
      {10, "graph6, free trees, determinism", criterion10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note("exception: ", e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " ("
              << seconds_since(start) << " s)\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
