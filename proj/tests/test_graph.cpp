#include "doctest.h"
#include "ngeta/generators.hpp"
#include "ngeta/laws.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ngeta;
using namespace test;

TEST_SUITE("graph-core") {
  TEST_CASE("construction validates its input") {
    CHECK(error_code_of([] { Graph(0); }) == ErrorCode::order_out_of_range);
    CHECK(error_code_of([] { Graph(33); }) == ErrorCode::order_out_of_range);
    CHECK(error_code_of([] { Graph::from_edges(3, {{0, 3}}); }) == ErrorCode::precondition);
    CHECK(error_code_of([] { Graph::from_edges(3, {{1, 1}}); }) == ErrorCode::precondition);
    const std::array<VertexSet::Bits, 2> asymmetric{0b10, 0b00};
    CHECK(error_code_of([&] { Graph::from_rows(asymmetric); }) == ErrorCode::precondition);
    const std::array<VertexSet::Bits, 2> loop{0b01, 0b00};
    CHECK(error_code_of([&] { Graph::from_rows(loop); }) == ErrorCode::precondition);
    const std::array<VertexSet::Bits, 2> outside{0b100, 0b00};
    CHECK(error_code_of([&] { Graph::from_rows(outside); }) == ErrorCode::precondition);
    CHECK(Graph(kMaxOrder).order() == 32);
  }

  TEST_CASE("pair masks round-trip") {
    for (std::uint64_t m = 0; m < 64; ++m) CHECK(Graph::from_pair_mask(4, m).pair_mask() == m);
    // Bit 0 is the pair (0,1), bit 2 is (1,2).
    CHECK(Graph::from_pair_mask(3, 0b101) == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  }

  TEST_CASE("complement") {
    CHECK(complement(complete(3)) == Graph(3));
    CHECK(complement(path(4)) == Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 3}}));
    CHECK(canonical_form(complement(cycle(5))) == canonical_form(cycle(5)));
  }

  TEST_CASE("induced connectivity") {
    CHECK(is_connected(cycle(4), cycle(4).vertices()));
    CHECK_FALSE(is_connected(path(4), VertexSet{0, 3}));
    CHECK(is_connected(path(4), VertexSet{0, 1, 2}));
    CHECK(is_connected(Graph(1)));
    CHECK(error_code_of([] { is_connected(path(4), VertexSet{}); }) == ErrorCode::precondition);
    CHECK(component_count(Graph::from_edges(5, {{0, 1}, {2, 3}}), VertexSet::full(5)) == 3);
  }

  TEST_CASE("diameter") {
    for (int n = 2; n <= 8; ++n) CHECK(diameter(complete(n)) == Diameter(1));
    CHECK(diameter(double_star(2, 3)) == Diameter(3));
    CHECK(diameter(path(6)) == Diameter(5));
    CHECK(diameter(Graph(1)) == Diameter(0));
    const Diameter two_k2 = diameter(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(two_k2.is_infinite());
    CHECK(two_k2.to_string() == "inf");
    CHECK_THROWS_AS(two_k2.value(), Error);
  }

  TEST_CASE("cut, pendant and isolated vertices") {
    CHECK(cut_vertices(path(4)) == VertexSet{1, 2});
    for (int n = 3; n <= 9; ++n) CHECK(cut_vertices(cycle(n)).empty());
    CHECK(cut_vertices(star(5)) == VertexSet{0});
    CHECK(pendant_vertices(star(5)) == VertexSet{1, 2, 3, 4});
    CHECK(pendant_vertices(cycle(5)).empty());
    const Graph h21 = double_star(1, 2);
    CHECK(degree_sequence(h21) == std::vector<int>{3, 2, 1, 1, 1});
    CHECK(pendant_vertices(h21).size() == 3);
    CHECK(isolated_vertices(Graph::from_edges(4, {{1, 2}})) == VertexSet{0, 3});
    // A cut vertex of a disconnected graph still splits its own component.
    CHECK(cut_vertices(disjoint_union(path(3), Graph(1))) == VertexSet{1});
  }

  TEST_CASE("induced P4 detection") {
    CHECK_FALSE(is_p4_free(path(4)));
    CHECK_FALSE(is_p4_free(cycle(5)));
    CHECK(is_p4_free(cycle(4)));
    for (int n = 5; n <= 12; ++n) {
      for (int k = 1; k < n - 2; ++k) CHECK(is_p4_free(build(FamilySpec{Family::r_graph, {n, k}})));
    }
    CHECK(is_p4_free(star(9)));
  }

  TEST_CASE("induced P4 detection matches a brute-force subset test") {
    const std::string p4 = oracle::canonical_string(oracle::matrix(path(4)));
    for (int n = 4; n <= 6; ++n) {
      const LabeledGraphs all(n);
      for (std::uint64_t i = 0; i < all.size(); ++i) {
        const auto a = oracle::matrix(all.at(i));
        bool found = false;
        for (std::uint64_t s = 0; s < (1u << n) && !found; ++s) {
          const auto vs = oracle::members(s);
          if (vs.size() != 4) continue;
          oracle::Matrix sub(4, std::vector<bool>(4));
          for (int x = 0; x < 4; ++x) {
            for (int y = 0; y < 4; ++y) sub[x][y] = a[vs[x]][vs[y]];
          }
          found = oracle::canonical_string(sub) == p4;
        }
        REQUIRE(is_p4_free(all.at(i)) == !found);
      }
    }
  }

  TEST_CASE("canonical form examples") {
    const Graph p4a = path(4);
    const Graph p4b = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_form(p4a) == canonical_form(p4b));
    CHECK(canonical_form(p4a) != canonical_form(star(4)));
    CHECK(canonical_form(Graph(1)).bitstring().empty());
    CHECK(canonical_form(complete(4)).bitstring() == "111111");
    CHECK(canonical_form(star(4)).bitstring() == "000111");
    CHECK(canonical_form(canonical_form(cycle(6)).graph()) == canonical_form(cycle(6)));
    CHECK(error_code_of([] { canonical_form(Graph(11)); }) == ErrorCode::order_out_of_range);
  }

  TEST_CASE("canonical form equals the n! minimum on every graph up to order 5") {
    for (int n = 1; n <= 5; ++n) {
      const LabeledGraphs all(n);
      for (std::uint64_t i = 0; i < all.size(); ++i) {
        const Graph g = all.at(i);
        REQUIRE(canonical_form(g).bitstring() == oracle::canonical_string(oracle::matrix(g)));
      }
    }
  }

  TEST_CASE("canonical form equals the n! minimum on random graphs of order 6 to 8") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 6 + trial % 3;
      const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
      REQUIRE(canonical_form(g).bitstring() == oracle::canonical_string(oracle::matrix(g)));
    }
  }

  TEST_CASE("canonical form separates exactly the isomorphism classes") {
    // Unlabeled graph counts for n = 1..6.
    const std::array<std::size_t, 7> classes{0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
      std::set<CanonicalForm> forms;
      const LabeledGraphs all(n);
      for (std::uint64_t i = 0; i < all.size(); ++i) forms.insert(canonical_form(all.at(i)));
      CHECK(forms.size() == classes[n]);
    }
  }

  TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + trial % 9;
      const Graph g = random_graph(n, 0.5, rng);
      const auto p = random_permutation(n, rng);
      const Graph h = g.relabeled(p);
      REQUIRE(canonical_form(g) == canonical_form(h));
      REQUIRE(is_isomorphic(g, h));
    }
  }

  TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + trial % 10;
      const Graph g = random_graph(n, 0.4, rng);
      REQUIRE(complement(complement(g)) == g);
      REQUIRE(complement(g).edge_count() + g.edge_count() == n * (n - 1) / 2);
    }
  }

  TEST_CASE("a disconnected graph has a complement of diameter at most 2") {
    for (int n = 2; n <= 6; ++n) {
      const LabeledGraphs all(n);
      for (std::uint64_t i = 0; i < all.size(); ++i) {
        const Graph g = all.at(i);
        if (!diameter(g).is_infinite()) continue;
        const Diameter d = diameter(complement(g));
        REQUIRE_FALSE(d.is_infinite());
        REQUIRE(d.value() <= 2);
      }
    }
  }

  TEST_CASE("P4-freeness is preserved by complementation") {
    for (int n = 1; n <= 6; ++n) {
      const LabeledGraphs all(n);
      for (std::uint64_t i = 0; i < all.size(); ++i) {
        REQUIRE(is_p4_free(all.at(i)) == is_p4_free(complement(all.at(i))));
      }
    }
  }

  TEST_CASE("induced subgraphs and relabeling") {
    const Graph c = cycle(6);
    CHECK(c.induced(VertexSet{0, 1, 2}) == path(3));
    const std::vector<Vertex> reverse{5, 4, 3, 2, 1, 0};
    CHECK(is_isomorphic(c.relabeled(reverse), c));
    const std::vector<Vertex> bad{0, 0, 1, 2, 3, 4};
    CHECK(error_code_of([&] { c.relabeled(bad); }) == ErrorCode::precondition);
    CHECK(disjoint_union(path(2), path(2)) == Graph::from_edges(4, {{0, 1}, {2, 3}}));
  }
}
