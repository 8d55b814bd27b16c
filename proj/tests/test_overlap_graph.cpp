#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "doctest.h"
#include "ucyc/overlap_graph.hpp"
#include "ucyc/text.hpp"
#include "ucyc/verify.hpp"

using namespace ucyc;

namespace {

std::set<std::pair<std::string, std::string>> edge_pairs(
    const OverlapGraph& g) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : g.graph.edges)
    pairs.emplace(g.graph.vertex_labels[e.tail], g.graph.vertex_labels[e.head]);
  return pairs;
}

bool has_edge(const OverlapGraph& g, const std::string& tail,
              const std::string& head) {
  return edge_pairs(g).count({tail, head}) > 0;
}

// Consecutive, cyclically closed, all-distinct walk through every vertex.
void check_hamiltonian(const OverlapGraph& g,
                       const std::vector<std::size_t>& cycle) {
  REQUIRE(cycle.size() == g.vertices.size());
  std::set<std::size_t> distinct(cycle.begin(), cycle.end());
  CHECK(distinct.size() == cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    CHECK(has_edge(g, g.graph.vertex_labels[a], g.graph.vertex_labels[b]));
  }
}

}  // namespace

TEST_CASE("the overlap graph on 3-permutations, in full") {
  const OverlapGraph g = build_overlap_graph(2, 3);
  REQUIRE(g.vertices.size() == 6);
  CHECK(g.graph.edge_count() == 18);
  CHECK(g.graph.vertex_labels ==
        std::vector<std::string>{"123", "132", "213", "231", "312", "321"});

  const std::set<std::pair<std::string, std::string>> expected = {
      {"123", "123"}, {"123", "132"}, {"123", "231"}, {"132", "213"},
      {"132", "312"}, {"132", "321"}, {"213", "123"}, {"213", "132"},
      {"213", "231"}, {"231", "213"}, {"231", "312"}, {"231", "321"},
      {"312", "123"}, {"312", "132"}, {"312", "231"}, {"321", "213"},
      {"321", "312"}, {"321", "321"}};
  CHECK(edge_pairs(g) == expected);

  for (const auto& out : g.graph.out_edges) CHECK(out.size() == 3);
  CHECK(g.graph.balanced());
  CHECK(g.graph.strongly_connected());
}

TEST_CASE("overlap edges carry the shared pattern as label") {
  const OverlapGraph g = build_overlap_graph(2, 3);
  for (const auto& e : g.graph.edges) {
    const std::string& tail = g.graph.vertex_labels[e.tail];
    const std::string& head = g.graph.vertex_labels[e.head];
    const Word suffix = reduce_word(parse_word(tail.substr(1)));
    const Word prefix = reduce_word(parse_word(head.substr(0, 2)));
    CHECK(suffix == prefix);
    CHECK(e.label == word_text(suffix));
  }
}

TEST_CASE("overlap graph sizes across dimensions") {
  const OverlapGraph trivial = build_overlap_graph(2, 1);
  CHECK(trivial.vertices.size() == 1);
  CHECK(trivial.graph.edge_count() == 1);
  CHECK(trivial.graph.edges[0].tail == trivial.graph.edges[0].head);

  const OverlapGraph p4 = build_overlap_graph(2, 4);
  CHECK(p4.vertices.size() == 24);
  CHECK(p4.graph.edge_count() == 96);

  const OverlapGraph p33 = build_overlap_graph(3, 3);
  CHECK(p33.vertices.size() == 36);
  for (const auto& out : p33.graph.out_edges) CHECK(out.size() == 9);

  CHECK_THROWS_AS(build_overlap_graph(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(build_overlap_graph(1, 3), std::invalid_argument);
}

TEST_CASE("vertices are ordered lexicographically by row") {
  const OverlapGraph g = build_overlap_graph(3, 2);
  REQUIRE(g.vertices.size() == 4);
  CHECK(g.vertices[0].rows == std::vector<Word>{{1, 2}, {1, 2}});
  CHECK(g.vertices[1].rows == std::vector<Word>{{1, 2}, {2, 1}});
  CHECK(g.vertices[2].rows == std::vector<Word>{{2, 1}, {1, 2}});
  CHECK(g.vertices[3].rows == std::vector<Word>{{2, 1}, {2, 1}});
}

TEST_CASE("clusters group by the reduced prefix") {
  const OverlapGraph g = build_overlap_graph(2, 3);
  const auto clusters = cluster_by_signature(g);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0] == std::vector<std::size_t>{0, 1, 3});
  CHECK(clusters[1] == std::vector<std::size_t>{2, 4, 5});

  CHECK(cluster_by_signature(build_overlap_graph(2, 1)).size() == 1);
  const auto pair_clusters = cluster_by_signature(build_overlap_graph(3, 2));
  REQUIRE(pair_clusters.size() == 1);
  CHECK(pair_clusters[0].size() == 4);
}

TEST_CASE("edges stay within or between clusters consistently") {
  // Every vertex of a cluster has out-edges into the same successor clusters:
  // the suffix signature alone decides where edges land.
  const OverlapGraph g = build_overlap_graph(2, 4);
  const auto clusters = cluster_by_signature(g);
  std::vector<std::size_t> cluster_of(g.vertices.size());
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (std::size_t v : clusters[c]) cluster_of[v] = c;
  for (const auto& e : g.graph.edges) {
    // All heads reachable from one tail share the tail's suffix pattern, so
    // they sit in one cluster.
    for (const auto& f : g.graph.edges)
      if (e.tail == f.tail) CHECK(cluster_of[e.head] == cluster_of[f.head]);
  }
}

TEST_CASE("hamiltonian search finds a cycle on 3-permutations") {
  const OverlapGraph g = build_overlap_graph(2, 3);
  const HamiltonianSearch search = hamiltonian_cycle(g);
  REQUIRE(search.cycle.has_value());
  check_hamiltonian(g, *search.cycle);
  CHECK_FALSE(search.budget_exhausted);
}

TEST_CASE("hamiltonian search respects its budget") {
  const OverlapGraph g = build_overlap_graph(2, 4);
  const HamiltonianSearch tiny = hamiltonian_cycle(g, 3);
  CHECK_FALSE(tiny.cycle.has_value());
  CHECK(tiny.budget_exhausted);
  const HamiltonianSearch full = hamiltonian_cycle(g);
  REQUIRE(full.cycle.has_value());
  check_hamiltonian(g, *full.cycle);
}

TEST_CASE("the known 6-cycle implies the expected order and word") {
  const OverlapGraph g = build_overlap_graph(2, 3);
  const std::vector<std::string> names = {"132", "312", "123",
                                          "231", "321", "213"};
  std::vector<PermMatrix> cycle;
  for (const auto& name : names)
    cycle.push_back(PermMatrix{{parse_word(name)}});
  // Every consecutive pair is an edge, including the wrap.
  for (std::size_t i = 0; i < names.size(); ++i)
    CHECK(has_edge(g, names[i], names[(i + 1) % names.size()]));

  const ImpliedOrder order = implied_order(cycle, 2, 3);
  CHECK(order.acyclic);
  REQUIRE(order.per_row.size() == 1);
  const std::set<Relation> expected_reduction = {{0, 2}, {0, 5}, {2, 3},
                                                 {5, 3}, {3, 1}, {3, 4}};
  CHECK(transitive_reduction(order.per_row[0], order.length) ==
        expected_reduction);

  const std::vector<Word> rows = linearize(order);
  REQUIRE(rows.size() == 1);
  CHECK(word_text(rows[0]) == "142342");
  CHECK(verify_multiperm_ucycle(PermMatrix{rows}, 2, 3, true).verdict);
}

TEST_CASE("our own hamiltonian cycle linearizes to a verified u-cycle") {
  const OverlapGraph g = build_overlap_graph(2, 3);
  const HamiltonianSearch search = hamiltonian_cycle(g);
  REQUIRE(search.cycle.has_value());
  std::vector<PermMatrix> cycle;
  for (std::size_t v : *search.cycle) cycle.push_back(g.vertices[v]);
  const ImpliedOrder order = implied_order(cycle, 2, 3);
  REQUIRE(order.acyclic);
  const std::vector<Word> rows = linearize(order);
  CHECK(verify_multiperm_ucycle(PermMatrix{rows}, 2, 3, true).verdict);
}

TEST_CASE("cyclic implied orders are reported with a witness") {
  const OverlapGraph g = build_overlap_graph(2, 4);
  const HamiltonianSearch search = hamiltonian_cycle(g);
  REQUIRE(search.cycle.has_value());
  std::vector<PermMatrix> cycle;
  for (std::size_t v : *search.cycle) cycle.push_back(g.vertices[v]);
  const ImpliedOrder order = implied_order(cycle, 2, 4);
  if (order.acyclic) {
    const std::vector<Word> rows = linearize(order);
    CHECK(verify_multiperm_ucycle(PermMatrix{rows}, 2, 4, true).verdict);
  } else {
    REQUIRE(order.cycle_witness.size() >= 1);
    CHECK(order.cycle_witness[0].size() >= 2);
    CHECK_THROWS_AS(linearize(order), std::invalid_argument);
  }
}

TEST_CASE("transitive reduction strips implied pairs") {
  const std::set<Relation> chain = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(transitive_reduction(chain, 3) ==
        std::set<Relation>{{0, 1}, {1, 2}});
  const std::set<Relation> loop = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(transitive_reduction(loop, 2), std::invalid_argument);
}

TEST_CASE("keys, heads and rotations") {
  CHECK(keys(3) == std::vector<Word>{{1, 2, 3}});
  CHECK(keys(4) == std::vector<Word>{{1, 2, 3, 4}, {1, 3, 2, 4}});
  CHECK(heads({1, 2, 3, 4}) ==
        std::vector<Word>{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 4, 2}});
  CHECK(heads({1, 3, 2, 4}) ==
        std::vector<Word>{{1, 3, 2, 4}, {1, 4, 2, 3}, {1, 4, 3, 2}});
  CHECK(rotations({1, 2, 3}) ==
        std::vector<Word>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  CHECK_THROWS_AS(heads({2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(keys(2), std::invalid_argument);
}

TEST_CASE("rotations of all heads of all keys tile the symmetric group") {
  for (std::size_t n : {3, 4, 5}) {
    std::set<Word> all;
    std::size_t produced = 0;
    for (const Word& key : keys(n))
      for (const Word& head : heads(key))
        for (const Word& rot : rotations(head)) {
          all.insert(rot);
          ++produced;
        }
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(produced == fact);
    CHECK(all.size() == fact);
  }
}

TEST_CASE("the spliced 24-cycle is hamiltonian on 4-permutations") {
  const S4Switch result = s4_switch();
  REQUIRE(result.parts[0].size() == 12);
  REQUIRE(result.parts[1].size() == 12);
  CHECK(result.parts[0].front() == Word{1, 2, 3, 4});
  CHECK(result.parts[1].front() == Word{1, 3, 2, 4});
  REQUIRE(result.cycle.size() == 24);

  const OverlapGraph g = build_overlap_graph(2, 4);
  std::set<Word> distinct(result.cycle.begin(), result.cycle.end());
  CHECK(distinct.size() == 24);
  for (std::size_t i = 0; i < result.cycle.size(); ++i)
    CHECK(has_edge(g, word_text(result.cycle[i]),
                   word_text(result.cycle[(i + 1) % 24])));

  // The exchange of final rotations only works in this orientation.
  CHECK(has_edge(g, "4213", "2143"));
  CHECK(has_edge(g, "3214", "2134"));
  CHECK_FALSE(has_edge(g, "2134", "3214"));
}

TEST_CASE("key group pairs and their small cycles") {
  const KeyGroupCheck yes = d3_keygroup_cycle_check({1, 2, 3}, {1, 3, 2});
  CHECK(yes.small_cycle);
  REQUIRE(yes.elements.size() == 6);
  CHECK(yes.elements[0].rows == std::vector<Word>{{1, 2, 3}, {1, 3, 2}});
  CHECK(yes.elements[1].rows == std::vector<Word>{{2, 3, 1}, {3, 2, 1}});
  CHECK(yes.elements[3].rows == std::vector<Word>{{1, 3, 2}, {1, 2, 3}});
  CHECK_FALSE(yes.failing_step.has_value());

  const KeyGroupCheck same = d3_keygroup_cycle_check({1, 2, 3}, {1, 2, 3});
  CHECK(same.small_cycle);

  const KeyGroupCheck no = d3_keygroup_cycle_check({1, 2, 3}, {2, 3, 1});
  CHECK_FALSE(no.small_cycle);
  REQUIRE(no.failing_step.has_value());
  CHECK(*no.failing_step == 2);

  CHECK_THROWS_AS(d3_keygroup_cycle_check({1, 2}, {1, 2, 3}),
                  std::invalid_argument);
}
