#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucyc/patterns.hpp"

namespace ucyc {

// Directed multigraph with labeled vertices and edges. Out-edges keep
// insertion order; constructors below insert in lexicographic label order so
// traversals are deterministic.
struct TransitionGraph {
  struct Edge {
    std::size_t tail = 0;
    std::size_t head = 0;
    std::string label;
  };

  std::vector<std::string> vertex_labels;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out_edges;

  std::size_t add_vertex(std::string label);
  std::size_t add_edge(std::size_t tail, std::size_t head, std::string label);
  std::size_t vertex_count() const { return vertex_labels.size(); }
  std::size_t edge_count() const { return edges.size(); }

  // In-degree equals out-degree at every vertex.
  bool balanced() const;
  // Every vertex touching an edge reaches every other such vertex in both
  // directions. Vacuously true without edges.
  bool strongly_connected() const;
};

// Graphviz rendering, one line per edge: "tail" -> "head" [label="..."];
std::string to_dot(const TransitionGraph& g);

// Same vertex label set and same multiset of (tail label, head label) edge
// pairs. Vertex labels must be unique in both graphs. Edge labels are not
// compared.
bool label_isomorphic(const TransitionGraph& a, const TransitionGraph& b);

// Result of a greedy word construction. On success `word` is the cyclic word
// after trimming the n-1 rightmost letters; on a stall it is the full word
// at the moment no extension was possible.
struct GreedyWordRun {
  bool success = false;
  Word word;
  std::uint64_t covered = 0;
  std::uint64_t total = 0;
};

// Greedy preference construction of a de Bruijn sequence: start from
// (k-1)^(n-1), repeatedly append the smallest letter of {0..k-1} that keeps
// all length-n factors distinct, then trim. The default start always
// succeeds; other starts of length n-1 may stall, which is reported rather
// than thrown.
GreedyWordRun martin(std::size_t n, std::size_t k);
GreedyWordRun martin(std::size_t n, std::size_t k, const Word& start);

// B(n,k): vertices are the k^n length-n words over {0..k-1} in lexicographic
// order; x_1...x_n -> x_2...x_{n+1} with edge label x_1...x_{n+1}.
TransitionGraph debruijn_graph(std::size_t n, std::size_t k);

// Vertices of the result are the edges of g (carrying their labels); e -> f
// whenever head(e) = tail(f).
TransitionGraph line_graph(const TransitionGraph& g);

// Edge indices of an Eulerian cycle, out-edges consumed in adjacency order.
// Throws std::invalid_argument naming the violated condition when g is
// unbalanced or disconnected.
std::vector<std::size_t> eulerian_cycle(const TransitionGraph& g);

// De Bruijn sequence of order n read off an Eulerian cycle of B(n-1,k).
Word debruijn_via_euler(std::size_t n, std::size_t k);

// d-dimensional n_1 x ... x n_d matrices over {1..k}, treated as words of
// length n_d over the K = k^(n_1...n_{d-1}) lexicographically labeled
// (d-1)-dimensional slices.
struct MatrixUCycleSpec {
  std::vector<std::size_t> dims;
  std::size_t k = 1;
};

// Cyclic sequence of K^{n_d} slices, each flattened row-major, containing
// every d-dimensional matrix exactly once as n_d consecutive slices.
std::vector<Word> matrix_ucycle(const MatrixUCycleSpec& spec);

namespace detail {
// Shared core of martin() and the alternating variant: when `alternate` is
// set the preferred letter flips between smallest and largest each step.
GreedyWordRun greedy_word_scan(std::size_t n, std::size_t k, const Word& start,
                               bool alternate);
}  // namespace detail

}  // namespace ucyc
