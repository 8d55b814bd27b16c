#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ucyc/debruijn.hpp"
#include "ucyc/patterns.hpp"

namespace ucyc {

// P_d(n): one vertex per reduced (d-1)-row n-column matrix (rows range over
// all n-permutations independently), ordered lexicographically; X -> Y
// whenever for every row the last n-1 entries of X are order-isomorphic to
// the first n-1 entries of Y. Edge labels carry the shared overlap pattern.
struct OverlapGraph {
  std::size_t d = 2;
  std::size_t n = 1;
  std::vector<PermMatrix> vertices;
  TransitionGraph graph;
};

OverlapGraph build_overlap_graph(std::size_t d, std::size_t n,
                                 std::size_t vertex_budget = 100000);

// Vertices grouped by the reduced form of their first n-1 columns; clusters
// ordered by first member, members ascending.
std::vector<std::vector<std::size_t>> cluster_by_signature(
    const OverlapGraph& g);

struct HamiltonianSearch {
  std::optional<std::vector<std::size_t>> cycle;
  std::uint64_t expansions = 0;
  bool budget_exhausted = false;
};

// Depth-first backtracking from the lexicographically least vertex, budget
// counted in node expansions. An empty result means unknown, not
// nonexistent.
HamiltonianSearch hamiltonian_cycle(const OverlapGraph& g,
                                    std::uint64_t budget = 10000000);

using Relation = std::pair<std::size_t, std::size_t>;  // first < second

// Reading each cycle vertex into window positions t..t+n-1 (mod length)
// forces, per row, an order relation between the occupied positions.
struct ImpliedOrder {
  std::size_t d = 2;
  std::size_t n = 1;
  std::size_t length = 0;
  std::vector<std::set<Relation>> per_row;
  bool acyclic = false;
  // One offending position cycle per row that has one; empty when acyclic.
  std::vector<std::vector<std::size_t>> cycle_witness;
};

ImpliedOrder implied_order(const std::vector<PermMatrix>& cycle,
                           std::size_t d, std::size_t n);

// Hasse edges of the order generated by rel over {0..count-1}.
std::set<Relation> transitive_reduction(const std::set<Relation>& rel,
                                        std::size_t count);

// Concrete values by longest-chain level per row. Throws
// std::invalid_argument quoting a witness cycle when the order is cyclic.
std::vector<Word> linearize(const ImpliedOrder& order);

// Permutations starting with 1 and ending with n, in the recursive order
// where the keys for S_n extend the heads for S_{n-1}.
std::vector<Word> keys(std::size_t n);

// The key followed by its successive displacements: transpose values i+1,i
// for i = n-1 down to 2 (the final (2 1) transposition is skipped).
std::vector<Word> heads(const Word& key);

// All cyclic left shifts, starting with the word itself.
std::vector<Word> rotations(const Word& head);

// The two 12-vertex cycles of P(4) read off the key/head/rotation table,
// spliced into one Hamiltonian cycle by exchanging the final rotations of
// the two parts. Every edge used is validated against P(4).
struct S4Switch {
  std::array<std::vector<Word>, 2> parts;
  std::vector<Word> cycle;
};

S4Switch s4_switch();

// d=3 key/head groups on 3-permutations: both rows rotate in lockstep, the
// head pair swaps the last two columns of the key pair, and the six elements
// are read column by column. Checks whether consecutive elements (cyclically)
// are all edges of P_3(3).
struct KeyGroupCheck {
  bool small_cycle = false;
  std::vector<PermMatrix> elements;
  std::optional<std::size_t> failing_step;  // first non-edge transition
};

KeyGroupCheck d3_keygroup_cycle_check(const Word& key2, const Word& key3);

}  // namespace ucyc
