#pragma once

#include <cstdint>
#include <vector>

#include "ucyc/patterns.hpp"

namespace ucyc {

// Rank of an extension of an m-column matrix with d-1 rows. Ranks are
// 1-based and lexicographic over tuples (i_1,...,i_{d-1}) in {1..m+1}^{d-1}:
// rank-1 written in base m+1, most significant digit first, plus one per
// digit.
struct ExtensionIndex {
  std::vector<std::uint32_t> tuple;
  std::uint64_t rank = 1;
};

ExtensionIndex extension_index_from_rank(std::uint64_t rank, std::size_t m,
                                         std::size_t rows);
ExtensionIndex extension_index_from_tuple(std::vector<std::uint32_t> tuple,
                                          std::size_t m);

// The idx-th extension of pi: per row j, b_j is the i_j-th smallest entry of
// row j (or one more than the row maximum when i_j = m+1); every entry >= b_j
// in row j is incremented and b_j is appended. pi needs distinct entries per
// row and distinct columns.
PermMatrix extend(const PermMatrix& pi, const ExtensionIndex& idx);

struct GreedyStep {
  std::uint64_t index = 0;  // 1-based step number
  std::uint64_t rank = 0;   // chosen extension rank
  Word column;              // appended column, values at the time of the step
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  PermMatrix uword;   // (n!)^{d-1}+n-1 columns
  PermMatrix ucycle;  // (n!)^{d-1} columns, rows reduced
};

// Greedy minimal-rank construction: seed with the identity on n-1 columns,
// repeatedly apply the smallest-rank extension whose new width-n window is
// order-isomorphic to none seen before, stop when no rank works. Termination
// is checked to land on the identity window. Refuses instances whose u-word
// would not fit the 2^32-1 value budget.
GreedyTrace greedy_uword(std::size_t d, std::size_t n);

// The trimmed, reduced cyclic object from the same run.
PermMatrix greedy_ucycle(std::size_t d, std::size_t n);

// Remove the last n-1 columns of a u-word and reduce each row.
PermMatrix trim_to_ucycle(const PermMatrix& uword, std::size_t n);

// Replace v by m+1-v throughout the given 1-based row (m = column count).
// The row must be a permutation of {1..m}.
PermMatrix complement_row(const PermMatrix& u, std::size_t row);

// All 2^{d-1} row-subset complements of u, subsets in bitmask order (bit j
// set = row j+1 complemented); the first entry is u itself.
std::vector<PermMatrix> complement_family(const PermMatrix& u);

}  // namespace ucyc
