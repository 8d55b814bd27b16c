#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ucyc/debruijn.hpp"
#include "ucyc/patterns.hpp"

namespace ucyc {

// Exactly-once coverage of a finite universe by the windows of a candidate.
// The verdict holds when every universe member is covered once, nothing is
// covered twice, and no window falls outside the universe. Listings are
// capped at kMaxListed entries; the *_count fields always carry the full
// totals and covered + missing_count == total_expected.
struct CoverageReport {
  static constexpr std::size_t kMaxListed = 20;

  std::uint64_t total_expected = 0;
  std::uint64_t covered = 0;
  std::uint64_t duplicate_count = 0;
  std::uint64_t missing_count = 0;
  std::uint64_t unexpected_count = 0;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> duplicates;
  std::vector<std::string> missing;
  std::vector<std::string> unexpected;
  bool verdict = false;
};

// w contains every member of `universe` exactly once as a cyclic length-n
// factor, and nothing else. Universe members must share one length.
CoverageReport verify_word_ucycle(const Word& w,
                                  const std::vector<Word>& universe);

// All k^n words over {0..k-1}.
CoverageReport verify_debruijn(const Word& w, std::size_t n, std::size_t k);

// Every d-dimensional n-permutation appears exactly once among the reduced
// width-n windows of u (cyclic or linear). The universe is enumerated here
// as raw per-row permutation tuples, independent of any generator.
CoverageReport verify_multiperm_ucycle(const PermMatrix& u, std::size_t d,
                                       std::size_t n, bool cyclic);

// Every restricted-growth pattern of length n appears exactly once among the
// windows of w.
CoverageReport verify_partition_ucycle(const Word& w, std::size_t n,
                                       bool cyclic);

// Every n_1 x ... x n_d matrix over {1..k} appears exactly once as n_d
// consecutive slices of the cyclic slice sequence.
CoverageReport verify_matrix_ucycle(const std::vector<Word>& slices,
                                    const MatrixUCycleSpec& spec);

}  // namespace ucyc
