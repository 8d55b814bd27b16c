#pragma once

#include <cstdint>
#include <vector>

#include "ucyc/debruijn.hpp"
#include "ucyc/patterns.hpp"

namespace ucyc {

// Bell numbers by the triangle recurrence; n <= 25 fits 64 bits.
std::uint64_t bell_number(std::size_t n);

// Restricted-growth form of w: letters renamed to 1,2,3,... in order of
// first occurrence. Two words get equal patterns exactly when they induce
// the same partition of positions into equal-letter blocks.
Word partition_pattern(const Word& w);

struct PartitionGreedyRun {
  bool success = false;  // every pattern of length n covered, non-cyclically
  Word word;             // u-word on success, stalled word otherwise
  std::uint64_t covered = 0;
  std::uint64_t total = 0;  // Bell(n)
};

// Greedy over positive letters: starting from `start` (n-1 letters),
// repeatedly append the smallest letter of {1..M+1} (M = largest letter used
// so far) that keeps the patterns of all length-n windows pairwise distinct.
PartitionGreedyRun greedy_partition_uword(std::size_t n, const Word& start);

enum class PartitionCycleStatus { success, greedy_stalled, not_closed };

struct PartitionCycleRun {
  PartitionCycleStatus status = PartitionCycleStatus::greedy_stalled;
  Word word;  // u-cycle on success; the u-word or stalled word otherwise
  // Whenever a u-word exists: does its trim cover every pattern exactly once
  // cyclically? Always true on success; a word that fails to close can still
  // leave a cyclically universal trim by accident (n=4 start 142 does).
  bool trim_covers = false;
  std::uint64_t covered = 0;
  std::uint64_t total = 0;
};

// Run the u-word greedy and close the loop: when the u-word ends with its own
// start, dropping those n-1 letters yields a word whose cyclic windows are
// exactly the u-word's windows, hence a u-cycle. The two failure modes are
// reported apart: the greedy can stall, or it can complete a u-word whose
// tail differs from the start so the trim does not close; in the latter case
// trim_covers still records the outcome of the cyclic coverage test.
PartitionCycleRun greedy_partition_ucycle(std::size_t n, const Word& start);

enum class PartitionMode { uword, ucycle };

struct StartSearch {
  std::size_t n = 0;
  PartitionMode mode = PartitionMode::uword;
  std::size_t alphabet_max = 0;
  std::vector<Word> starts;  // successful starts in lexicographic order
};

// Try every start word of length n-1 over {1..alphabet_max}. The default
// alphabet (alphabet_max = 0) depends on the mode: u-word starts are scanned
// over {1..n-1}, since n-1 positions hold at most n-1 distinct letters and a
// start behaves like its order pattern, so wider alphabets only repeat
// successes; cycle starts are scanned over {1..n} because closure compares
// letters, not patterns, and known closing starts use the letter n.
// n <= 7 unless allow_heavy; the n=8 cyclic search in particular is hours of
// CPU and is refused without the override.
StartSearch search_starts(std::size_t n, PartitionMode mode,
                          std::size_t alphabet_max = 0,
                          bool allow_heavy = false, std::size_t jobs = 1);

// Greedy over {0..k-1} with the preference flipping between smallest and
// largest letter each step (first step smallest), deduplicating exact
// length-n factors. Stalls are reported with the word at the stall.
GreedyWordRun alternating_greedy_words(std::size_t n, std::size_t k,
                                       const Word& start);

}  // namespace ucyc
