#include "ucyc/setpartition.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace ucyc {

namespace {

// Patterns of length <= 12 pack into 4-bit nibbles of one 64-bit code
// (values are at most the window length, plus a length tag to separate
// different widths). Larger windows would need Bell(13) > 2^24 universes and
// are refused upstream.
constexpr std::size_t kMaxWindow = 12;

std::uint64_t pattern_code(const Word& w, std::size_t from, std::size_t len) {
  std::uint64_t code = len;
  std::uint32_t next = 1;
  Value relabel[kMaxWindow + 1];
  Value seenv[kMaxWindow];
  std::size_t seen_count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const Value v = w[from + i];
    std::uint32_t label = 0;
    for (std::size_t s = 0; s < seen_count; ++s)
      if (seenv[s] == v) {
        label = relabel[s];
        break;
      }
    if (label == 0) {
      seenv[seen_count] = v;
      relabel[seen_count] = label = next++;
      ++seen_count;
    }
    code = (code << 4) | label;
  }
  return code;
}

}  // namespace

std::uint64_t bell_number(std::size_t n) {
  if (n > 25)
    throw std::invalid_argument("bell_number: n > 25 overflows 64 bits");
  // Bell triangle: row r starts with the last entry of row r-1; each entry
  // adds its left neighbor and the entry above that neighbor.
  std::vector<std::uint64_t> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::size_t j = 0; j < row.size(); ++j)
      next.push_back(next.back() + row[j]);
    row = std::move(next);
  }
  return row.front();
}

Word partition_pattern(const Word& w) {
  Word out;
  out.reserve(w.size());
  std::vector<std::pair<Value, Value>> labels;  // (letter, label)
  for (Value v : w) {
    Value label = 0;
    for (const auto& [letter, l] : labels)
      if (letter == v) {
        label = l;
        break;
      }
    if (label == 0) {
      label = static_cast<Value>(labels.size() + 1);
      labels.emplace_back(v, label);
    }
    out.push_back(label);
  }
  return out;
}

PartitionGreedyRun greedy_partition_uword(std::size_t n, const Word& start) {
  if (n < 1 || n > kMaxWindow)
    throw std::invalid_argument("greedy_partition_uword: need 1 <= n <= 12");
  if (start.size() != n - 1)
    throw std::invalid_argument(
        "greedy_partition_uword: start must have n-1 letters");
  for (Value v : start)
    if (v < 1)
      throw std::invalid_argument(
          "greedy_partition_uword: letters must be positive");

  const std::uint64_t total = bell_number(n);
  Word w = start;
  w.reserve(total + n - 1);
  Value max_used = 0;
  for (Value v : start) max_used = std::max(max_used, v);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * total);

  for (;;) {
    bool extended = false;
    for (Value x = 1; x <= max_used + 1; ++x) {
      w.push_back(x);
      if (seen.insert(pattern_code(w, w.size() - n, n)).second) {
        max_used = std::max(max_used, x);
        extended = true;
        break;
      }
      w.pop_back();
    }
    if (!extended) break;
  }

  PartitionGreedyRun run;
  run.covered = seen.size();
  run.total = total;
  run.success = run.covered == total;
  run.word = std::move(w);
  return run;
}

PartitionCycleRun greedy_partition_ucycle(std::size_t n, const Word& start) {
  PartitionGreedyRun uw = greedy_partition_uword(n, start);
  PartitionCycleRun run;
  run.covered = uw.covered;
  run.total = uw.total;
  if (!uw.success) {
    run.status = PartitionCycleStatus::greedy_stalled;
    run.word = std::move(uw.word);
    return run;
  }
  // The u-word closes into a cycle exactly when it ends with its own start:
  // then the wrapped windows of the trimmed word are the u-word's last n-1
  // windows, so exactly-once coverage carries over.
  const auto tail = static_cast<std::ptrdiff_t>(n - 1);
  const Word trimmed(uw.word.begin(), uw.word.end() - tail);
  {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * run.total);
    const std::size_t len = trimmed.size();
    run.trim_covers = len == run.total;
    Word window(n);
    for (std::size_t s = 0; run.trim_covers && s < len; ++s) {
      for (std::size_t i = 0; i < n; ++i) window[i] = trimmed[(s + i) % len];
      run.trim_covers = seen.insert(pattern_code(window, 0, n)).second;
    }
  }
  if (std::equal(uw.word.begin(), uw.word.begin() + tail,
                 uw.word.end() - tail)) {
    run.status = PartitionCycleStatus::success;
    run.word = trimmed;
  } else {
    run.status = PartitionCycleStatus::not_closed;
    run.word = std::move(uw.word);
  }
  return run;
}

StartSearch search_starts(std::size_t n, PartitionMode mode,
                          std::size_t alphabet_max, bool allow_heavy,
                          std::size_t jobs) {
  if (n < 2)
    throw std::invalid_argument("search_starts: need n >= 2");
  if (n > 7 && !allow_heavy)
    throw std::invalid_argument(
        "search_starts: n > 7 is hours of CPU; pass allow_heavy to run it");
  if (alphabet_max == 0)
    alphabet_max = mode == PartitionMode::uword ? n - 1 : n;
  if (alphabet_max > 15)
    throw std::invalid_argument("search_starts: alphabet_max > 15 unsupported");
  if (jobs == 0) jobs = 1;

  // Starts enumerated as base-alphabet_max odometers, lexicographic.
  std::uint64_t space = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) space *= alphabet_max;

  auto start_for = [&](std::uint64_t index) {
    Word s(n - 1);
    std::uint64_t r = index;
    for (std::size_t i = n - 1; i-- > 0;) {
      s[i] = static_cast<Value>(r % alphabet_max + 1);
      r /= alphabet_max;
    }
    return s;
  };
  auto succeeds = [&](const Word& s) {
    if (mode == PartitionMode::uword)
      return greedy_partition_uword(n, s).success;
    return greedy_partition_ucycle(n, s).status ==
           PartitionCycleStatus::success;
  };

  std::vector<std::vector<std::uint64_t>> found(jobs);
  auto worker = [&](std::size_t id) {
    for (std::uint64_t i = id; i < space; i += jobs)
      if (succeeds(start_for(i))) found[id].push_back(i);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> indices;
  for (const auto& part : found)
    indices.insert(indices.end(), part.begin(), part.end());
  std::sort(indices.begin(), indices.end());

  StartSearch result;
  result.n = n;
  result.mode = mode;
  result.alphabet_max = alphabet_max;
  result.starts.reserve(indices.size());
  for (std::uint64_t i : indices) result.starts.push_back(start_for(i));
  return result;
}

GreedyWordRun alternating_greedy_words(std::size_t n, std::size_t k,
                                       const Word& start) {
  return detail::greedy_word_scan(n, k, start, true);
}

}  // namespace ucyc
