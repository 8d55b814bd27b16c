#include "ucyc/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ucyc/setpartition.hpp"
#include "ucyc/text.hpp"

namespace ucyc {

namespace {

// Shared tally: universe keys -> rendered text, then window keys observed in
// position order. Keys are rendered text; every caller renders both sides
// with the same function, so equality of text is equality of objects.
CoverageReport tally(const std::vector<std::string>& universe,
                     const std::vector<std::string>& observed) {
  CoverageReport report;
  report.total_expected = universe.size();

  std::map<std::string, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < observed.size(); ++i)
    positions[observed[i]].push_back(i);

  std::map<std::string, char> expected;
  for (const auto& key : universe) {
    if (!expected.emplace(key, 0).second)
      throw std::invalid_argument("verify: universe has duplicate members");
  }

  for (const auto& [key, where] : positions) {
    auto it = expected.find(key);
    if (it == expected.end()) {
      ++report.unexpected_count;
      if (report.unexpected.size() < CoverageReport::kMaxListed)
        report.unexpected.push_back(key);
      continue;
    }
    it->second = 1;
    ++report.covered;
    if (where.size() > 1) {
      ++report.duplicate_count;
      if (report.duplicates.size() < CoverageReport::kMaxListed)
        report.duplicates.emplace_back(key, where);
    }
  }
  for (const auto& [key, hit] : expected) {
    if (hit) continue;
    ++report.missing_count;
    if (report.missing.size() < CoverageReport::kMaxListed)
      report.missing.push_back(key);
  }
  report.verdict = report.duplicate_count == 0 && report.missing_count == 0 &&
                   report.unexpected_count == 0 &&
                   report.covered == report.total_expected;
  return report;
}

std::vector<std::string> cyclic_factors(const Word& w, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(w.size());
  Word window(n);
  for (std::size_t s = 0; s < w.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) window[i] = w[(s + i) % w.size()];
    out.push_back(word_text(window));
  }
  return out;
}

}  // namespace

CoverageReport verify_word_ucycle(const Word& w,
                                  const std::vector<Word>& universe) {
  if (universe.empty())
    throw std::invalid_argument("verify_word_ucycle: empty universe");
  const std::size_t n = universe.front().size();
  for (const auto& member : universe)
    if (member.size() != n)
      throw std::invalid_argument(
          "verify_word_ucycle: universe members must share one length");
  if (w.empty())
    throw std::invalid_argument("verify_word_ucycle: empty word");

  std::vector<std::string> keys;
  keys.reserve(universe.size());
  for (const auto& member : universe) keys.push_back(word_text(member));
  return tally(keys, cyclic_factors(w, n));
}

CoverageReport verify_debruijn(const Word& w, std::size_t n, std::size_t k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("verify_debruijn: need n >= 1 and k >= 1");
  std::vector<Word> universe;
  Word member(n, 0);
  for (;;) {
    universe.push_back(member);
    std::size_t i = n;
    while (i > 0 && member[i - 1] + 1 == k) member[--i] = 0;
    if (i == 0) break;
    ++member[i - 1];
  }
  return verify_word_ucycle(w, universe);
}

CoverageReport verify_multiperm_ucycle(const PermMatrix& u, std::size_t d,
                                       std::size_t n, bool cyclic) {
  if (d < 2 || n < 1)
    throw std::invalid_argument("verify_multiperm_ucycle: need d >= 2, n >= 1");
  const std::size_t rows = d - 1;
  if (u.row_count() != rows)
    throw std::invalid_argument(
        "verify_multiperm_ucycle: row count must be d-1");
  const std::size_t cols = u.cols();
  if (cols < n)
    throw std::invalid_argument("verify_multiperm_ucycle: fewer than n columns");

  // Universe: raw odometer over per-row permutations of {1..n}.
  std::vector<std::string> universe;
  {
    std::vector<Word> perms;
    Word p(n);
    std::iota(p.begin(), p.end(), Value{1});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::size_t> odo(rows, 0);
    for (;;) {
      PermMatrix m;
      m.rows.reserve(rows);
      for (std::size_t r = 0; r < rows; ++r) m.rows.push_back(perms[odo[r]]);
      universe.push_back(matrix_text(m));
      std::size_t i = rows;
      while (i > 0 && odo[i - 1] + 1 == perms.size()) odo[--i] = 0;
      if (i == 0) break;
      ++odo[i - 1];
    }
  }

  const std::size_t window_count = cyclic ? cols : cols - n + 1;
  std::vector<std::string> observed;
  observed.reserve(window_count);
  PermMatrix window;
  window.rows.assign(rows, Word(n));
  for (std::size_t s = 0; s < window_count; ++s) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t i = 0; i < n; ++i)
        window.rows[r][i] = u.rows[r][(s + i) % cols];
    try {
      observed.push_back(
          matrix_text(PermMatrix{reduce_matrix(window).reduced_rows}));
    } catch (const std::invalid_argument&) {
      // A window with repeated values in some row covers no permutation.
      observed.push_back("non-permutation window at " + std::to_string(s + 1));
    }
  }
  return tally(universe, observed);
}

CoverageReport verify_partition_ucycle(const Word& w, std::size_t n,
                                       bool cyclic) {
  if (n < 1)
    throw std::invalid_argument("verify_partition_ucycle: need n >= 1");
  if (w.size() < n)
    throw std::invalid_argument("verify_partition_ucycle: word shorter than n");

  // All restricted-growth strings of length n: first letter 1, each next at
  // most one above the running maximum.
  std::vector<std::string> universe;
  Word rgs;
  auto emit = [&](auto&& self, Value max_used) -> void {
    if (rgs.size() == n) {
      universe.push_back(word_text(rgs));
      return;
    }
    for (Value v = 1; v <= max_used + 1; ++v) {
      rgs.push_back(v);
      self(self, std::max(max_used, v));
      rgs.pop_back();
    }
  };
  emit(emit, 0);

  const std::size_t count = cyclic ? w.size() : w.size() - n + 1;
  std::vector<std::string> observed;
  observed.reserve(count);
  Word window(n);
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < n; ++i) window[i] = w[(s + i) % w.size()];
    observed.push_back(word_text(partition_pattern(window)));
  }
  return tally(universe, observed);
}

CoverageReport verify_matrix_ucycle(const std::vector<Word>& slices,
                                    const MatrixUCycleSpec& spec) {
  if (spec.dims.empty() || spec.k < 1)
    throw std::invalid_argument("verify_matrix_ucycle: need dims and k >= 1");
  std::size_t t = 1;
  for (std::size_t i = 0; i + 1 < spec.dims.size(); ++i) t *= spec.dims[i];
  const std::size_t order = spec.dims.back();
  if (slices.size() < order)
    throw std::invalid_argument("verify_matrix_ucycle: fewer slices than n_d");
  for (const auto& s : slices) {
    if (s.size() != t)
      throw std::invalid_argument("verify_matrix_ucycle: slice of wrong size");
    for (Value v : s)
      if (v < 1 || v > spec.k)
        throw std::invalid_argument(
            "verify_matrix_ucycle: entry outside {1..k}");
  }

  // Universe: odometer over all t*order entries.
  std::vector<std::string> universe;
  {
    Word entries(t * order, 1);
    for (;;) {
      universe.push_back(word_text(entries));
      std::size_t i = entries.size();
      while (i > 0 && entries[i - 1] == spec.k) entries[--i] = 1;
      if (i == 0) break;
      ++entries[i - 1];
    }
  }

  std::vector<std::string> observed;
  observed.reserve(slices.size());
  Word window;
  window.reserve(t * order);
  for (std::size_t s = 0; s < slices.size(); ++s) {
    window.clear();
    for (std::size_t j = 0; j < order; ++j) {
      const Word& slice = slices[(s + j) % slices.size()];
      window.insert(window.end(), slice.begin(), slice.end());
    }
    observed.push_back(word_text(window));
  }
  return tally(universe, observed);
}

}  // namespace ucyc
