#include "ucyc/greedy_ucycle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ucyc {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kValueBudget = 0xffffffffull;

// (m+1)^rows as the number of extension ranks; desk-scale inputs keep this
// small but guard anyway.
std::uint64_t rank_space(std::size_t m, std::size_t rows) {
  u128 p = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    p *= m + 1;
    if (p > kValueBudget)
      throw std::invalid_argument("extension rank space exceeds value budget");
  }
  return static_cast<std::uint64_t>(p);
}

void check_extendable(const PermMatrix& pi) {
  const std::size_t m = pi.cols();
  for (const auto& row : pi.rows) {
    if (row.size() != m)
      throw std::invalid_argument("extend: rows must have equal length");
    Word sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("extend: row entries must be distinct");
  }
  if (pi.row_count() > 1) {
    std::unordered_set<std::string> cols;
    for (std::size_t c = 0; c < m; ++c) {
      std::string col;
      for (const auto& row : pi.rows)
        col += std::to_string(row[c]) + ",";
      if (!cols.insert(col).second)
        throw std::invalid_argument("extend: columns must be distinct");
    }
  }
}

// b_j for one row: the i-th smallest entry, or max+1 when i = m+1.
Value pick_entry(const Word& row, std::uint32_t i) {
  if (i == row.size() + 1) {
    Value mx = 0;
    for (Value v : row) mx = std::max(mx, v);
    return mx + 1;
  }
  Word sorted = row;
  std::nth_element(sorted.begin(), sorted.begin() + (i - 1), sorted.end());
  return sorted[i - 1];
}

// In-place relabel-and-append for one row.
void apply_entry(Word& row, Value b) {
  for (Value& v : row)
    if (v >= b) ++v;
  row.push_back(b);
}

}  // namespace

ExtensionIndex extension_index_from_rank(std::uint64_t rank, std::size_t m,
                                         std::size_t rows) {
  const std::uint64_t space = rank_space(m, rows);
  if (rank < 1 || rank > space)
    throw std::invalid_argument("extension rank out of range");
  ExtensionIndex idx;
  idx.rank = rank;
  idx.tuple.assign(rows, 1);
  std::uint64_t r = rank - 1;
  for (std::size_t j = rows; j-- > 0;) {
    idx.tuple[j] = static_cast<std::uint32_t>(r % (m + 1) + 1);
    r /= m + 1;
  }
  return idx;
}

ExtensionIndex extension_index_from_tuple(std::vector<std::uint32_t> tuple,
                                          std::size_t m) {
  rank_space(m, tuple.size());
  ExtensionIndex idx;
  std::uint64_t r = 0;
  for (std::uint32_t i : tuple) {
    if (i < 1 || i > m + 1)
      throw std::invalid_argument("extension tuple entry out of range");
    r = r * (m + 1) + (i - 1);
  }
  idx.rank = r + 1;
  idx.tuple = std::move(tuple);
  return idx;
}

PermMatrix extend(const PermMatrix& pi, const ExtensionIndex& idx) {
  if (idx.tuple.size() != pi.row_count())
    throw std::invalid_argument("extend: tuple size must match row count");
  check_extendable(pi);
  const std::size_t m = pi.cols();
  PermMatrix out = pi;
  for (std::size_t j = 0; j < out.row_count(); ++j) {
    if (idx.tuple[j] < 1 || idx.tuple[j] > m + 1)
      throw std::invalid_argument("extend: tuple entry out of range");
    apply_entry(out.rows[j], pick_entry(pi.rows[j], idx.tuple[j]));
  }
  return out;
}

GreedyTrace greedy_uword(std::size_t d, std::size_t n) {
  if (d < 2 || n < 1)
    throw std::invalid_argument("greedy_uword: need d >= 2 and n >= 1");
  const std::size_t rows = d - 1;

  // Final length (n!)^{d-1} + n - 1 must fit the value budget.
  u128 target = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 2; i <= n; ++i) {
      target *= i;
      if (target + n - 1 > kValueBudget)
        throw std::invalid_argument(
            "greedy_uword: (n!)^(d-1)+n-1 exceeds the 2^32-1 value budget");
    }
  }
  const std::uint64_t expected = static_cast<std::uint64_t>(target);

  GreedyTrace trace;
  PermMatrix u = identity_matrix(rows, n - 1);
  const std::uint64_t ranks = rank_space(n - 1, rows);

  std::unordered_set<WindowKey, WindowKeyHash> seen;
  seen.reserve(2 * expected);

  PermMatrix suffix;
  suffix.rows.assign(rows, Word());
  std::uint64_t step = 0;
  for (;;) {
    // Current n-1 column suffix.
    const auto tail = static_cast<std::ptrdiff_t>(n - 1);
    for (std::size_t r = 0; r < rows; ++r)
      suffix.rows[r].assign(u.rows[r].end() - tail, u.rows[r].end());
    bool extended = false;
    for (std::uint64_t rank = 1; rank <= ranks && !extended; ++rank) {
      const ExtensionIndex idx =
          extension_index_from_rank(rank, n - 1, rows);
      // Candidate width-n window produced by this rank.
      PermMatrix cand = suffix;
      Word column(rows);
      for (std::size_t j = 0; j < rows; ++j) {
        column[j] = pick_entry(suffix.rows[j], idx.tuple[j]);
        apply_entry(cand.rows[j], column[j]);
      }
      const WindowKey key = reduce_matrix(cand).key;
      if (seen.contains(key)) continue;
      seen.insert(key);
      // Apply to the full word: same per-row threshold, then append.
      for (std::size_t j = 0; j < rows; ++j)
        apply_entry(u.rows[j], column[j]);
      trace.steps.push_back(GreedyStep{++step, rank, std::move(column)});
      extended = true;
    }
    if (!extended) break;
  }

  if (seen.size() != expected)
    throw std::runtime_error("greedy_uword: construction covered " +
                             std::to_string(seen.size()) + " of " +
                             std::to_string(expected) + " windows");
  // Termination lands exactly on the identity window.
  PermMatrix last;
  last.rows.assign(rows, Word());
  for (std::size_t r = 0; r < rows; ++r)
    last.rows[r].assign(u.rows[r].end() - static_cast<std::ptrdiff_t>(n),
                        u.rows[r].end());
  if (reduce_matrix(last).reduced_rows != identity_matrix(rows, n).rows)
    throw std::runtime_error(
        "greedy_uword: terminated on a non-identity window");

  trace.uword = u;
  trace.ucycle = trim_to_ucycle(u, n);
  return trace;
}

PermMatrix greedy_ucycle(std::size_t d, std::size_t n) {
  return greedy_uword(d, n).ucycle;
}

PermMatrix trim_to_ucycle(const PermMatrix& uword, std::size_t n) {
  if (n < 1 || uword.cols() < n - 1)
    throw std::invalid_argument("trim_to_ucycle: fewer than n-1 columns");
  PermMatrix out;
  out.rows.reserve(uword.row_count());
  for (const auto& row : uword.rows)
    out.rows.push_back(reduce_word(
        Word(row.begin(), row.end() - static_cast<std::ptrdiff_t>(n - 1))));
  return out;
}

PermMatrix complement_row(const PermMatrix& u, std::size_t row) {
  if (row < 1 || row > u.row_count())
    throw std::invalid_argument("complement_row: row index out of range");
  const std::size_t m = u.cols();
  PermMatrix out = u;
  Word& r = out.rows[row - 1];
  Word sorted = r;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < m; ++i)
    if (sorted[i] != i + 1)
      throw std::invalid_argument(
          "complement_row: row is not a permutation of {1..m}");
  for (Value& v : r) v = static_cast<Value>(m + 1 - v);
  return out;
}

std::vector<PermMatrix> complement_family(const PermMatrix& u) {
  const std::size_t rows = u.row_count();
  if (rows > 20)
    throw std::invalid_argument("complement_family: too many rows");
  std::vector<PermMatrix> family;
  family.reserve(std::size_t{1} << rows);
  for (std::size_t mask = 0; mask < (std::size_t{1} << rows); ++mask) {
    PermMatrix member = u;
    for (std::size_t j = 0; j < rows; ++j)
      if (mask & (std::size_t{1} << j)) member = complement_row(member, j + 1);
    family.push_back(std::move(member));
  }
  return family;
}

}  // namespace ucyc
