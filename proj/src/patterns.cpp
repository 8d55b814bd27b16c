#include "ucyc/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ucyc {

namespace {

using u128 = unsigned __int128;

// w! as 128-bit, or 0 on overflow. Overflow only matters for the packing
// feasibility test; ranks themselves stay below w! whenever packing is used.
u128 factorial128(std::uint32_t w) {
  u128 f = 1;
  for (std::uint32_t i = 2; i <= w; ++i) {
    if (f > ~u128{0} / i) return 0;
    f *= i;
  }
  return f;
}

// Lehmer rank of a reduced row (a permutation of {1..w}), in [0, w!).
u128 lehmer_rank(const Word& p) {
  const std::size_t w = p.size();
  static thread_local std::vector<u128> fact{1};
  while (fact.size() < w + 1) {
    u128 next = fact.back() * fact.size();
    fact.push_back(next);
  }
  u128 rank = 0;
  for (std::size_t i = 0; i + 1 < w; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < w; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * fact[w - 1 - i];
  }
  return rank;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

PermMatrix identity_matrix(std::size_t rows, std::size_t n) {
  PermMatrix m;
  m.rows.assign(rows, Word(n));
  for (auto& row : m.rows)
    std::iota(row.begin(), row.end(), Value{1});
  return m;
}

std::size_t WindowKeyHash::operator()(const WindowKey& k) const {
  std::uint64_t h = splitmix64((std::uint64_t{k.width} << 32) | k.rows);
  if (k.packed) {
    h ^= splitmix64(static_cast<std::uint64_t>(k.value));
    h ^= splitmix64(static_cast<std::uint64_t>(k.value >> 64) + 0x1234567u);
  } else {
    h ^= std::hash<std::string>{}(k.bytes);
  }
  return static_cast<std::size_t>(h);
}

Word reduce_word(const Word& w) {
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r > 0 && w[idx[r]] == w[idx[r - 1]])
      throw std::invalid_argument("reduce_word: letters must be distinct");
    out[idx[r]] = static_cast<Value>(r + 1);
  }
  return out;
}

ReducedWindow reduce_matrix(const PermMatrix& m) {
  ReducedWindow rw;
  rw.reduced_rows.reserve(m.row_count());
  const std::size_t w = m.cols();
  for (const auto& row : m.rows) {
    if (row.size() != w)
      throw std::invalid_argument("reduce_matrix: rows must have equal length");
    rw.reduced_rows.push_back(reduce_word(row));
  }

  WindowKey key;
  key.width = static_cast<std::uint32_t>(w);
  key.rows = static_cast<std::uint32_t>(m.row_count());

  // Packing needs radix^rows to fit; radix == 0 marks a width whose
  // factorial already overflows.
  const u128 radix = factorial128(key.width);
  bool fits = radix != 0;
  u128 total = 1;
  for (std::uint32_t r = 0; fits && r < key.rows; ++r) {
    if (total > ~u128{0} / radix)
      fits = false;
    else
      total *= radix;
  }
  if (fits) {
    key.packed = true;
    u128 v = 0;
    for (const auto& row : rw.reduced_rows)
      v = v * radix + lehmer_rank(row);
    key.value = v;
  } else {
    key.packed = false;
    key.bytes.reserve(rw.reduced_rows.size() * w * 4);
    for (const auto& row : rw.reduced_rows)
      for (Value v : row) {
        key.bytes.push_back(static_cast<char>(v >> 24));
        key.bytes.push_back(static_cast<char>(v >> 16));
        key.bytes.push_back(static_cast<char>(v >> 8));
        key.bytes.push_back(static_cast<char>(v));
      }
  }
  rw.key = key;
  return rw;
}

std::vector<ReducedWindow> windows(const PermMatrix& m, std::size_t width,
                                   bool cyclic) {
  const std::size_t cols = m.cols();
  if (width < 1 || width > cols)
    throw std::invalid_argument("windows: width must be in [1, column count]");
  const std::size_t count = cyclic ? cols : cols - width + 1;
  std::vector<ReducedWindow> out;
  out.reserve(count);
  PermMatrix win;
  win.rows.assign(m.row_count(), Word(width));
  for (std::size_t start = 0; start < count; ++start) {
    for (std::size_t r = 0; r < m.row_count(); ++r)
      for (std::size_t t = 0; t < width; ++t)
        win.rows[r][t] = m.rows[r][(start + t) % cols];
    out.push_back(reduce_matrix(win));
  }
  return out;
}

Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  // Booth's algorithm on the doubled word.
  const std::size_t n = w.size();
  auto at = [&](std::size_t i) { return w[i % n]; };
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Value a = at(i + k), b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i = std::max(i + k + 1, j);
    else
      j = std::max(j + k + 1, i);
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t start = std::min(i, j);
  Word out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = at(start + t);
  return out;
}

}  // namespace ucyc
