#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ucyc {

// Values are 1-based for permutations and set-partition letters; de Bruijn
// words use {0..k-1}. Everything fits in 32 bits by construction: generators
// refuse instances whose value range would exceed 2^32-1.
using Value = std::uint32_t;
using Word = std::vector<Value>;

// A matrix with rows of equal length, stored row-major. A d-dimensional
// n-permutation is kept as its d-1 nontrivial rows (the identity top row is
// implicit and never stored). The struct itself is plain data; operations
// that need distinct entries per row or distinct columns check that
// themselves.
struct PermMatrix {
  std::vector<Word> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t cols() const { return rows.empty() ? 0 : rows.front().size(); }

  friend bool operator==(const PermMatrix&, const PermMatrix&) = default;
};

// Identity matrix I_{d;n}: d-1 rows, each 1 2 ... n.
PermMatrix identity_matrix(std::size_t rows, std::size_t n);

// Canonical identity of a window up to row-wise order isomorphism. Per-row
// Lehmer ranks are packed into one mixed-radix integer (radix w! per row)
// when that fits 128 bits; wider shapes fall back to the reduced values as a
// byte string. Shape fields keep keys of different shapes distinct.
struct WindowKey {
  std::uint32_t width = 0;
  std::uint32_t rows = 0;
  bool packed = true;
  unsigned __int128 value = 0;
  std::string bytes;

  friend bool operator==(const WindowKey& a, const WindowKey& b) {
    return a.width == b.width && a.rows == b.rows && a.packed == b.packed &&
           (a.packed ? a.value == b.value : a.bytes == b.bytes);
  }
};

struct WindowKeyHash {
  std::size_t operator()(const WindowKey& k) const;
};

struct ReducedWindow {
  std::vector<Word> reduced_rows;
  WindowKey key;
};

// Order-isomorphic relabeling of w onto {1..|w|}. Throws
// std::invalid_argument if letters repeat.
Word reduce_word(const Word& w);

// Row-wise reduction with the canonical key. Rows must have equal length and
// distinct entries within each row.
ReducedWindow reduce_matrix(const PermMatrix& m);

// All width-sized windows of m in column order: m.cols() of them when
// cyclic (wrapping), m.cols()-width+1 otherwise. width must be in
// [1, m.cols()].
std::vector<ReducedWindow> windows(const PermMatrix& m, std::size_t width,
                                   bool cyclic);

// Lexicographically least rotation, for comparing cyclic words.
Word least_rotation(const Word& w);

}  // namespace ucyc
