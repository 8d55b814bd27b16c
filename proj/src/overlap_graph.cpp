#include "ucyc/overlap_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ucyc/text.hpp"

namespace ucyc {

namespace {

// Row-wise reduced prefix/suffix of width n-1.
WindowKey edge_signature(const PermMatrix& m, bool prefix) {
  PermMatrix part;
  part.rows.reserve(m.row_count());
  const std::size_t w = m.cols() - 1;
  for (const auto& row : m.rows) {
    if (prefix)
      part.rows.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(w));
    else
      part.rows.emplace_back(row.end() - static_cast<std::ptrdiff_t>(w), row.end());
  }
  return reduce_matrix(part).key;
}

bool is_permutation_word(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i + 1) return false;
  return true;
}

bool overlap_edge(const PermMatrix& x, const PermMatrix& y) {
  if (x.row_count() != y.row_count() || x.cols() != y.cols()) return false;
  return edge_signature(x, false) == edge_signature(y, true);
}

void check_perm(const Word& w, std::size_t n, const char* what) {
  if (w.size() != n || !is_permutation_word(w))
    throw std::invalid_argument(std::string(what) +
                                ": expected a permutation of {1..n}");
}

// DFS cycle detection returning a witness cycle if any.
std::optional<std::vector<std::size_t>> find_cycle(
    const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++];
        if (state[w] == 1) {
          // Unwind the stack from w to v.
          std::vector<std::size_t> cycle;
          bool in = false;
          for (const auto& [u, _] : stack) {
            if (u == w) in = true;
            if (in) cycle.push_back(u);
          }
          cycle.push_back(w);
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

OverlapGraph build_overlap_graph(std::size_t d, std::size_t n,
                                 std::size_t vertex_budget) {
  if (d < 2 || n < 1)
    throw std::invalid_argument("build_overlap_graph: need d >= 2 and n >= 1");
  const std::size_t rows = d - 1;
  std::uint64_t count = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 2; i <= n; ++i) count *= i;
    if (count > vertex_budget)
      throw std::invalid_argument(
          "build_overlap_graph: (n!)^(d-1) exceeds the vertex budget");
  }

  OverlapGraph og;
  og.d = d;
  og.n = n;

  // All row tuples in lexicographic order: odometer of per-row permutations.
  std::vector<Word> perms;
  {
    Word p(n);
    std::iota(p.begin(), p.end(), Value{1});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::size_t> odo(rows, 0);
  for (;;) {
    PermMatrix m;
    m.rows.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) m.rows.push_back(perms[odo[r]]);
    og.vertices.push_back(std::move(m));
    std::size_t i = rows;
    while (i > 0 && odo[i - 1] + 1 == perms.size()) odo[--i] = 0;
    if (i == 0) break;
    ++odo[i - 1];
  }

  for (const auto& v : og.vertices) og.graph.add_vertex(matrix_text(v));

  if (n == 1) {
    // Width-0 overlaps: complete graph with loops.
    for (std::size_t x = 0; x < og.vertices.size(); ++x)
      for (std::size_t y = 0; y < og.vertices.size(); ++y)
        og.graph.add_edge(x, y, "");
    return og;
  }

  std::unordered_map<WindowKey, std::vector<std::size_t>, WindowKeyHash>
      by_prefix;
  for (std::size_t y = 0; y < og.vertices.size(); ++y)
    by_prefix[edge_signature(og.vertices[y], true)].push_back(y);
  for (std::size_t x = 0; x < og.vertices.size(); ++x) {
    const WindowKey sig = edge_signature(og.vertices[x], false);
    const auto it = by_prefix.find(sig);
    if (it == by_prefix.end()) continue;
    PermMatrix overlap;
    for (const auto& row : og.vertices[x].rows)
      overlap.rows.emplace_back(row.end() - static_cast<std::ptrdiff_t>(n - 1),
                                row.end());
    const std::string label = matrix_text(
        PermMatrix{reduce_matrix(overlap).reduced_rows});
    for (std::size_t y : it->second) og.graph.add_edge(x, y, label);
  }
  return og;
}

std::vector<std::vector<std::size_t>> cluster_by_signature(
    const OverlapGraph& g) {
  std::vector<std::vector<std::size_t>> clusters;
  std::unordered_map<WindowKey, std::size_t, WindowKeyHash> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    PermMatrix prefix;
    for (const auto& row : g.vertices[v].rows)
      prefix.rows.emplace_back(row.begin(),
                               row.end() - static_cast<std::ptrdiff_t>(1));
    const WindowKey key = reduce_matrix(prefix).key;
    auto [it, inserted] = index.try_emplace(key, clusters.size());
    if (inserted) clusters.emplace_back();
    clusters[it->second].push_back(v);
  }
  return clusters;
}

HamiltonianSearch hamiltonian_cycle(const OverlapGraph& g,
                                    std::uint64_t budget) {
  HamiltonianSearch result;
  const std::size_t count = g.vertices.size();
  if (count == 0) return result;

  // Neighbor lists in vertex order (already lexicographic).
  std::vector<std::vector<std::size_t>> adj(count);
  for (const auto& e : g.graph.edges) adj[e.tail].push_back(e.head);
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<char> used(count, 0);
  std::vector<std::size_t> path{0};
  std::vector<std::size_t> choice{0};  // neighbor cursor per path element
  used[0] = 1;

  while (!path.empty()) {
    const std::size_t v = path.back();
    if (path.size() == count) {
      if (std::binary_search(adj[v].begin(), adj[v].end(), std::size_t{0})) {
        result.cycle = path;
        return result;
      }
      used[v] = 0;
      path.pop_back();
      choice.pop_back();
      continue;
    }
    bool advanced = false;
    while (choice.back() < adj[v].size()) {
      const std::size_t w = adj[v][choice.back()++];
      if (used[w]) continue;
      if (result.expansions++ >= budget) {
        result.budget_exhausted = true;
        return result;
      }
      used[w] = 1;
      path.push_back(w);
      choice.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      used[v] = 0;
      path.pop_back();
      choice.pop_back();
    }
  }
  return result;
}

ImpliedOrder implied_order(const std::vector<PermMatrix>& cycle,
                           std::size_t d, std::size_t n) {
  if (cycle.empty())
    throw std::invalid_argument("implied_order: empty cycle");
  const std::size_t rows = d - 1;
  const std::size_t length = cycle.size();
  if (length < n)
    throw std::invalid_argument("implied_order: cycle shorter than n");

  ImpliedOrder order;
  order.d = d;
  order.n = n;
  order.length = length;
  order.per_row.assign(rows, {});
  order.cycle_witness.assign(rows, {});

  for (std::size_t t = 0; t < length; ++t) {
    const PermMatrix& m = cycle[t];
    if (m.row_count() != rows || m.cols() != n)
      throw std::invalid_argument("implied_order: vertex of wrong shape");
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          const std::size_t pa = (t + a) % length;
          const std::size_t pb = (t + b) % length;
          if (m.rows[r][a] < m.rows[r][b])
            order.per_row[r].emplace(pa, pb);
          else
            order.per_row[r].emplace(pb, pa);
        }
  }

  order.acyclic = true;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::vector<std::size_t>> adj(length);
    for (const auto& [a, b] : order.per_row[r]) adj[a].push_back(b);
    if (auto witness = find_cycle(adj)) {
      order.acyclic = false;
      order.cycle_witness[r] = *witness;
    }
  }
  return order;
}

std::set<Relation> transitive_reduction(const std::set<Relation>& rel,
                                        std::size_t count) {
  // Reachability closure, then drop relations with an intermediate point.
  std::vector<std::vector<char>> reach(count, std::vector<char>(count, 0));
  std::vector<std::vector<std::size_t>> adj(count);
  for (const auto& [a, b] : rel) adj[a].push_back(b);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
    }
    if (reach[s][s])
      throw std::invalid_argument("transitive_reduction: relation is cyclic");
  }
  std::set<Relation> hasse;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      if (!reach[a][b]) continue;
      bool direct = true;
      for (std::size_t w = 0; w < count && direct; ++w)
        if (reach[a][w] && reach[w][b]) direct = false;
      if (direct) hasse.emplace(a, b);
    }
  return hasse;
}

std::vector<Word> linearize(const ImpliedOrder& order) {
  if (!order.acyclic) {
    std::string msg = "linearize: implied order is cyclic; witness:";
    for (std::size_t r = 0; r < order.cycle_witness.size(); ++r) {
      if (order.cycle_witness[r].empty()) continue;
      msg += " row " + std::to_string(r + 1) + ":";
      for (std::size_t p : order.cycle_witness[r])
        msg += " " + std::to_string(p);
      break;
    }
    throw std::invalid_argument(msg);
  }
  std::vector<Word> out;
  out.reserve(order.per_row.size());
  for (const auto& rel : order.per_row) {
    // Longest chain ending at each position, by DFS with memoization.
    std::vector<std::vector<std::size_t>> pred(order.length);
    for (const auto& [a, b] : rel) pred[b].push_back(a);
    std::vector<Value> level(order.length, 0);
    std::vector<std::size_t> stack;
    for (std::size_t p = 0; p < order.length; ++p) {
      if (level[p]) continue;
      stack.push_back(p);
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        Value best = 1;
        bool ready = true;
        for (std::size_t u : pred[v]) {
          if (!level[u]) {
            stack.push_back(u);
            ready = false;
          } else {
            best = std::max(best, level[u] + 1);
          }
        }
        if (ready) {
          level[v] = best;
          stack.pop_back();
        }
      }
    }
    out.emplace_back(level.begin(), level.end());
  }
  return out;
}

std::vector<Word> keys(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("keys: need n >= 3");
  // Keys for S_m are the heads for S_{m-1} with m appended; S_2 has the
  // single key 12.
  std::vector<Word> current{{1, 2}};
  for (std::size_t m = 3; m <= n; ++m) {
    std::vector<Word> next;
    next.reserve(current.size() * (m - 2));
    for (const auto& key : current)
      for (auto& head : heads(key)) {
        head.push_back(static_cast<Value>(m));
        next.push_back(std::move(head));
      }
    current = std::move(next);
  }
  return current;
}

std::vector<Word> heads(const Word& key) {
  const std::size_t n = key.size();
  check_perm(key, n, "heads");
  if (n < 2 || key.front() != 1 || key.back() != n)
    throw std::invalid_argument("heads: key must start with 1 and end with n");
  std::vector<Word> out{key};
  Word w = key;
  for (std::size_t i = n - 1; i >= 2; --i) {
    // Transpose values i+1 and i.
    std::size_t pa = 0, pb = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (w[p] == i + 1) pa = p;
      if (w[p] == i) pb = p;
    }
    std::swap(w[pa], w[pb]);
    out.push_back(w);
  }
  return out;
}

std::vector<Word> rotations(const Word& head) {
  std::vector<Word> out;
  out.reserve(head.size());
  Word w = head;
  for (std::size_t i = 0; i < head.size(); ++i) {
    out.push_back(w);
    std::rotate(w.begin(), w.begin() + 1, w.end());
  }
  return out;
}

S4Switch s4_switch() {
  S4Switch result;
  const std::vector<Word> key_list = keys(4);
  for (std::size_t part = 0; part < 2; ++part)
    for (const auto& head : heads(key_list[part]))
      for (const auto& rot : rotations(head))
        result.parts[part].push_back(rot);

  auto edge = [](const Word& x, const Word& y) {
    return overlap_edge(PermMatrix{{x}}, PermMatrix{{y}});
  };
  for (std::size_t part = 0; part < 2; ++part)
    for (std::size_t i = 0; i < result.parts[part].size(); ++i) {
      const auto& from = result.parts[part][i];
      const auto& to =
          result.parts[part][(i + 1) % result.parts[part].size()];
      if (!edge(from, to))
        throw std::runtime_error("s4_switch: part is not a closed cycle");
    }

  // Exchange the last elements of the two parts; the splice crosses over on
  // the edges predecessor(a) -> b and predecessor(b) -> a.
  const auto& p0 = result.parts[0];
  const auto& p1 = result.parts[1];
  result.cycle.insert(result.cycle.end(), p0.begin(), p0.end() - 1);
  result.cycle.push_back(p1.back());
  result.cycle.insert(result.cycle.end(), p1.begin(), p1.end() - 1);
  result.cycle.push_back(p0.back());

  for (std::size_t i = 0; i < result.cycle.size(); ++i)
    if (!edge(result.cycle[i], result.cycle[(i + 1) % result.cycle.size()]))
      throw std::runtime_error("s4_switch: spliced cycle is broken");
  return result;
}

KeyGroupCheck d3_keygroup_cycle_check(const Word& key2, const Word& key3) {
  check_perm(key2, 3, "d3_keygroup_cycle_check");
  check_perm(key3, 3, "d3_keygroup_cycle_check");

  KeyGroupCheck check;
  PermMatrix pair{{key2, key3}};
  auto rotate_pair = [](PermMatrix m) {
    for (auto& row : m.rows) std::rotate(row.begin(), row.begin() + 1, row.end());
    return m;
  };
  PermMatrix head = pair;
  for (auto& row : head.rows) std::swap(row[1], row[2]);

  for (PermMatrix m : {pair, head}) {
    for (std::size_t i = 0; i < 3; ++i) {
      check.elements.push_back(m);
      m = rotate_pair(std::move(m));
    }
  }

  check.small_cycle = true;
  for (std::size_t i = 0; i < check.elements.size(); ++i) {
    const auto& from = check.elements[i];
    const auto& to = check.elements[(i + 1) % check.elements.size()];
    if (!overlap_edge(from, to)) {
      check.small_cycle = false;
      check.failing_step = i;
      break;
    }
  }
  return check;
}

}  // namespace ucyc
