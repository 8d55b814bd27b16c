#include "ucyc/debruijn.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ucyc/text.hpp"

namespace ucyc {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kValueBudget = 0xffffffffull;

// k^e, throwing when the result would not fit the value budget.
std::uint64_t checked_pow(std::uint64_t k, std::uint64_t e, const char* what) {
  u128 p = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    p *= k;
    if (p > kValueBudget)
      throw std::invalid_argument(std::string(what) +
                                  ": instance exceeds the 2^32-1 value budget");
  }
  return static_cast<std::uint64_t>(p);
}

std::string db_label(const Word& w) { return word_text(w); }

// Radix-k encoding of the last n letters of w; only valid when w.size() >= n.
std::uint64_t factor_code(const Word& w, std::size_t n, std::uint64_t k) {
  std::uint64_t code = 0;
  for (std::size_t i = w.size() - n; i < w.size(); ++i)
    code = code * k + w[i];
  return code;
}

}  // namespace

namespace detail {

GreedyWordRun greedy_word_scan(std::size_t n, std::size_t k, const Word& start,
                               bool alternate) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("greedy word scan: need n >= 1 and k >= 1");
  const std::uint64_t total = checked_pow(k, n, "greedy word scan");
  if (start.size() != n - 1)
    throw std::invalid_argument("greedy word scan: start must have n-1 letters");
  for (Value v : start)
    if (v >= k)
      throw std::invalid_argument("greedy word scan: start letter out of alphabet");

  Word w = start;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * total);

  bool smallest = true;
  for (;;) {
    bool extended = false;
    if (w.size() + 1 < n) {
      // No complete factor yet; the preferred letter always works.
      w.push_back(smallest ? 0 : static_cast<Value>(k - 1));
      extended = true;
    } else {
      for (std::size_t t = 0; t < k; ++t) {
        const Value x =
            smallest ? static_cast<Value>(t) : static_cast<Value>(k - 1 - t);
        w.push_back(x);
        const std::uint64_t code = factor_code(w, n, k);
        if (seen.insert(code).second) {
          extended = true;
          break;
        }
        w.pop_back();
      }
    }
    if (!extended) break;
    if (alternate) smallest = !smallest;
  }

  GreedyWordRun run;
  run.covered = seen.size();
  run.total = total;
  run.success = run.covered == total;
  if (run.success)
    run.word = Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(n - 1));
  else
    run.word = std::move(w);
  return run;
}

}  // namespace detail

std::size_t TransitionGraph::add_vertex(std::string label) {
  vertex_labels.push_back(std::move(label));
  out_edges.emplace_back();
  return vertex_labels.size() - 1;
}

std::size_t TransitionGraph::add_edge(std::size_t tail, std::size_t head,
                                      std::string label) {
  if (tail >= vertex_count() || head >= vertex_count())
    throw std::invalid_argument("add_edge: endpoint out of range");
  edges.push_back(Edge{tail, head, std::move(label)});
  out_edges[tail].push_back(edges.size() - 1);
  return edges.size() - 1;
}

bool TransitionGraph::balanced() const {
  std::vector<std::size_t> in(vertex_count(), 0);
  for (const auto& e : edges) ++in[e.head];
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (in[v] != out_edges[v].size()) return false;
  return true;
}

bool TransitionGraph::strongly_connected() const {
  std::vector<char> active(vertex_count(), 0);
  for (const auto& e : edges) active[e.tail] = active[e.head] = 1;
  std::size_t active_count = 0, root = vertex_count();
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (active[v]) {
      ++active_count;
      if (root == vertex_count()) root = v;
    }
  if (active_count == 0) return true;

  auto sweep = [&](bool forward) {
    std::vector<std::vector<std::size_t>> adj(vertex_count());
    for (const auto& e : edges)
      adj[forward ? e.tail : e.head].push_back(forward ? e.head : e.tail);
    std::vector<char> vis(vertex_count(), 0);
    std::vector<std::size_t> stack{root};
    vis[root] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      ++count;
      for (std::size_t w : adj[v])
        if (!vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
    }
    return count;
  };
  return sweep(true) == active_count && sweep(false) == active_count;
}

std::string to_dot(const TransitionGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  };
  std::string dot = "digraph G {\n";
  std::vector<char> touched(g.vertex_count(), 0);
  for (const auto& e : g.edges) touched[e.tail] = touched[e.head] = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!touched[v]) dot += "  " + quote(g.vertex_labels[v]) + ";\n";
  for (const auto& e : g.edges)
    dot += "  " + quote(g.vertex_labels[e.tail]) + " -> " +
           quote(g.vertex_labels[e.head]) + " [label=" + quote(e.label) +
           "];\n";
  dot += "}\n";
  return dot;
}

bool label_isomorphic(const TransitionGraph& a, const TransitionGraph& b) {
  auto labels = [](const TransitionGraph& g) {
    auto v = g.vertex_labels;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::invalid_argument("label_isomorphic: duplicate vertex labels");
    return v;
  };
  if (labels(a) != labels(b)) return false;
  auto pairs = [](const TransitionGraph& g) {
    std::vector<std::pair<std::string, std::string>> p;
    p.reserve(g.edge_count());
    for (const auto& e : g.edges)
      p.emplace_back(g.vertex_labels[e.tail], g.vertex_labels[e.head]);
    std::sort(p.begin(), p.end());
    return p;
  };
  return pairs(a) == pairs(b);
}

GreedyWordRun martin(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("martin: need n >= 1 and k >= 1");
  return detail::greedy_word_scan(n, k, Word(n - 1, static_cast<Value>(k - 1)),
                                  false);
}

GreedyWordRun martin(std::size_t n, std::size_t k, const Word& start) {
  return detail::greedy_word_scan(n, k, start, false);
}

TransitionGraph debruijn_graph(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("debruijn_graph: need n >= 1 and k >= 1");
  const std::uint64_t vertices = checked_pow(k, n, "debruijn_graph");
  checked_pow(k, n + 1, "debruijn_graph");

  TransitionGraph g;
  Word w(n);
  auto decode = [&](std::uint64_t code) {
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      w[i] = static_cast<Value>(c % k);
      c /= k;
    }
  };
  for (std::uint64_t code = 0; code < vertices; ++code) {
    decode(code);
    g.add_vertex(db_label(w));
  }
  const std::uint64_t suffix_mod = vertices / k;
  for (std::uint64_t code = 0; code < vertices; ++code) {
    decode(code);
    Word label = w;
    label.push_back(0);
    for (std::uint64_t x = 0; x < k; ++x) {
      label.back() = static_cast<Value>(x);
      g.add_edge(code, (code % suffix_mod) * k + x, db_label(label));
    }
  }
  return g;
}

TransitionGraph line_graph(const TransitionGraph& g) {
  TransitionGraph lg;
  for (const auto& e : g.edges) lg.add_vertex(e.label);
  // Edges of g grouped by tail for fast successor lookup.
  std::vector<std::vector<std::size_t>> by_tail(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    by_tail[g.edges[i].tail].push_back(i);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (std::size_t j : by_tail[g.edges[i].head])
      lg.add_edge(i, j, g.edges[i].label + "|" + g.edges[j].label);
  return lg;
}

std::vector<std::size_t> eulerian_cycle(const TransitionGraph& g) {
  if (!g.balanced())
    throw std::invalid_argument(
        "eulerian_cycle: graph is not Eulerian (not balanced: some vertex has "
        "in-degree != out-degree)");
  if (!g.strongly_connected())
    throw std::invalid_argument(
        "eulerian_cycle: graph is not Eulerian (not connected)");
  if (g.edge_count() == 0) return {};

  std::size_t start = 0;
  while (g.out_edges[start].empty()) ++start;

  std::vector<std::size_t> next_out(g.vertex_count(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, via edge)
  std::vector<std::size_t> path;
  path.reserve(g.edge_count());
  stack.emplace_back(start, g.edge_count());  // sentinel edge
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    if (next_out[v] < g.out_edges[v].size()) {
      const std::size_t e = g.out_edges[v][next_out[v]++];
      stack.emplace_back(g.edges[e].head, e);
    } else {
      stack.pop_back();
      if (via != g.edge_count()) path.push_back(via);
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Word debruijn_via_euler(std::size_t n, std::size_t k) {
  if (n < 2)
    throw std::invalid_argument("debruijn_via_euler: need n >= 2");
  const TransitionGraph g = debruijn_graph(n - 1, k);
  Word w;
  w.reserve(g.edge_count());
  for (std::size_t e : eulerian_cycle(g)) {
    // The sequence is the first letter of each edge label x_1...x_n. Labels
    // are contiguous digits for k <= 10 and space-separated otherwise.
    const std::string& label = g.edges[e].label;
    if (label.find(' ') == std::string::npos)
      w.push_back(static_cast<Value>(label[0] - '0'));
    else
      w.push_back(static_cast<Value>(std::stoul(label)));
  }
  return w;
}

std::vector<Word> matrix_ucycle(const MatrixUCycleSpec& spec) {
  if (spec.dims.empty() || spec.k < 1)
    throw std::invalid_argument("matrix_ucycle: need dims and k >= 1");
  for (std::size_t d : spec.dims)
    if (d < 1) throw std::invalid_argument("matrix_ucycle: dims must be >= 1");

  // t entries per slice, K possible slices, sequence of K^{n_d} slices.
  u128 t128 = 1;
  for (std::size_t i = 0; i + 1 < spec.dims.size(); ++i) {
    t128 *= spec.dims[i];
    if (t128 > kValueBudget)
      throw std::invalid_argument("matrix_ucycle: slice too large");
  }
  const std::uint64_t t = static_cast<std::uint64_t>(t128);
  const std::size_t order = spec.dims.back();
  const std::uint64_t big_k = checked_pow(spec.k, t, "matrix_ucycle");
  checked_pow(big_k, order, "matrix_ucycle");

  const GreedyWordRun base = martin(order, static_cast<std::size_t>(big_k));
  std::vector<Word> slices;
  slices.reserve(base.word.size());
  for (Value letter : base.word) {
    Word slice(t);
    std::uint64_t code = letter;
    for (std::size_t i = t; i-- > 0;) {
      slice[i] = static_cast<Value>(code % spec.k + 1);
      code /= spec.k;
    }
    slices.push_back(std::move(slice));
  }
  return slices;
}

}  // namespace ucyc
