#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicm/masks.hpp"

namespace bicm {

/// Finite simple graph on the vertex set {0, ..., n-1}.  Adjacency is stored
/// as one bit mask per vertex.  Vertices are 0-indexed in the API; every text
/// format (graph6, edge lists, printed vertex names) is 1-indexed.
struct Graph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  Graph() = default;

  explicit Graph(int vertex_count) : n(vertex_count) {
    if (vertex_count < 1 || vertex_count > kMaxVertices)
      throw std::domain_error("vertex count must be between 1 and 32");
    adj.assign(static_cast<std::size_t>(vertex_count), 0);
  }

  void add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::domain_error("vertex out of range");
    if (i == j) throw std::domain_error("loops are not allowed");
    adj[static_cast<std::size_t>(i)] |= 1u << j;
    adj[static_cast<std::size_t>(j)] |= 1u << i;
  }

  bool has_edge(int i, int j) const { return (adj[static_cast<std::size_t>(i)] >> j) & 1u; }

  int degree(int i) const { return std::popcount(adj[static_cast<std::size_t>(i)]); }

  std::uint32_t vertex_mask() const { return full_vertex_mask(n); }

  int edge_count() const {
    int twice = 0;
    for (std::uint32_t row : adj) twice += std::popcount(row);
    return twice / 2;
  }

  /// Edges as (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  bool has_isolated_vertex() const {
    for (std::uint32_t row : adj)
      if (row == 0) return true;
    return false;
  }

  bool is_valid() const {
    if (n < 1 || n > kMaxVertices || static_cast<int>(adj.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
      if (adj[static_cast<std::size_t>(i)] & ~vertex_mask()) return false;
      if (has_edge(i, i)) return false;
      for (int j = 0; j < n; ++j)
        if (has_edge(i, j) != has_edge(j, i)) return false;
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    g.adj[static_cast<std::size_t>(i)] = g.vertex_mask() & ~(1u << i);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph c(g.n);
  for (int i = 0; i < g.n; ++i)
    c.adj[static_cast<std::size_t>(i)] =
        (~g.adj[static_cast<std::size_t>(i)]) & g.vertex_mask() & ~(1u << i);
  return c;
}

/// Induced subgraph on the vertices of `vertices`, relabelled 0..|A|-1 in
/// increasing order of the original labels.
inline Graph induced_subgraph(const Graph& g, std::uint32_t vertices) {
  if (vertices == 0) throw std::domain_error("induced subgraph needs a nonempty vertex set");
  if (vertices & ~g.vertex_mask()) throw std::domain_error("vertex set not contained in the graph");
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if ((vertices >> v) & 1u) keep.push_back(v);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.has_edge(keep[a], keep[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

/// A k-matching: pairwise disjoint edges together with the covered vertices.
struct Matching {
  std::vector<std::pair<int, int>> edges;
  std::uint32_t vertex_set = 0;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// All k-matchings, in lexicographic order of the chosen edge indices
/// (edges themselves ordered lexicographically).
inline std::vector<Matching> matchings(const Graph& g, int k) {
  if (k < 1) throw std::domain_error("matching size must be at least 1");
  const auto edge_list = g.edges();
  std::vector<Matching> out;
  Matching cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.edges.size()) == k) {
      out.push_back(cur);
      return;
    }
    int missing = k - static_cast<int>(cur.edges.size());
    for (std::size_t e = start; e + static_cast<std::size_t>(missing) <= edge_list.size(); ++e) {
      std::uint32_t em = (1u << edge_list[e].first) | (1u << edge_list[e].second);
      if (em & cur.vertex_set) continue;
      cur.edges.push_back(edge_list[e]);
      cur.vertex_set |= em;
      self(self, e + 1);
      cur.vertex_set &= ~em;
      cur.edges.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline int matching_number(const Graph& g) {
  std::vector<std::uint32_t> edge_masks;
  for (auto [i, j] : g.edges()) edge_masks.push_back((1u << i) | (1u << j));
  return max_disjoint_subfamily(edge_masks);
}

/// Permutation p with p[v] = image of v mapping g onto h, if one exists.
/// Backtracking with degree pruning; intended for n <= 10.  The first
/// witness in lexicographic order is returned.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.n != h.n) return std::nullopt;
  if (g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.n; ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.n; ++v) dh.push_back(h.degree(v));
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(g.n), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.n), false);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == g.n) return true;
    for (int c = 0; c < g.n; ++c) {
      if (used[static_cast<std::size_t>(c)] || dh[static_cast<std::size_t>(c)] != dg[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.has_edge(u, v) != h.has_edge(map[static_cast<std::size_t>(u)], c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(c)] = false;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

// --- pair-mask encoding -----------------------------------------------------
//
// The upper triangle of the adjacency matrix is read column by column,
// (1,2), (1,3), (2,3), (1,4), ...  Pair q is stored at bit (total-1-q) of a
// 64-bit key, so numeric comparison of keys equals lexicographic comparison
// of that bit string (the same order graph6 uses).

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline int pair_bit_index(int i, int j) {  // requires i < j
  return j * (j - 1) / 2 + i;
}

inline std::uint64_t graph_to_pair_mask(const Graph& g) {
  if (pair_count(g.n) > 63) throw std::domain_error("pair mask limited to n <= 11");
  const int total = pair_count(g.n);
  std::uint64_t m = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(i, j)) m |= 1ull << (total - 1 - pair_bit_index(i, j));
  return m;
}

inline Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  if (pair_count(n) > 63) throw std::domain_error("pair mask limited to n <= 11");
  const int total = pair_count(n);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> (total - 1 - pair_bit_index(i, j))) & 1ull) g.add_edge(i, j);
  return g;
}

namespace detail {

/// pair index q -> (i, j), cached per n.
inline const std::vector<std::pair<int, int>>& pairs_of(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<std::pair<int, int>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<std::pair<int, int>>>();
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) slot->emplace_back(i, j);
  }
  return *slot;
}

inline const std::vector<std::vector<int>>& permutations_of(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<std::vector<int>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<std::vector<int>>>();
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      slot->push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return *slot;
}

inline std::uint64_t apply_vertex_permutation(int total, std::uint64_t mask,
                                              const std::vector<std::pair<int, int>>& pairs,
                                              const std::vector<int>& p) {
  std::uint64_t img = 0;
  std::uint64_t rest = mask;
  while (rest) {
    int pos = std::countr_zero(rest);
    rest &= rest - 1;
    auto [i, j] = pairs[static_cast<std::size_t>(total - 1 - pos)];
    int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(j)];
    if (a > b) std::swap(a, b);
    img |= 1ull << (total - 1 - pair_bit_index(a, b));
  }
  return img;
}

/// True when `mask` is the numerically smallest labelled graph in its
/// isomorphism class.  Early-exits as soon as any permutation improves it.
inline bool is_canonical_pair_mask(int n, std::uint64_t mask) {
  const int total = pair_count(n);
  const auto& pairs = pairs_of(n);
  const auto& perms = permutations_of(n);
  for (std::size_t i = 1; i < perms.size(); ++i)
    if (apply_vertex_permutation(total, mask, pairs, perms[i]) < mask) return false;
  return true;
}

}  // namespace detail

/// Smallest pair mask over all relabellings; exact, n <= 10.
inline std::uint64_t canonical_key(const Graph& g) {
  if (g.n > 10) throw std::domain_error("canonical form limited to n <= 10");
  const int total = pair_count(g.n);
  const auto& pairs = detail::pairs_of(g.n);
  std::uint64_t mask = graph_to_pair_mask(g);
  std::uint64_t best = mask;
  for (const auto& p : detail::permutations_of(g.n)) {
    std::uint64_t img = detail::apply_vertex_permutation(total, mask, pairs, p);
    if (img < best) best = img;
  }
  return best;
}

inline Graph canonical_form(const Graph& g) { return graph_from_pair_mask(g.n, canonical_key(g)); }

struct EnumerateOptions {
  bool no_isolated = false;
  bool up_to_iso = false;
};

/// Streams every labelled graph on [n] in increasing pair-mask order,
/// optionally filtered to minimum degree >= 1 and deduplicated by canonical
/// form (each class is visited exactly once, at its smallest labelling).
/// The visitor returns false to stop early.
inline void enumerate_graphs(int n, EnumerateOptions opt,
                             const std::function<bool(const Graph&)>& visit) {
  if (n < 1) throw std::domain_error("vertex count must be at least 1");
  if (opt.up_to_iso && n > 8) throw std::domain_error("canonical enumeration limited to n <= 8");
  if (pair_count(n) > 62) throw std::domain_error("labelled enumeration limited to n <= 11");
  const int total = pair_count(n);
  const std::uint64_t end = 1ull << total;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (opt.no_isolated) {
      const auto& pairs = detail::pairs_of(n);
      std::uint32_t covered = 0;
      std::uint64_t rest = mask;
      while (rest) {
        int pos = std::countr_zero(rest);
        rest &= rest - 1;
        auto [i, j] = pairs[static_cast<std::size_t>(total - 1 - pos)];
        covered |= (1u << i) | (1u << j);
      }
      if (covered != full_vertex_mask(n)) continue;
    }
    if (opt.up_to_iso && !detail::is_canonical_pair_mask(n, mask)) continue;
    if (!visit(graph_from_pair_mask(n, mask))) return;
  }
}

inline std::vector<Graph> all_graphs(int n, EnumerateOptions opt) {
  std::vector<Graph> out;
  enumerate_graphs(n, opt, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

inline std::uint64_t count_graphs(int n, EnumerateOptions opt) {
  std::uint64_t c = 0;
  enumerate_graphs(n, opt, [&](const Graph&) {
    ++c;
    return true;
  });
  return c;
}

// --- text formats -----------------------------------------------------------

/// graph6: byte n+63, then the column-by-column upper triangle packed
/// big-endian six bits per byte, each byte offset by 63, zero padded.
inline std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int cur = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>((cur << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(const std::string& line) {
  if (line.empty()) throw std::invalid_argument("empty graph6 string");
  int n = static_cast<int>(static_cast<unsigned char>(line[0])) - 63;
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6 vertex count out of supported range");
  const int total = pair_count(n);
  const int expected = 1 + (total + 5) / 6;
  if (static_cast<int>(line.size()) != expected)
    throw std::invalid_argument("graph6 string has wrong length");
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(expected - 1) * 6);
  for (int b = 1; b < expected; ++b) {
    int v = static_cast<int>(static_cast<unsigned char>(line[static_cast<std::size_t>(b)])) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6 byte out of range");
    for (int k = 5; k >= 0; --k) bits.push_back((v >> k) & 1);
  }
  for (std::size_t k = static_cast<std::size_t>(total); k < bits.size(); ++k)
    if (bits[k]) throw std::invalid_argument("graph6 padding bits must be zero");
  Graph g(n);
  int q = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[static_cast<std::size_t>(q++)]) g.add_edge(i, j);
  return g;
}

/// Plain edge-list text: first line "n", one "i j" pair per line, 1-indexed.
inline std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << '\n';
  for (auto [i, j] : g.edges()) out << (i + 1) << ' ' << (j + 1) << '\n';
  return out.str();
}

inline Graph from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("edge list: vertex count out of range");
  Graph g(n);
  int a = 0, b = 0;
  while (in >> a) {
    if (!(in >> b)) throw std::invalid_argument("edge list: dangling endpoint");
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("edge list: vertex out of range");
    if (a == b) throw std::invalid_argument("edge list: loops are not allowed");
    g.add_edge(a - 1, b - 1);
  }
  if (!in.eof()) throw std::invalid_argument("edge list: trailing garbage");
  return g;
}

}  // namespace bicm
