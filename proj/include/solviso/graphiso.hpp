#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "solviso/graphenc.hpp"

namespace solviso {

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) noexcept {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ull;
  return h ^ (h >> 29);
}

/// Compressed adjacency.
struct Csr {
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> adj;

  explicit Csr(const ColoredGraph& g) : offset(g.vertex_count + 1, 0) {
    for (auto [u, v] : g.edges) {
      ++offset[u + 1];
      ++offset[v + 1];
    }
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    adj.resize(offset.back());
    auto fill = offset;
    for (auto [u, v] : g.edges) {
      adj[fill[u]++] = v;
      adj[fill[v]++] = u;
    }
  }
};

/// Ordered partition: cells are contiguous ranges of `lab`, identified by
/// their start position.
struct Partition {
  std::vector<std::uint32_t> lab;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;      // vertex -> cell start
  std::vector<std::uint32_t> cell_len;  // start -> length
  std::size_t cells = 0;

  bool discrete() const noexcept { return cells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const ColoredGraph& g) : csr_(g), count_(g.vertex_count, 0), in_queue_(g.vertex_count, 0) {}

  /// Partition into color classes in increasing color order, then refined.
  Partition initial(const ColoredGraph& g, std::uint64_t& trace) {
    const auto n = g.vertex_count;
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), 0u);
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return g.colors[a] < g.colors[b]; });
    p.pos.resize(n);
    p.cell.resize(n);
    p.cell_len.assign(n, 0);
    std::vector<std::uint32_t> starts;
    trace = mix(0, n);
    for (std::size_t i = 0; i < n; ++i) {
      p.pos[p.lab[i]] = static_cast<std::uint32_t>(i);
      if (i == 0 || g.colors[p.lab[i]] != g.colors[p.lab[i - 1]]) {
        starts.push_back(static_cast<std::uint32_t>(i));
        ++p.cells;
      }
      p.cell[p.lab[i]] = starts.back();
      ++p.cell_len[starts.back()];
    }
    for (auto s : starts) trace = mix(mix(trace, g.colors[p.lab[s]]), p.cell_len[s]);
    refine(p, starts, trace);
    return p;
  }

  /// Splits v off its cell and refines with {v} as the splitter.
  void individualize(Partition& p, std::uint32_t v, std::uint64_t& trace) {
    const auto s = p.cell[v];
    const auto len = p.cell_len[s];
    trace = mix(mix(trace, s), len);
    if (len == 1) return;
    const auto u = p.lab[s];
    const auto pv = p.pos[v];
    std::swap(p.lab[s], p.lab[pv]);
    p.pos[u] = pv;
    p.pos[v] = s;
    p.cell_len[s] = 1;
    p.cell_len[s + 1] = len - 1;
    for (auto i = s + 1; i < s + len; ++i) p.cell[p.lab[i]] = s + 1;
    ++p.cells;
    const std::uint32_t splitter[] = {s};
    refine(p, splitter, trace);
  }

  /// Equitable refinement driven by a FIFO queue of splitter cells. Cells
  /// touched by a splitter are split by neighbor count in increasing count
  /// order; the trace records every split and is isomorphism-invariant.
  void refine(Partition& p, std::span<const std::uint32_t> initial_splitters, std::uint64_t& trace) {
    std::vector<std::uint32_t> queue(initial_splitters.begin(), initial_splitters.end());
    for (auto s : queue) in_queue_[s] = 1;
    std::vector<std::uint32_t> touched, touched_cells, splitter;
    for (std::size_t head = 0; head < queue.size() && !p.discrete(); ++head) {
      const auto w = queue[head];
      in_queue_[w] = 0;
      splitter.assign(p.lab.begin() + w, p.lab.begin() + w + p.cell_len[w]);
      for (auto x : splitter)
        for (auto k = csr_.offset[x]; k < csr_.offset[x + 1]; ++k) {
          const auto u = csr_.adj[k];
          if (count_[u]++ == 0) touched.push_back(u);
        }
      for (auto u : touched) {
        const auto c = p.cell[u];
        if (!mark_(c)) touched_cells.push_back(c);
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      for (auto c : touched_cells) split_cell(p, c, queue, trace);
      for (auto c : touched_cells) cell_mark_[c] = 0;
      for (auto u : touched) count_[u] = 0;
      touched.clear();
      touched_cells.clear();
    }
    for (auto s : queue) in_queue_[s] = 0;
  }

 private:
  bool mark_(std::uint32_t c) {
    if (cell_mark_.size() < count_.size()) cell_mark_.assign(count_.size(), 0);
    if (cell_mark_[c]) return true;
    cell_mark_[c] = 1;
    return false;
  }

  void split_cell(Partition& p, std::uint32_t s, std::vector<std::uint32_t>& queue, std::uint64_t& trace) {
    const auto len = p.cell_len[s];
    if (len == 1) return;
    auto first = p.lab.begin() + s, last = first + len;
    const auto c0 = count_[*first];
    if (std::all_of(first, last, [&](std::uint32_t v) { return count_[v] == c0; })) return;
    std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    trace = mix(trace, s);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> frags;  // (start, len)
    std::uint32_t start = s;
    for (std::uint32_t i = s; i < s + len; ++i) {
      const auto v = p.lab[i];
      p.pos[v] = i;
      if (i > s && count_[v] != count_[p.lab[i - 1]]) {
        frags.emplace_back(start, i - start);
        start = i;
      }
    }
    frags.emplace_back(start, s + len - start);
    for (auto [fs, fl] : frags) {
      trace = mix(mix(trace, count_[p.lab[fs]]), fl);
      p.cell_len[fs] = fl;
      for (auto i = fs; i < fs + fl; ++i) p.cell[p.lab[i]] = fs;
    }
    p.cells += frags.size() - 1;
    if (in_queue_[s]) {
      for (std::size_t i = 1; i < frags.size(); ++i) push(queue, frags[i].first);
    } else {
      std::size_t largest = 0;
      for (std::size_t i = 1; i < frags.size(); ++i)
        if (frags[i].second > frags[largest].second) largest = i;
      for (std::size_t i = 0; i < frags.size(); ++i)
        if (i != largest) push(queue, frags[i].first);
    }
  }

  void push(std::vector<std::uint32_t>& queue, std::uint32_t s) {
    if (in_queue_[s]) return;
    in_queue_[s] = 1;
    queue.push_back(s);
  }

  Csr csr_;
  std::vector<std::uint32_t> count_;
  std::vector<char> in_queue_;
  std::vector<char> cell_mark_;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

/// Stable coloring: cell index (in partition order) of every vertex after
/// equitable refinement of the input colors.
inline std::vector<std::uint32_t> color_refine(const ColoredGraph& g) {
  detail::Refiner r(g);
  std::uint64_t trace = 0;
  const auto p = r.initial(g, trace);
  std::vector<std::uint32_t> out(g.vertex_count);
  std::vector<std::uint32_t> index(g.vertex_count, 0);
  std::uint32_t k = 0;
  for (std::size_t i = 0; i < g.vertex_count; ++i)
    if (i == 0 || p.cell[p.lab[i]] != p.cell[p.lab[i - 1]]) index[i] = k++;
    else index[i] = k - 1;
  for (std::size_t i = 0; i < g.vertex_count; ++i) out[p.lab[i]] = index[i];
  return out;
}

/// Isomorphism-invariant hash of the refinement of the input coloring.
inline std::uint64_t refinement_invariant(const ColoredGraph& g) {
  detail::Refiner r(g);
  std::uint64_t trace = 0;
  r.initial(g, trace);
  return trace;
}

struct CanonicalGraph {
  ColoredGraph graph;                   // vertex i is canonical position i
  std::vector<std::uint32_t> labeling;  // original vertex -> canonical index
  std::uint64_t nodes = 0;              // search-tree nodes visited
};

namespace detail {

/// Individualization-refinement search. Target cell: first smallest
/// non-singleton cell. The chosen leaf minimises (trace sequence, relabeled
/// colors, sorted relabeled edges); subtrees are pruned by trace comparison
/// and by orbits of discovered automorphisms that fix the current path.
class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), refiner_(g) {}

  CanonicalGraph run() {
    std::uint64_t t0 = 0;
    auto p = refiner_.initial(g_, t0);
    // The root is part of the structure, so it is individualized up front.
    if (g_.vertex_count) refiner_.individualize(p, static_cast<std::uint32_t>(g_.root), t0);
    std::vector<std::uint64_t> trace{t0};
    std::vector<std::uint32_t> path;
    search(p, trace, path);

    CanonicalGraph out;
    out.nodes = nodes_;
    out.labeling.resize(g_.vertex_count);
    for (std::size_t i = 0; i < g_.vertex_count; ++i) out.labeling[best_.lab[i]] = static_cast<std::uint32_t>(i);
    out.graph = relabeled(out.labeling);
    return out;
  }

 private:
  struct Leaf {
    std::vector<std::uint64_t> trace;
    std::vector<std::uint32_t> lab;
    std::vector<std::uint32_t> colors;
    std::vector<std::uint64_t> edges;
    bool valid = false;
  };

  ColoredGraph relabeled(const std::vector<std::uint32_t>& labeling) const {
    ColoredGraph out;
    out.vertex_count = g_.vertex_count;
    out.colors.resize(g_.vertex_count);
    for (std::size_t v = 0; v < g_.vertex_count; ++v) out.colors[labeling[v]] = g_.colors[v];
    out.root = labeling[g_.root];
    out.edges.reserve(g_.edges.size());
    for (auto [u, v] : g_.edges) out.edges.emplace_back(labeling[u], labeling[v]);
    out.normalize();
    return out;
  }

  // -1, 0, 1 comparing a trace prefix against the same-length prefix of best.
  static int compare_prefix(const std::vector<std::uint64_t>& t, const std::vector<std::uint64_t>& best) {
    const auto k = std::min(t.size(), best.size());
    for (std::size_t i = 0; i < k; ++i)
      if (t[i] != best[i]) return t[i] < best[i] ? -1 : 1;
    if (t.size() > best.size()) return 1;
    return 0;
  }

  void fill_leaf(const Partition& p, const std::vector<std::uint64_t>& trace, Leaf& leaf) const {
    leaf.trace = trace;
    leaf.lab = p.lab;
    leaf.colors.resize(g_.vertex_count);
    for (std::size_t i = 0; i < g_.vertex_count; ++i) leaf.colors[i] = g_.colors[p.lab[i]];
    leaf.edges.clear();
    leaf.edges.reserve(g_.edges.size());
    for (auto [u, v] : g_.edges) {
      std::uint64_t a = p.pos[u], b = p.pos[v];
      if (a > b) std::swap(a, b);
      leaf.edges.push_back(a << 32 | b);
    }
    std::sort(leaf.edges.begin(), leaf.edges.end());
    leaf.valid = true;
  }

  static int compare_leaf(const Leaf& a, const Leaf& b) {
    if (a.trace != b.trace) return a.trace < b.trace ? -1 : 1;
    if (a.colors != b.colors) return a.colors < b.colors ? -1 : 1;
    if (a.edges != b.edges) return a.edges < b.edges ? -1 : 1;
    return 0;
  }

  void record_automorphism(const Leaf& from, const Leaf& to) {
    if (automorphisms_.size() >= kMaxGenerators) return;
    std::vector<std::uint32_t> gamma(g_.vertex_count);
    for (std::size_t i = 0; i < g_.vertex_count; ++i) gamma[from.lab[i]] = to.lab[i];
    bool identity = true;
    for (std::size_t v = 0; v < gamma.size() && identity; ++v) identity = gamma[v] == v;
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  void search(Partition& p, std::vector<std::uint64_t>& trace, std::vector<std::uint32_t>& path) {
    ++nodes_;
    if (best_.valid && compare_prefix(trace, best_.trace) > 0) return;
    if (p.discrete()) {
      Leaf leaf;
      fill_leaf(p, trace, leaf);
      if (!first_.valid) first_ = leaf;
      if (!best_.valid) {
        best_ = std::move(leaf);
        return;
      }
      const int c = compare_leaf(leaf, best_);
      if (c < 0) {
        best_ = std::move(leaf);
      } else if (c == 0) {
        record_automorphism(best_, leaf);
      }
      if (compare_leaf(leaf, first_) == 0 && c != 0) record_automorphism(first_, leaf);
      return;
    }

    std::uint32_t target = 0, target_len = UINT32_MAX;
    for (std::uint32_t i = 0; i < p.lab.size(); i += p.cell_len[i])
      if (p.cell_len[i] > 1 && p.cell_len[i] < target_len) {
        target = i;
        target_len = p.cell_len[i];
      }
    std::vector<std::uint32_t> members(p.lab.begin() + target, p.lab.begin() + target + target_len);
    std::sort(members.begin(), members.end());

    std::vector<std::uint32_t> explored;
    std::size_t seen_gens = SIZE_MAX;
    UnionFind orbits(0);
    for (auto v : members) {
      if (!explored.empty()) {
        if (seen_gens != automorphisms_.size()) {
          orbits = stabilizer_orbits(path);
          seen_gens = automorphisms_.size();
        }
        const auto rv = orbits.find(v);
        if (std::any_of(explored.begin(), explored.end(), [&](std::uint32_t w) { return orbits.find(w) == rv; }))
          continue;
      }
      Partition child = p;
      std::uint64_t t = trace.back();
      refiner_.individualize(child, v, t);
      trace.push_back(t);
      path.push_back(v);
      search(child, trace, path);
      path.pop_back();
      trace.pop_back();
      explored.push_back(v);
    }
  }

  UnionFind stabilizer_orbits(const std::vector<std::uint32_t>& path) const {
    UnionFind uf(g_.vertex_count);
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(path.begin(), path.end(), [&](std::uint32_t v) { return gamma[v] == v; })) continue;
      for (std::uint32_t v = 0; v < gamma.size(); ++v) uf.unite(v, gamma[v]);
    }
    return uf;
  }

  static constexpr std::size_t kMaxGenerators = 256;

  const ColoredGraph& g_;
  Refiner refiner_;
  Leaf first_, best_;
  std::vector<std::vector<std::uint32_t>> automorphisms_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Canonical relabeling: isomorphic colored graphs map to identical graphs.
/// The labeling is re-checked as an isomorphism onto the returned graph.
inline CanonicalGraph canonize_colored_graph(const ColoredGraph& g) {
  ColoredGraph input = g;
  input.normalize();
  detail::Canonizer c(input);
  auto out = c.run();
  if (!is_graph_isomorphism(input, out.graph, out.labeling))
    throw Error(ErrorKind::WitnessVerificationFailed, "canonical labeling is not an isomorphism");
  return out;
}

/// Vertex bijection a -> b, verified edge by edge, or nullopt.
inline std::optional<std::vector<std::uint32_t>> isomorphism_from_canonical(const ColoredGraph& a,
                                                                            const CanonicalGraph& ca,
                                                                            const ColoredGraph& b,
                                                                            const CanonicalGraph& cb) {
  if (!(ca.graph == cb.graph)) return std::nullopt;
  std::vector<std::uint32_t> inv_b(b.vertex_count);
  for (std::size_t v = 0; v < b.vertex_count; ++v) inv_b[cb.labeling[v]] = static_cast<std::uint32_t>(v);
  std::vector<std::uint32_t> f(a.vertex_count);
  for (std::size_t v = 0; v < a.vertex_count; ++v) f[v] = inv_b[ca.labeling[v]];
  if (!is_graph_isomorphism(a, b, f))
    throw Error(ErrorKind::WitnessVerificationFailed, "composed canonical labelings disagree");
  return f;
}

inline std::optional<std::vector<std::uint32_t>> are_graphs_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return std::nullopt;
  if (refinement_invariant(a) != refinement_invariant(b)) return std::nullopt;
  const auto ca = canonize_colored_graph(a);
  const auto cb = canonize_colored_graph(b);
  return isomorphism_from_canonical(a, ca, b, cb);
}

}  // namespace solviso
