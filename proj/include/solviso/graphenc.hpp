#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "solviso/group.hpp"
#include "solviso/ordering.hpp"
#include "solviso/series.hpp"

namespace solviso {

/// Fixed color registry for encoded graphs.
namespace color {
inline constexpr std::uint32_t kRoot = 0;
inline constexpr std::uint32_t kInternal = 1;
inline constexpr std::uint32_t kSecondIdentity = 2;
inline constexpr std::uint32_t kLeft = 3;
inline constexpr std::uint32_t kRight = 4;
inline constexpr std::uint32_t kEquals = 5;
inline constexpr std::uint32_t kRankBase = 6;
}  // namespace color

/// (P1, S2, g): subgroup of the large primes, composition series of the small
/// prime part, ordered generating sequence of P1.
struct AugmentedPair {
  Subgroup p1;
  CompositionSeries s2;
  GeneratingSequence g;

  const GroupTable& group() const { return p1.parent(); }
};

/// Vertex-colored undirected graph with a designated root.
struct ColoredGraph {
  std::size_t vertex_count = 0;
  std::vector<std::uint32_t> colors;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v
  std::size_t root = 0;

  /// Sorts edges and orients them u < v.
  void normalize() {
    for (auto& [u, v] : edges)
      if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
  }

  std::vector<std::vector<std::uint32_t>> adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(vertex_count);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  std::size_t max_degree() const {
    std::vector<std::size_t> deg(vertex_count, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    return vertex_count ? *std::max_element(deg.begin(), deg.end()) : 0;
  }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

/// Text dump: "v <count> root <r>", then "c <v> <color>" per vertex, then
/// "e <u> <v>" per edge with u < v, edges in increasing (u, v) order.
inline std::string dump(const ColoredGraph& g) {
  ColoredGraph h = g;
  h.normalize();
  std::ostringstream out;
  out << "v " << h.vertex_count << " root " << h.root << '\n';
  for (std::size_t v = 0; v < h.vertex_count; ++v) out << "c " << v << ' ' << h.colors[v] << '\n';
  for (auto [u, v] : h.edges) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

inline ColoredGraph parse_dump(std::istream& in) {
  ColoredGraph g;
  std::string tag, word;
  if (!(in >> tag >> g.vertex_count >> word >> g.root) || tag != "v" || word != "root")
    throw Error(ErrorKind::ParseError, "bad graph dump header");
  g.colors.assign(g.vertex_count, 0);
  while (in >> tag) {
    std::size_t a = 0, b = 0;
    if (!(in >> a >> b)) throw Error(ErrorKind::ParseError, "truncated graph dump line");
    if (tag == "c" && a < g.vertex_count)
      g.colors[a] = static_cast<std::uint32_t>(b);
    else if (tag == "e" && a < g.vertex_count && b < g.vertex_count)
      g.edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    else
      throw Error(ErrorKind::ParseError, "bad graph dump line");
  }
  g.normalize();
  return g;
}

/// Rooted tree with per-node color and tuple payload. Payload entries >= 0 are
/// element indices; negative entries tag structural nodes.
struct RootedTree {
  std::vector<std::int64_t> parent;  // -1 for the root
  std::vector<std::uint32_t> colors;
  std::vector<std::vector<std::int64_t>> payload;
  std::vector<std::size_t> leaves;  // ordered
  std::size_t root = 0;

  std::size_t size() const noexcept { return parent.size(); }

  std::size_t add(std::int64_t par, std::uint32_t c, std::vector<std::int64_t> tag) {
    parent.push_back(par);
    colors.push_back(c);
    payload.push_back(std::move(tag));
    return parent.size() - 1;
  }

  std::vector<std::size_t> depths() const {
    std::vector<std::size_t> d(size(), 0);
    // Nodes are always created after their parents.
    for (std::size_t v = 0; v < size(); ++v)
      if (parent[v] >= 0) d[v] = d[static_cast<std::size_t>(parent[v])] + 1;
    return d;
  }

  std::size_t height() const {
    const auto d = depths();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }

  std::vector<std::vector<std::size_t>> children() const {
    std::vector<std::vector<std::size_t>> ch(size());
    for (std::size_t v = 0; v < size(); ++v)
      if (parent[v] >= 0) ch[static_cast<std::size_t>(parent[v])].push_back(v);
    return ch;
  }
};

/// Binary tree over P1 in the g-order; leaf colors are the ranks. Adjacent
/// leaves are paired left to right, an odd tail gets a single parent, and the
/// process repeats up to one root (a single leaf still gets a parent).
inline RootedTree build_T_P1(const Subgroup& p1, const GeneratingSequence& g) {
  const auto order = word_ranks(p1, g);
  // Build bottom-up, then re-create top-down so parents precede children.
  struct Proto {
    std::vector<std::size_t> kids;
    std::int64_t element = -1;
    std::size_t rank = 0;
  };
  std::vector<Proto> nodes;
  std::vector<std::size_t> level;
  for (std::size_t r = 0; r < order.by_rank.size(); ++r) {
    nodes.push_back({{}, static_cast<std::int64_t>(order.by_rank[r]), r});
    level.push_back(nodes.size() - 1);
  }
  do {
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < level.size(); i += 2) {
      Proto parent;
      parent.kids.push_back(level[i]);
      if (i + 1 < level.size()) parent.kids.push_back(level[i + 1]);
      nodes.push_back(parent);
      next.push_back(nodes.size() - 1);
    }
    level = std::move(next);
  } while (level.size() > 1);

  RootedTree t;
  std::vector<std::pair<std::size_t, std::int64_t>> stack{{level.front(), -1}};
  // Breadth-first so ids grow with depth.
  for (std::size_t head = 0; head < stack.size(); ++head) {
    const auto [proto, par] = stack[head];
    const auto& node = nodes[proto];
    std::size_t id;
    if (node.element >= 0)
      id = t.add(par, color::kRankBase + static_cast<std::uint32_t>(node.rank), {node.element});
    else
      id = t.add(par, color::kInternal, {-1 - static_cast<std::int64_t>(proto)});
    for (auto k : node.kids) stack.emplace_back(k, static_cast<std::int64_t>(id));
  }
  // Leaves in rank order.
  t.leaves.assign(order.by_rank.size(), 0);
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.payload[v].front() >= 0) t.leaves[order.rank[static_cast<std::size_t>(t.payload[v].front())]] = v;
  return t;
}

/// Coset tree of a composition series: level-j nodes are the left cosets of
/// chain[m - j]; leaves are the elements of P2.
inline RootedTree build_T_S2(const CompositionSeries& s2) {
  const auto& g = s2.top().parent();
  const auto m = s2.length();
  RootedTree t;
  const auto n = static_cast<std::int64_t>(g.order());
  struct Item {
    std::size_t id;
    ElementSet coset;
  };
  std::vector<Item> level{{t.add(-1, color::kInternal, {m == 0 ? static_cast<std::int64_t>(g.identity()) : -1 - static_cast<std::int64_t>(m) * n}), s2.top().members()}};
  for (std::size_t j = m; j-- > 0;) {
    const auto& sub = s2.chain[j];
    const auto hs = sub.elements();
    std::vector<Item> next;
    for (const auto& item : level) {
      ElementSet covered(g.order());
      item.coset.for_each([&](Element y) {
        if (covered.contains(y)) return;
        ElementSet c(g.order());
        for (Element h : hs) c.insert(g.mul(y, h));
        covered |= c;
        const std::int64_t tag = j == 0 ? static_cast<std::int64_t>(y) : -1 - static_cast<std::int64_t>(j) * n - y;
        next.push_back({t.add(static_cast<std::int64_t>(item.id), color::kInternal, {tag}), std::move(c)});
      });
    }
    level = std::move(next);
  }
  for (const auto& item : level) t.leaves.push_back(item.id);
  return t;
}

/// Leaf product: every leaf of t1 becomes the root of a fresh copy of t2.
/// Copied nodes carry the flattened payload (leaf payload, t2 payload) and t2's
/// color; identified leaves keep t1's color.
inline RootedTree leaf_product(const RootedTree& t1, const RootedTree& t2) {
  RootedTree out = t1;
  out.leaves.clear();
  if (t2.size() == 1) {
    out.leaves = t1.leaves;
    return out;
  }
  std::vector<std::size_t> map(t2.size());
  for (auto leaf : t1.leaves) {
    map[t2.root] = leaf;
    for (std::size_t v = 0; v < t2.size(); ++v) {
      if (v == t2.root) continue;
      auto tag = t1.payload[leaf];
      tag.insert(tag.end(), t2.payload[v].begin(), t2.payload[v].end());
      map[v] = out.add(static_cast<std::int64_t>(map[static_cast<std::size_t>(t2.parent[v])]), t2.colors[v], std::move(tag));
    }
    for (auto l2 : t2.leaves) out.leaves.push_back(map[l2]);
  }
  return out;
}

/// The gadget tree M: a root with children colored left, right, equals.
inline RootedTree gadget_tree() {
  RootedTree m;
  m.add(-1, color::kInternal, {-1});
  m.leaves.push_back(m.add(0, color::kLeft, {-2}));
  m.leaves.push_back(m.add(0, color::kRight, {-3}));
  m.leaves.push_back(m.add(0, color::kEquals, {-4}));
  return m;
}

/// Output of build_X with the bookkeeping needed to map vertices back to
/// group elements.
struct XEncoding {
  ColoredGraph graph;
  RootedTree tree;       // T ⊙ T ⊙ M with final colors
  std::size_t ell = 0;   // height of T(P1, g)
  std::size_t m = 0;     // length of S2
  std::size_t n = 0;
  std::vector<Element> leaf_element;         // T-leaf index -> element of G
  std::vector<std::size_t> element_leaf;     // element -> T-leaf index
  std::vector<std::size_t> element_vertex;   // element -> first-copy vertex

  std::size_t gadget_leaf(std::size_t i, std::size_t j, std::size_t t) const { return tree.leaves[(i * n + j) * 3 + t]; }
};

/// X(P1, S2, g): (T(P1,g) ⊙ T(S2)) ⊙ (T(P1,g) ⊙ T(S2)) ⊙ M plus, for every
/// x, y, the path (x,y,left) - (y,x,right) - (xy,y,equals).
inline XEncoding build_X(const AugmentedPair& pair) {
  const auto& g = pair.group();
  const auto n = g.order();
  XEncoding enc;
  enc.n = n;
  enc.m = pair.s2.length();

  const auto tp = build_T_P1(pair.p1, pair.g);
  enc.ell = tp.height();
  const auto ts = build_T_S2(pair.s2);
  auto t = leaf_product(tp, ts);

  // Leaves of T are (x1, x2) in (rank, coset-tree) order; x1 * x2 names the element.
  enc.leaf_element.resize(t.leaves.size());
  enc.element_leaf.assign(n, n);
  for (std::size_t i = 0; i < t.leaves.size(); ++i) {
    const auto& tag = t.payload[t.leaves[i]];
    const auto x1 = static_cast<Element>(tag.front());
    const auto x2 = tag.size() > 1 ? static_cast<Element>(tag.back()) : g.identity();
    const auto x = g.mul(x1, x2);
    if (enc.element_leaf[x] != n)
      throw Error(ErrorKind::ProductMismatch, "element " + std::to_string(x) + " is not uniquely x1*x2");
    enc.element_leaf[x] = i;
    enc.leaf_element[i] = x;
    if (enc.m > 0 && x2 == g.identity()) t.colors[t.leaves[i]] = color::kSecondIdentity;
  }
  if (t.leaves.size() != n) throw Error(ErrorKind::ProductMismatch, "|P1|*|P2| != |G|");

  enc.element_vertex.resize(n);
  for (Element x = 0; x < n; ++x) enc.element_vertex[x] = t.leaves[enc.element_leaf[x]];

  auto tt = leaf_product(t, t);
  enc.tree = leaf_product(tt, gadget_tree());
  enc.tree.colors[enc.tree.root] = color::kRoot;

  auto& graph = enc.graph;
  graph.vertex_count = enc.tree.size();
  graph.colors = enc.tree.colors;
  graph.root = enc.tree.root;
  graph.edges.reserve(graph.vertex_count + 2 * n * n);
  for (std::size_t v = 0; v < enc.tree.size(); ++v)
    if (enc.tree.parent[v] >= 0)
      graph.edges.emplace_back(static_cast<std::uint32_t>(enc.tree.parent[v]), static_cast<std::uint32_t>(v));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const auto ix = enc.element_leaf[x], iy = enc.element_leaf[y], ixy = enc.element_leaf[g.mul(x, y)];
      const auto left = enc.gadget_leaf(ix, iy, 0);
      const auto right = enc.gadget_leaf(iy, ix, 1);
      const auto eq = enc.gadget_leaf(ixy, iy, 2);
      graph.edges.emplace_back(static_cast<std::uint32_t>(left), static_cast<std::uint32_t>(right));
      graph.edges.emplace_back(static_cast<std::uint32_t>(right), static_cast<std::uint32_t>(eq));
    }
  graph.normalize();
  return enc;
}

/// Edges joining two vertices at the same depth.
inline std::size_t cross_edge_count(const XEncoding& enc) {
  const auto d = enc.tree.depths();
  std::size_t c = 0;
  for (auto [u, v] : enc.graph.edges) c += d[u] == d[v];
  return c;
}

/// Checks that phi : G -> H is an isomorphism of augmented pairs.
inline bool is_pair_isomorphism(const AugmentedPair& a, const AugmentedPair& b, std::span<const Element> phi) {
  const auto& g = a.group();
  const auto& h = b.group();
  if (!is_isomorphism(g, h, phi)) return false;
  auto maps_onto = [&](const Subgroup& s, const Subgroup& t) {
    if (s.order() != t.order()) return false;
    bool ok = true;
    s.members().for_each([&](Element x) { ok = ok && t.contains(phi[x]); });
    return ok;
  };
  if (!maps_onto(a.p1, b.p1)) return false;
  if (a.s2.chain.size() != b.s2.chain.size()) return false;
  for (std::size_t i = 0; i < a.s2.chain.size(); ++i)
    if (!maps_onto(a.s2.chain[i], b.s2.chain[i])) return false;
  if (a.g.elems.size() != b.g.elems.size()) return false;
  for (std::size_t i = 0; i < a.g.elems.size(); ++i)
    if (phi[a.g.elems[i]] != b.g.elems[i]) return false;
  return true;
}

/// True iff f is a color-, adjacency- and root-preserving bijection a -> b.
inline bool is_graph_isomorphism(const ColoredGraph& a, const ColoredGraph& b, std::span<const std::uint32_t> f) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size() || f.size() != a.vertex_count) return false;
  if (a.vertex_count && f[a.root] != b.root) return false;
  std::vector<bool> hit(b.vertex_count, false);
  for (std::size_t v = 0; v < a.vertex_count; ++v) {
    if (f[v] >= b.vertex_count || hit[f[v]] || a.colors[v] != b.colors[f[v]]) return false;
    hit[f[v]] = true;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mapped;
  mapped.reserve(a.edges.size());
  for (auto [u, v] : a.edges) {
    auto x = f[u], y = f[v];
    if (x > y) std::swap(x, y);
    mapped.emplace_back(x, y);
  }
  std::sort(mapped.begin(), mapped.end());
  auto target = b.edges;
  for (auto& [u, v] : target)
    if (u > v) std::swap(u, v);
  std::sort(target.begin(), target.end());
  return mapped == target;
}

/// X(phi) = phi|P1 ⊙ phi|P2 ⊙ phi|P1 ⊙ phi|P2 ⊙ id_M as a vertex map. Each
/// vertex follows its first gadget leaf to the image leaf, then climbs back to
/// its own depth.
inline std::vector<std::uint32_t> apply_X_to_iso(const AugmentedPair& a, const XEncoding& xa, const AugmentedPair& b,
                                                 const XEncoding& xb, std::span<const Element> phi) {
  if (!is_pair_isomorphism(a, b, phi)) throw Error(ErrorKind::NotPairIso, "phi is not an augmented-pair isomorphism");
  const auto& ta = xa.tree;
  const auto depth_a = ta.depths();
  const auto depth_b = xb.tree.depths();
  const auto n = xa.n;

  // Representative gadget leaf below every vertex.
  std::vector<std::size_t> leaf_pos_of(ta.size(), SIZE_MAX), rep(ta.size(), SIZE_MAX);
  for (std::size_t i = 0; i < ta.leaves.size(); ++i) leaf_pos_of[ta.leaves[i]] = i;
  for (std::size_t i = 0; i < ta.leaves.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(ta.leaves[i]);
    while (v >= 0 && rep[static_cast<std::size_t>(v)] == SIZE_MAX) {
      rep[static_cast<std::size_t>(v)] = i;
      v = ta.parent[static_cast<std::size_t>(v)];
    }
  }
  std::vector<std::uint32_t> f(ta.size());
  for (std::size_t v = 0; v < ta.size(); ++v) {
    const auto pos = rep[v];
    const auto t = pos % 3;
    const auto i = (pos / 3) / n, j = (pos / 3) % n;
    const auto x = xa.leaf_element[i], y = xa.leaf_element[j];
    std::size_t w = xb.gadget_leaf(xb.element_leaf[phi[x]], xb.element_leaf[phi[y]], t);
    while (depth_b[w] > depth_a[v]) w = static_cast<std::size_t>(xb.tree.parent[w]);
    f[v] = static_cast<std::uint32_t>(w);
  }
  if (!is_graph_isomorphism(xa.graph, xb.graph, f))
    throw Error(ErrorKind::WitnessVerificationFailed, "X(phi) is not a graph isomorphism");
  return f;
}

/// Reconstruction of an augmented pair from an encoded graph. Elements are
/// numbered by increasing vertex index of their first-copy tree node.
struct DecodedPair {
  GroupTable table;
  ElementSet p1;
  std::vector<ElementSet> series;  // series[k] = image of P2,k
  std::vector<Element> g;
  std::vector<std::size_t> element_vertex;

  /// Rebuilds an AugmentedPair that refers to `table` (which must outlive it).
  AugmentedPair pair() const {
    AugmentedPair out;
    out.p1 = Subgroup(table, p1);
    for (const auto& s : series) out.s2.chain.emplace_back(table, s);
    out.g.elems = g;
    return out;
  }
};

/// Y: recovers the group, P1, the series and g purely from graph structure.
inline DecodedPair decode_Y(const ColoredGraph& a, std::size_t ell, std::size_t m) {
  auto fail = [](const std::string& probe) -> Error { return Error(ErrorKind::MalformedEncoding, probe); };
  const auto nv = a.vertex_count;
  std::size_t root = nv;
  for (std::size_t v = 0; v < nv; ++v)
    if (a.colors[v] == color::kRoot) {
      if (root != nv) throw fail("root color is not unique");
      root = v;
    }
  if (root == nv) throw fail("no root-colored vertex");

  const auto adj = a.adjacency();
  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> depth(nv, kUnset), parent(nv, kUnset);
  std::vector<std::size_t> queue{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto w : adj[u])
      if (depth[w] == kUnset) {
        depth[w] = depth[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
  }
  if (queue.size() != nv) throw fail("graph is disconnected");
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == root) continue;
    std::size_t ups = 0;
    for (auto w : adj[v]) ups += depth[w] + 1 == depth[v];
    if (ups != 1) throw fail("vertex " + std::to_string(v) + " does not have exactly one parent");
  }

  const auto elem_depth = ell + m;
  const auto gadget_depth = 2 * elem_depth + 1;
  auto ancestor = [&](std::size_t v, std::size_t d) {
    while (depth[v] > d) v = parent[v];
    return v;
  };

  DecodedPair out;
  std::vector<std::size_t> elements;
  for (std::size_t v = 0; v < nv; ++v)
    if (depth[v] == elem_depth) elements.push_back(v);
  const auto n = elements.size();
  if (n == 0) throw fail("no vertices at element depth");
  std::vector<std::size_t> label(nv, kUnset);
  for (std::size_t i = 0; i < n; ++i) label[elements[i]] = i;
  out.element_vertex = elements;

  // Multiplication via W-sequences: every right-colored gadget leaf sits on
  // exactly one (left, right, equals) path.
  std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n, -1));
  std::size_t rules = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (depth[v] > gadget_depth) throw fail("vertex deeper than the gadget level");
    if (depth[v] != gadget_depth || a.colors[v] != color::kRight) continue;
    std::size_t left = kUnset, eq = kUnset, lefts = 0, eqs = 0;
    for (auto w : adj[v]) {
      if (depth[w] != gadget_depth) continue;
      if (a.colors[w] == color::kLeft) left = w, ++lefts;
      if (a.colors[w] == color::kEquals) eq = w, ++eqs;
    }
    if (lefts != 1 || eqs != 1) throw fail("missing W-sequence at right gadget " + std::to_string(v));
    const auto x = label[ancestor(left, elem_depth)];
    const auto y = label[ancestor(v, elem_depth)];
    const auto z = label[ancestor(eq, elem_depth)];
    if (raw[x][y] != -1) throw fail("two W-sequences for one product");
    raw[x][y] = static_cast<std::int64_t>(z);
    ++rules;
  }
  if (rules != n * n) throw fail("W-sequence count is not n^2");
  std::vector<std::vector<Element>> tbl(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) tbl[x][y] = static_cast<Element>(raw[x][y]);
  try {
    out.table = validate_table(tbl);
  } catch (const Error& e) {
    throw fail(std::string("decoded table is not a group: ") + e.what());
  }
  const auto& grp = out.table;

  out.p1 = ElementSet(n);
  for (std::size_t i = 0; i < n; ++i)
    if (m == 0 || a.colors[elements[i]] == color::kSecondIdentity) out.p1.insert(static_cast<Element>(i));

  const auto e_vertex = elements[grp.identity()];
  for (std::size_t k = 0; k <= m; ++k) {
    const auto anchor = ancestor(e_vertex, elem_depth - k);
    ElementSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (ancestor(elements[i], elem_depth - k) == anchor) s.insert(static_cast<Element>(i));
    out.series.push_back(std::move(s));
  }

  // Ranks from the P1-level colors above each P1 element.
  std::vector<std::int64_t> by_rank(out.p1.count(), -1);
  bool ranks_ok = true;
  out.p1.for_each([&](Element x) {
    const auto c = a.colors[ancestor(elements[x], ell)];
    if (c < color::kRankBase || c - color::kRankBase >= by_rank.size() || by_rank[c - color::kRankBase] != -1) {
      ranks_ok = false;
      return;
    }
    by_rank[c - color::kRankBase] = x;
  });
  if (!ranks_ok) throw fail("P1 rank colors are not a permutation");
  const Subgroup p1(grp, out.p1);
  if (!(subgroup_closure(grp, out.p1.members()) == p1)) throw fail("P1 image is not a subgroup");
  std::vector<Element> prefix;
  for (std::size_t r = 1; r < by_rank.size(); ++r) {
    if (subgroup_closure(grp, prefix).order() == p1.order()) break;
    prefix.push_back(static_cast<Element>(by_rank[r]));
  }
  out.g = prefix;

  std::vector<Subgroup> chain;
  for (const auto& s : out.series) chain.emplace_back(grp, s);
  if (!is_composition_series(chain)) throw fail("decoded series is not a composition series");
  return out;
}

}  // namespace solviso
