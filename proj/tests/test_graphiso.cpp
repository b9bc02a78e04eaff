#include <gtest/gtest.h>

#include "support.hpp"

namespace solviso {
namespace {

ColoredGraph relabel_graph(const ColoredGraph& g, const std::vector<Element>& perm) {
  ColoredGraph out;
  out.vertex_count = g.vertex_count;
  out.colors.resize(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) out.colors[perm[v]] = g.colors[v];
  for (auto [u, v] : g.edges) out.edges.emplace_back(perm[u], perm[v]);
  out.root = perm[g.root];
  out.normalize();
  return out;
}

ColoredGraph random_graph(std::size_t n, double density, std::uint32_t colors, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  ColoredGraph g;
  g.vertex_count = n;
  for (std::size_t v = 0; v < n; ++v) g.colors.push_back(static_cast<std::uint32_t>(rng() % colors));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.edges.emplace_back(u, v);
  g.normalize();
  return g;
}

bool brute_graph_iso(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  std::vector<std::uint32_t> f(a.vertex_count);
  std::iota(f.begin(), f.end(), 0);
  do {
    if (is_graph_isomorphism(a, b, f)) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

ColoredGraph cycle(std::size_t n) {
  ColoredGraph g;
  g.vertex_count = n;
  g.colors.assign(n, 1);
  for (std::uint32_t v = 0; v < n; ++v) g.edges.emplace_back(v, static_cast<std::uint32_t>((v + 1) % n));
  g.normalize();
  return g;
}

ColoredGraph petersen() {
  ColoredGraph g;
  g.vertex_count = 10;
  g.colors.assign(10, 1);
  for (std::uint32_t i = 0; i < 5; ++i) {
    g.edges.emplace_back(i, (i + 1) % 5);
    g.edges.emplace_back(i, i + 5);
    g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  g.normalize();
  return g;
}

TEST(Canonize, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + rng() % 7;
    const auto a = random_graph(n, 0.4, 1 + rng() % 3, rng);
    const auto b = trial % 2 ? relabel_graph(a, testing::random_permutation(n, rng)) : random_graph(n, 0.4, 2, rng);
    const bool same = canonize_colored_graph(a).graph == canonize_colored_graph(b).graph;
    EXPECT_EQ(same, brute_graph_iso(a, b)) << "trial " << trial;
  }
}

TEST(Canonize, RelabelingInvariantOnSymmetricGraphs) {
  std::mt19937_64 rng(41);
  for (const auto& g : {cycle(12), petersen(), cycle(5)}) {
    const auto base = dump(canonize_colored_graph(g).graph);
    for (int i = 0; i < 50; ++i) {
      const auto h = relabel_graph(g, testing::random_permutation(g.vertex_count, rng));
      EXPECT_EQ(dump(canonize_colored_graph(h).graph), base);
    }
  }
  EXPECT_FALSE(are_graphs_isomorphic(cycle(10), petersen()).has_value());
}

TEST(Canonize, RelabelingInvariantOnEncodings) {
  std::mt19937_64 rng(43);
  for (const auto& g : solvable_corpus(16)) {
    const auto dec = alpha_split(g.table, sylow_basis(g.table), 2);
    const AugmentedPair pair{dec.p1, first_composition_series(dec.p2), greedy_generating_sequence(dec.p1)};
    const auto enc = build_X(pair);
    const auto base = dump(canonize_colored_graph(enc.graph).graph);
    for (int i = 0; i < 100; ++i) {
      const auto h = relabel_graph(enc.graph, testing::random_permutation(enc.graph.vertex_count, rng));
      ASSERT_EQ(dump(canonize_colored_graph(h).graph), base) << g.name;
    }
  }
}

TEST(Canonize, ColorsMatter) {
  auto a = cycle(4);
  auto b = cycle(4);
  a.colors[0] = 2;
  b.colors[0] = 3;
  EXPECT_FALSE(are_graphs_isomorphic(a, b).has_value());
  b.colors[0] = 2;
  b = relabel_graph(b, {2, 3, 0, 1});
  const auto f = are_graphs_isomorphic(a, b);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_graph_isomorphism(a, b, *f));
}

TEST(Canonize, Deterministic) {
  const auto g = petersen();
  const auto a = canonize_colored_graph(g);
  const auto b = canonize_colored_graph(g);
  EXPECT_EQ(a.labeling, b.labeling);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(ColorRefine, StableColoringIsInvariant) {
  std::mt19937_64 rng(47);
  const auto g = random_graph(20, 0.2, 2, rng);
  const auto h = relabel_graph(g, testing::random_permutation(20, rng));
  EXPECT_EQ(refinement_invariant(g), refinement_invariant(h));
}

}  // namespace
}  // namespace solviso
