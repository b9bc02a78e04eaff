#include <gtest/gtest.h>

#include <sstream>

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

/// Decoded element index for each original element, matched by vertex.
std::vector<Element> identification(const XEncoding& enc, const DecodedPair& d) {
  std::vector<Element> map(enc.n);
  for (Element x = 0; x < enc.n; ++x) {
    const auto it = std::find(d.element_vertex.begin(), d.element_vertex.end(), enc.element_vertex[x]);
    map[x] = static_cast<Element>(it - d.element_vertex.begin());
  }
  return map;
}

template <class Visit>
void for_each_pair(const GroupTable& g, std::size_t alpha, std::size_t max_pairs, Visit visit) {
  const auto dec = alpha_split(g, sylow_basis(g), alpha);
  std::size_t done = 0;
  for (const auto& s2 : enumerate_composition_series(dec.p2)) {
    for (const auto& seq : all_generating_sequences(dec.p1, minimum_generating_length(dec.p1))) {
      visit(AugmentedPair{dec.p1, s2, seq});
      if (++done >= max_pairs) return;
    }
  }
}

TEST(BuildX, RoundTripThroughY) {
  for (const auto& g : solvable_corpus(32))
    for_each_pair(g.table, 2, 12, [&](const AugmentedPair& pair) {
      const auto enc = build_X(pair);
      const auto d = decode_Y(enc.graph, enc.ell, enc.m);
      const auto back = d.pair();
      EXPECT_TRUE(is_pair_isomorphism(pair, back, identification(enc, d))) << g.name;
      EXPECT_EQ(back.g.elems.size(), pair.g.elems.size());
    });
}

TEST(BuildX, YThenXIsIsomorphic) {
  std::mt19937_64 rng(29);
  for (const auto& g : solvable_corpus(16))
    for_each_pair(g.table, 2, 3, [&](const AugmentedPair& pair) {
      const auto enc = build_X(pair);
      const auto shuffled = relabel_graph(enc.graph, testing::random_permutation(enc.graph.vertex_count, rng));
      const auto d = decode_Y(shuffled, enc.ell, enc.m);
      const auto again = build_X(d.pair());
      EXPECT_TRUE(are_graphs_isomorphic(again.graph, shuffled).has_value()) << g.name;
    });
}

TEST(BuildX, DegreeAndSizeBounds) {
  for (const auto& g : solvable_corpus(32))
    for (std::size_t alpha : {2, 3, 4})
      for_each_pair(g.table, alpha, 2, [&](const AugmentedPair& pair) {
        const auto enc = build_X(pair);
        const auto n = g.table.order();
        EXPECT_LE(enc.graph.max_degree(), std::max<std::size_t>(alpha + 1, 4)) << g.name << " alpha=" << alpha;
        EXPECT_LE(enc.graph.vertex_count, 8 * n * n) << g.name;
        EXPECT_EQ(cross_edge_count(enc), 2 * n * n) << g.name;
      });
}

TEST(BuildX, Z1SingleGadget) {
  const auto z1 = cyclic(1);
  const AugmentedPair pair{Subgroup::whole(z1), CompositionSeries{{Subgroup::trivial(z1)}}, {}};
  const auto enc = build_X(pair);
  EXPECT_EQ(cross_edge_count(enc), 2u);
  const auto d = decode_Y(enc.graph, enc.ell, enc.m);
  EXPECT_EQ(d.table.order(), 1u);
}

TEST(BuildX, RejectsMismatchedProduct) {
  const auto z6 = cyclic(6);
  const auto p1 = subgroup_closure(z6, {2});
  // Both parts contain the subgroup of order 3, so x1 x2 is not unique.
  const auto s2 = enumerate_composition_series(Subgroup::whole(z6)).front();
  try {
    build_X(AugmentedPair{p1, s2, greedy_generating_sequence(p1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProductMismatch);
  }
}

TEST(ApplyX, MapsIsomorphicPairs) {
  std::mt19937_64 rng(31);
  for (const auto& g : solvable_corpus(24)) {
    const auto n = g.table.order();
    const auto phi = testing::random_permutation(n, rng);
    const auto h = relabel(g.table, phi);
    for_each_pair(g.table, 2, 3, [&](const AugmentedPair& a) {
      CompositionSeries s2;
      for (const auto& s : a.s2.chain) {
        ElementSet m(n);
        s.members().for_each([&](Element x) { m.insert(phi[x]); });
        s2.chain.emplace_back(h, m);
      }
      ElementSet p1(n);
      a.p1.members().for_each([&](Element x) { p1.insert(phi[x]); });
      GeneratingSequence seq;
      for (auto x : a.g.elems) seq.elems.push_back(phi[x]);
      const AugmentedPair b{Subgroup(h, p1), s2, seq};
      const auto xa = build_X(a);
      const auto xb = build_X(b);
      const auto f = apply_X_to_iso(a, xa, b, xb, phi);
      EXPECT_TRUE(is_graph_isomorphism(xa.graph, xb.graph, f)) << g.name;
    });
  }
}

TEST(ApplyX, RejectsNonIsomorphism) {
  const auto z4 = cyclic(4);
  const auto whole = Subgroup::whole(z4);
  const AugmentedPair a{whole, CompositionSeries{{Subgroup::trivial(z4)}}, {{1}}};
  const AugmentedPair b{whole, CompositionSeries{{Subgroup::trivial(z4)}}, {{3}}};
  const std::vector<Element> identity{0, 1, 2, 3};
  try {
    apply_X_to_iso(a, build_X(a), b, build_X(b), identity);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPairIso);
  }
}

TEST(Dump, BitExactAndRoundTrips) {
  ColoredGraph g;
  g.vertex_count = 3;
  g.colors = {0, 1, 4};
  g.edges = {{2, 0}, {1, 0}};
  g.root = 0;
  EXPECT_EQ(dump(g), "v 3 root 0\nc 0 0\nc 1 1\nc 2 4\ne 0 1\ne 0 2\n");
  for (const auto& grp : solvable_corpus(8))
    for_each_pair(grp.table, 2, 1, [&](const AugmentedPair& pair) {
      const auto enc = build_X(pair);
      std::istringstream in(dump(enc.graph));
      const auto back = parse_dump(in);
      EXPECT_EQ(dump(back), dump(enc.graph));
    });
}

TEST(DecodeY, RejectsMalformed) {
  const auto z2 = cyclic(2);
  const AugmentedPair pair{Subgroup::whole(z2), CompositionSeries{{Subgroup::trivial(z2)}}, {{1}}};
  const auto enc = build_X(pair);
  auto broken = enc.graph;
  broken.edges.pop_back();
  EXPECT_THROW(decode_Y(broken, enc.ell, enc.m), Error);
  auto recolored = enc.graph;
  for (auto& c : recolored.colors)
    if (c == color::kRoot) c = color::kInternal;
  try {
    decode_Y(recolored, enc.ell, enc.m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedEncoding);
  }
}

}  // namespace
}  // namespace solviso
