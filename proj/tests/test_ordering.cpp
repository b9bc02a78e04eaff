#include <gtest/gtest.h>

#include "support.hpp"

namespace solviso {
namespace {

/// Ranks by shortlex-least word, found by listing all words of each length in
/// lexicographic order.
std::vector<Element> brute_shortlex(const Subgroup& p, const GeneratingSequence& gens) {
  const auto& g = p.parent();
  const auto k = gens.elems.size();
  std::vector<Element> order{g.identity()};
  std::set<Element> seen{g.identity()};
  for (std::size_t len = 1; seen.size() < p.order(); ++len) {
    std::vector<std::size_t> word(len, 0);
    for (bool more = k > 0; more;) {
      Element x = g.identity();
      for (auto i : word) x = g.mul(x, gens.elems[i]);
      if (seen.insert(x).second) order.push_back(x);
      std::size_t pos = len;
      while (pos > 0 && ++word[pos - 1] == k) word[--pos] = 0;
      more = pos > 0;
    }
  }
  return order;
}

TEST(WordRanks, MatchesBruteShortlex) {
  for (const auto& g : solvable_corpus(16)) {
    const auto whole = Subgroup::whole(g.table);
    const auto k = minimum_generating_length(whole);
    std::size_t checked = 0;
    enumerate_generating_sequences(whole, k, [&](const GeneratingSequence& seq) {
      EXPECT_EQ(word_ranks(whole, seq).by_rank, brute_shortlex(whole, seq)) << g.name;
      return ++checked < 20;
    });
  }
}

TEST(WordRanks, Z4Example) {
  const auto z4 = cyclic(4);
  const auto ord = word_ranks(Subgroup::whole(z4), {{1}});
  EXPECT_EQ(ord.by_rank, (std::vector<Element>{0, 1, 2, 3}));
  const auto ord3 = word_ranks(Subgroup::whole(z4), {{3}});
  EXPECT_EQ(ord3.by_rank, (std::vector<Element>{0, 3, 2, 1}));
}

TEST(WordRanks, RejectsNonGenerating) {
  const auto z4 = cyclic(4);
  try {
    word_ranks(Subgroup::whole(z4), {{2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotGenerating);
  }
}

TEST(WordRanks, IsomorphismEquivariant) {
  std::mt19937_64 rng(23);
  for (const auto& g : solvable_corpus(32)) {
    const auto n = g.table.order();
    const auto phi = testing::random_permutation(n, rng);
    const auto h = relabel(g.table, phi);
    const auto gens = greedy_generating_sequence(Subgroup::whole(g.table));
    GeneratingSequence image;
    for (auto x : gens.elems) image.elems.push_back(phi[x]);
    const auto rg = word_ranks(Subgroup::whole(g.table), gens);
    const auto rh = word_ranks(Subgroup::whole(h), image);
    for (Element x = 0; x < n; ++x) EXPECT_EQ(rh.rank[phi[x]], rg.rank[x]) << g.name;
  }
}

TEST(GeneratingSequences, GreedyIsIrredundantAndGenerates) {
  for (const auto& g : solvable_corpus(64)) {
    const auto whole = Subgroup::whole(g.table);
    const auto seq = greedy_generating_sequence(whole);
    EXPECT_TRUE(is_irredundant(g.table, seq)) << g.name;
    EXPECT_EQ(word_ranks(whole, seq).by_rank.size(), g.table.order());
  }
}

TEST(GeneratingSequences, EnumerationMatchesBruteForce) {
  for (const auto& g : solvable_corpus(12)) {
    const auto whole = Subgroup::whole(g.table);
    const auto n = g.table.order();
    for (std::size_t k = 0; k <= 3; ++k) {
      std::size_t expected = 0;
      std::vector<std::size_t> idx(k, 0);
      for (bool more = true; more;) {
        GeneratingSequence seq;
        for (auto i : idx) seq.elems.push_back(static_cast<Element>(i));
        if (is_irredundant(g.table, seq) && subgroup_closure(g.table, seq.elems).order() == n) ++expected;
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == n) idx[--pos] = 0;
        more = pos > 0;
      }
      EXPECT_EQ(all_generating_sequences(whole, k).size(), expected) << g.name << " k=" << k;
    }
  }
}

TEST(GeneratingSequences, MinimumLengths) {
  EXPECT_EQ(minimum_generating_length(Subgroup::whole(cyclic(1))), 0u);
  EXPECT_EQ(minimum_generating_length(Subgroup::whole(cyclic(12))), 1u);
  EXPECT_EQ(minimum_generating_length(Subgroup::whole(elementary_abelian(2, 3))), 3u);
  EXPECT_EQ(minimum_generating_length(Subgroup::whole(quaternion8())), 2u);
}

}  // namespace
}  // namespace solviso
