#include <gtest/gtest.h>

#include "support.hpp"

namespace solviso {
namespace {

TEST(Sylow, SubgroupHasFullPrimePower) {
  for (const auto& g : solvable_corpus(64))
    for (const auto& pp : factorize(g.table.order())) {
      const auto s = sylow_subgroup(g.table, pp.prime);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < pp.exponent; ++i) expected *= pp.prime;
      EXPECT_EQ(s.order(), expected) << g.name << " p=" << pp.prime;
    }
}

TEST(Sylow, NoSuchPrime) {
  const auto g = cyclic(6);
  try {
    sylow_subgroup(g, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchPrime);
  }
}

TEST(Sylow, S3ThreeSylowTwos) {
  const auto s3 = dihedral(6);
  EXPECT_EQ(all_sylow_subgroups(s3, 2).size(), 3u);
  EXPECT_EQ(all_sylow_subgroups(s3, 3).size(), 1u);
}

TEST(Sylow, AllSubgroupsMatchLattice) {
  for (const auto& g : solvable_corpus(24)) {
    const auto lattice = testing::subgroup_lattice(g.table);
    for (const auto& pp : factorize(g.table.order())) {
      const auto want = sylow_subgroup(g.table, pp.prime).order();
      std::set<std::set<Element>> expected;
      for (const auto& s : lattice)
        if (s.size() == want) expected.insert(s);
      std::set<std::set<Element>> got;
      for (const auto& s : all_sylow_subgroups(g.table, pp.prime)) got.insert(testing::as_set(s));
      EXPECT_EQ(got, expected) << g.name << " p=" << pp.prime;
      EXPECT_EQ(got.size() % pp.prime, 1u % pp.prime);
    }
  }
}

TEST(SylowBasis, PairwisePermutableOnSolvable) {
  for (const auto& g : solvable_corpus(64)) {
    const auto basis = sylow_basis(g.table);
    EXPECT_EQ(basis.entries.size(), factorize(g.table.order()).size()) << g.name;
    for (std::size_t i = 0; i < basis.entries.size(); ++i)
      for (std::size_t j = i + 1; j < basis.entries.size(); ++j)
        EXPECT_TRUE(permutable(basis.entries[i].subgroup, basis.entries[j].subgroup)) << g.name;
  }
}

TEST(SylowBasis, FailsExactlyOnNonSolvable) {
  for (const auto& g : nonsolvable_corpus()) {
    try {
      sylow_basis(g.table);
      ADD_FAILURE() << g.name;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotSolvable) << g.name;
    }
  }
}

TEST(SylowBasis, AllBasesConjugateAndBounded) {
  for (const auto& g : solvable_corpus(24)) {
    const auto& t = g.table;
    const auto bases = all_sylow_bases(t);
    EXPECT_LE(bases.size(), t.order());
    ASSERT_FALSE(bases.empty());
    for (std::size_t i = 1; i < bases.size(); ++i) {
      bool found = false;
      for (Element x = 0; x < t.order() && !found; ++x) found = conjugate_basis(bases[0], x) == bases[i];
      EXPECT_TRUE(found) << g.name << " basis " << i;
    }
    // Every conjugate of a basis is listed.
    for (Element x = 0; x < t.order(); ++x)
      EXPECT_NE(std::find(bases.begin(), bases.end(), conjugate_basis(bases[0], x)), bases.end()) << g.name;
  }
}

TEST(SylowBasis, KnownCounts) {
  EXPECT_EQ(all_sylow_bases(cyclic(6)).size(), 1u);
  EXPECT_EQ(all_sylow_bases(dihedral(6)).size(), 3u);
  EXPECT_EQ(all_sylow_bases(alternating(4)).size(), 4u);
}

TEST(Normalizer, MatchesNaive) {
  for (const auto& g : solvable_corpus(24)) {
    const auto& t = g.table;
    if (t.order() == 1) continue;
    const auto p = sylow_subgroup(t, smallest_prime_divisor(t.order()));
    const auto members = testing::as_set(p);
    std::set<Element> expected;
    for (Element x = 0; x < t.order(); ++x) {
      std::set<Element> conj;
      for (auto y : members) conj.insert(t.conjugate(x, y));
      if (conj == members) expected.insert(x);
    }
    EXPECT_EQ(testing::as_set(normalizer(p)), expected) << g.name;
  }
}

}  // namespace
}  // namespace solviso
