#include <gtest/gtest.h>

#include "support.hpp"

namespace solviso {
namespace {

std::vector<std::vector<Element>> rows_of(const GroupTable& g) { return g.rows(); }

ErrorKind kind_of(const std::vector<std::vector<Element>>& raw) {
  try {
    validate_table(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "table accepted";
  return ErrorKind::ParseError;
}

TEST(ValidateTable, AcceptsCorpus) {
  for (const auto& g : solvable_corpus(64)) EXPECT_EQ(validate_table(rows_of(g.table)), g.table) << g.name;
}

TEST(ValidateTable, Z2Example) {
  const auto g = validate_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inverse(1), 1u);
}

TEST(ValidateTable, RejectsEachAxiom) {
  EXPECT_EQ(kind_of({}), ErrorKind::ParseError);
  EXPECT_EQ(kind_of({{0, 1}, {1}}), ErrorKind::ParseError);
  EXPECT_EQ(kind_of({{0, 2}, {1, 0}}), ErrorKind::ParseError);
  EXPECT_EQ(kind_of({{0, 0}, {1, 1}}), ErrorKind::NotLatinSquare);
  EXPECT_EQ(kind_of({{0, 1}, {0, 1}}), ErrorKind::NotLatinSquare);
  // Latin square with identity 0 but not associative: a loop of order 5.
  EXPECT_EQ(kind_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
            ErrorKind::NonAssociative);
  // Latin square without a two-sided identity.
  EXPECT_EQ(kind_of({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), ErrorKind::NoIdentity);
}

TEST(ValidateTable, RejectsSwappedEntries) {
  for (const auto& g : solvable_corpus(16)) {
    if (g.table.order() < 3) continue;
    auto raw = rows_of(g.table);
    std::swap(raw[1][0], raw[1][1]);
    EXPECT_THROW(validate_table(raw), Error) << g.name;
  }
}

TEST(Subgroup, ClosureMatchesNaive) {
  std::mt19937_64 rng(3);
  for (const auto& g : solvable_corpus(32)) {
    const auto& t = g.table;
    for (int trial = 0; trial < 10; ++trial) {
      std::set<Element> seed;
      for (int i = 0; i < 2; ++i) seed.insert(static_cast<Element>(rng() % t.order()));
      const std::vector<Element> s(seed.begin(), seed.end());
      EXPECT_EQ(testing::as_set(subgroup_closure(t, s)), testing::naive_closure(t, seed)) << g.name;
    }
  }
}

TEST(Subgroup, JoinMatchesClosure) {
  const auto g = dihedral(12);
  const auto h = subgroup_closure(g, {2});
  const Element extra[] = {6};
  const Element h_gens[] = {2};
  EXPECT_EQ(join(h, h_gens, extra), subgroup_closure(g, {2, 6}));
}

TEST(Subgroup, NormalityExamples) {
  const auto s3 = dihedral(6);
  const auto rot = subgroup_closure(s3, {1});
  const auto refl = subgroup_closure(s3, {3});
  EXPECT_TRUE(is_normal(rot, Subgroup::whole(s3)));
  EXPECT_FALSE(is_normal(refl, Subgroup::whole(s3)));
  EXPECT_THROW(is_normal(Subgroup::whole(s3), rot), Error);
}

TEST(DerivedSeries, KnownGroups) {
  EXPECT_EQ(derived_series(symmetric(4)).size(), 4u);  // S4 > A4 > V4 > 1
  EXPECT_EQ(derived_series(symmetric(4))[1].order(), 12u);
  EXPECT_EQ(derived_series(cyclic(7)).size(), 2u);
  EXPECT_TRUE(is_solvable(symmetric(4)));
  EXPECT_FALSE(is_solvable(alternating(5)));
  EXPECT_FALSE(is_solvable(special_linear2(5)));
  EXPECT_EQ(derived_series(alternating(5)).back().order(), 60u);
}

TEST(DerivedSeries, CommutatorMatchesNaive) {
  for (const auto& g : solvable_corpus(24)) {
    const auto& t = g.table;
    std::set<Element> comms;
    for (Element a = 0; a < t.order(); ++a)
      for (Element b = 0; b < t.order(); ++b) comms.insert(t.mul(t.mul(a, b), t.mul(t.inverse(a), t.inverse(b))));
    EXPECT_EQ(testing::as_set(commutator_subgroup(Subgroup::whole(t))), testing::naive_closure(t, comms)) << g.name;
  }
}

TEST(Factorize, Basics) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, 2u);
  EXPECT_EQ(f[0].exponent, 3u);
  EXPECT_EQ(f[2].prime, 5u);
  EXPECT_EQ(smallest_prime_divisor(49), 7u);
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(1));
}

TEST(Relabel, PreservesStructure) {
  std::mt19937_64 rng(5);
  for (const auto& g : solvable_corpus(32)) {
    const auto perm = testing::random_permutation(g.table.order(), rng);
    const auto h = relabel(g.table, perm);
    EXPECT_TRUE(is_isomorphism(g.table, h, perm)) << g.name;
    EXPECT_EQ(is_abelian(h), is_abelian(g.table));
  }
}

}  // namespace
}  // namespace solviso
