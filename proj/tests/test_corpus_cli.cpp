#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

namespace solviso {
namespace {

std::size_t exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

TEST(Families, CyclicTable) {
  const auto g = make_family("cyclic", {"6"});
  for (Element i = 0; i < 6; ++i)
    for (Element j = 0; j < 6; ++j) EXPECT_EQ(g.mul(i, j), (i + j) % 6);
}

TEST(Families, Heisenberg3) {
  const auto g = make_family("heisenberg", {"3"});
  EXPECT_EQ(g.order(), 27u);
  EXPECT_EQ(exponent(g), 3u);
  EXPECT_FALSE(is_abelian(g));
}

TEST(Families, Semidirect) {
  const auto g = make_family("semidirect", {"3", "7"});
  EXPECT_EQ(g.order(), 21u);
  EXPECT_FALSE(is_abelian(g));
  try {
    make_family("semidirect", {"5", "7"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
}

TEST(Families, OrdersAndShapes) {
  EXPECT_EQ(make_family("elemabelian", {"2", "3"}).order(), 8u);
  EXPECT_EQ(make_family("dihedral", {"10"}).order(), 10u);
  EXPECT_FALSE(is_abelian(make_family("dihedral", {"10"})));
  const auto q8 = make_family("quaternion8", {});
  EXPECT_EQ(exponent(q8), 4u);
  std::size_t involutions = 0;
  for (Element x = 0; x < 8; ++x) involutions += q8.element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(special_linear2(5).order(), 120u);
  EXPECT_EQ(alternating(5).order(), 60u);
}

TEST(Families, BadParams) {
  for (const auto& [family, params] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"cyclic", {"0"}},
           {"cyclic", {"x"}},
           {"dihedral", {"7"}},
           {"elemabelian", {"4", "2"}},
           {"heisenberg", {"4"}},
           {"quaternion8", {"8"}},
           {"nosuch", {}}}) {
    try {
      make_family(family, params);
      ADD_FAILURE() << family;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadParams) << family;
    }
  }
}

TEST(Corpus, EveryTableValidAndSolvable) {
  const auto corpus = solvable_corpus(64, true);
  EXPECT_GE(corpus.size(), 30u);
  for (const auto& g : corpus) {
    EXPECT_TRUE(is_solvable(g.table)) << g.name;
    EXPECT_EQ(validate_table(g.table.rows()), g.table);
  }
  for (const auto& g : nonsolvable_corpus()) EXPECT_FALSE(is_solvable(g.table)) << g.name;
}

TEST(Corpus, ClassificationSpotChecks) {
  EXPECT_FALSE(generator_enumeration_iso(cyclic(4), elementary_abelian(2, 2)));
  std::vector<GroupTable> eight{cyclic(8), direct_product(cyclic(4), cyclic(2)), elementary_abelian(2, 3), dihedral(8),
                                quaternion8()};
  for (std::size_t i = 0; i < eight.size(); ++i)
    for (std::size_t j = 0; j < eight.size(); ++j) {
      EXPECT_EQ(generator_enumeration_iso(eight[i], eight[j]).has_value(), i == j);
      EXPECT_EQ(solvable_iso(eight[i], eight[j]).has_value(), i == j);
    }
}

TEST(CayleyIo, RoundTrip) {
  for (const auto& g : solvable_corpus(27)) EXPECT_EQ(parse_cayley(to_cayley(g.table)), g.table) << g.name;
  EXPECT_EQ(to_cayley(cyclic(2)), "2\n1 2\n2 1\n");
}

TEST(CayleyIo, Errors) {
  auto kind = [](const std::string& text) {
    try {
      parse_cayley(text);
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << text;
    return ErrorKind::BadParams;
  };
  EXPECT_EQ(kind(""), ErrorKind::ParseError);
  EXPECT_EQ(kind("2\n1 2\n2"), ErrorKind::ParseError);
  EXPECT_EQ(kind("2\n1 2\n2 x"), ErrorKind::ParseError);
  EXPECT_EQ(kind("2\n1 3\n2 1"), ErrorKind::ParseError);
  EXPECT_EQ(kind("2\n1 2\n2 1\n7"), ErrorKind::ParseError);
  EXPECT_EQ(kind("2\n1 1\n2 2"), ErrorKind::NotLatinSquare);
}

TEST(Bench, EmptyCorpusIsHeaderOnly) {
  std::ostringstream out;
  write_bench_csv(out, run_bench(std::vector<NamedGroup>{}));
  EXPECT_EQ(out.str(), std::string(kBenchHeader) + "\n");
}

TEST(Bench, UpToSixteenAgreesAndIsDeterministic) {
  const auto a = run_bench(16);
  const auto b = run_bench(16);
  ASSERT_EQ(a.size(), b.size());
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].stats.series, b[i].stats.series);
    EXPECT_EQ(a[i].stats.sequences, b[i].stats.sequences);
    EXPECT_EQ(a[i].stats.canon_nodes, b[i].stats.canon_nodes);
    pairs += a[i].algo == "hybrid";
  }
  std::size_t expected = 0;
  const auto corpus = solvable_corpus(16, true);
  for (const auto& x : corpus)
    for (const auto& y : corpus) expected += x.table.order() == y.table.order();
  EXPECT_EQ(pairs, expected);
}

TEST(Bench, ReflexiveOnZ2To6) {
  std::vector<NamedGroup> corpus;
  corpus.push_back({"Z2^6", elementary_abelian(2, 6)});
  const auto records = run_bench(corpus);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_TRUE(records[0].isomorphic);
  EXPECT_TRUE(records[1].isomorphic);
  EXPECT_EQ(records[0].algo, "hybrid");
  EXPECT_EQ(records[1].algo, "genenum");
}

}  // namespace
}  // namespace solviso
