#include <doctest.h>

#include "knotcocycle/diagram.hpp"

using namespace kc;

TEST_CASE("parse and canonical relabeling") {
  auto a = ArrowDiagram::parse("H3 T1 T3 H1");
  CHECK_FALSE(a.is_canonical());
  CHECK(a.canonical().to_string() == "H1 T2 T1 H2");
  CHECK(a.canonical().is_canonical());
  CHECK_THROWS(ArrowDiagram::parse("T1 T1"));
  CHECK_THROWS(ArrowDiagram::parse("T1 H2"));
  CHECK_THROWS(GaussDiagram::parse("2; T1 H1; +"));
  CHECK_THROWS(GaussDiagram::parse("1; T1 H1; x"));
}

TEST_CASE("trefoil text round trip") {
  auto g = GaussDiagram::parse("3; T1 H2 T3 H1 T2 H3; +++");
  CHECK(g.degree() == 3);
  CHECK(g.sign_product() == 1);
  CHECK(GaussDiagram::parse(g.to_string()) == g);
}

TEST_CASE("interleaving, isolation and R2 pairs") {
  auto a = ArrowDiagram::parse("T1 T2 H1 H2 T3 H3");
  CHECK(a.interleaved(0, 1));
  CHECK_FALSE(a.interleaved(0, 2));
  CHECK(a.isolated(2));
  CHECK_FALSE(a.isolated(0));
  auto b = ArrowDiagram::parse("T1 H2 T2 H1");
  CHECK_FALSE(b.r2_pair(0, 1));
  auto c = ArrowDiagram::parse("T1 T2 H1 H2");
  CHECK(c.r2_pair(0, 1));
  CHECK(ArrowDiagram::parse("T1 T2 H2 H1").r2_pair(0, 1));
}

TEST_CASE("subdiagram and completion counts") {
  auto g = GaussDiagram::parse("3; T1 H2 T3 H1 T2 H3; +-+");
  std::size_t n = 0;
  for (const auto& [d, c] : subdiagrams(g)) n += static_cast<std::size_t>(abs(c.get_num().get_si()));
  // Every subset gives a distinct term or a multiplicity.
  CHECK(n == 8);
  CHECK(completions(ArrowDiagram::parse("T1 H2 H1 T2")).size() == 4);
}

TEST_CASE("pairing against the degree-2 arrow diagram") {
  const auto x = ArrowDiagram::parse("T1 H2 H1 T2");
  const auto trefoil = GaussDiagram::parse("3; T1 H2 T3 H1 T2 H3; +++");
  const auto eight = GaussDiagram::parse("4; T1 H2 T3 H4 H1 T2 H3 T4; ++--");
  CHECK(pair(x, trefoil) == 1);
  CHECK(pair(x, GaussDiagram()) == 0);
  // Embedding count and the route through subdiagram sums agree.
  CHECK(pair(x, trefoil) == pair_via_sums(x, trefoil));
  CHECK(pair(x, eight) == pair_via_sums(x, eight));
}

TEST_CASE("subset enumeration") {
  std::vector<int> ids{3, 5, 7, 9};
  int n = 0;
  for_each_subset(ids, 2, [&](const std::vector<int>& s) {
    CHECK(s.size() == 2);
    ++n;
  });
  CHECK(n == 6);
  n = 0;
  for_each_subset(ids, 0, [&](const std::vector<int>&) { ++n; });
  CHECK(n == 1);
  n = 0;
  for_each_subset(ids, 5, [&](const std::vector<int>&) { ++n; });
  CHECK(n == 0);
}
