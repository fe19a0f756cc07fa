#include <doctest.h>

#include <set>

#include "knotcocycle/germs.hpp"
#include "knotcocycle/random.hpp"

using namespace kc;

namespace {

const std::array<int, 3> kSeedEdges{0, 2, 4};

GaussDiagram seed() { return GaussDiagram::parse("3; T1 T2 H1 T3 H2 H3; +++"); }

std::vector<int> sign_vector(int mask, int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
  return s;
}

}  // namespace

TEST_CASE("edge data") {
  auto a = ArrowDiagram::parse("T1 T2 H1 T3 H2 H3");
  auto e0 = edge_data(a, 0);
  CHECK(e0.eta == 1);
  CHECK(e0.up == 0);
  CHECK(e0.epsilon == 1);
  auto e2 = edge_data(a, 2);
  CHECK(e2.up == 1);
  CHECK(e2.epsilon == -1 * e2.eta);
  CHECK_THROWS(edge_data(ArrowDiagram::parse("T1 H1"), 0));
  CHECK_THROWS(edge_data(a, 5));
}

TEST_CASE("births on the empty diagram") {
  CHECK(enumerate_moves(GaussDiagram(), MoveKind::R1Birth).size() == 4);
  CHECK(enumerate_moves(GaussDiagram(), MoveKind::R2Birth).size() == 8);
  CHECK(enumerate_moves(GaussDiagram(), MoveKind::R3).empty());
}

TEST_CASE("seed R3 move") {
  auto g = seed();
  CHECK(validate_r3(g, kSeedEdges));
  CHECK(apply_move(g, r3(kSeedEdges)).to_string() == "3; T1 T2 T3 H2 H3 H1; +++");
  for (int id = 0; id < 3; ++id) CHECK_FALSE(validate_r3(g.with_sign(id, -g.sign(id)), kSeedEdges));
  CHECK_THROWS(validate_r3(g, {0, 1, 4}));
}

TEST_CASE("cube walk keeps the seed valid") {
  auto cube = r3_cube(seed(), kSeedEdges);
  REQUIRE(cube.size() == 8);
  std::set<ArrowDiagram> shapes;
  for (const auto& g : cube) {
    CHECK(validate_r3(g, kSeedEdges));
    shapes.insert(g.arrows());
    for (int id = 0; id < 3; ++id) CHECK_FALSE(validate_r3(g.with_sign(id, -g.sign(id)), kSeedEdges));
  }
  CHECK(shapes.size() == 8);
}

TEST_CASE("every triangle of the right shape has exactly two valid sign patterns") {
  for (int degree = 3; degree <= 4; ++degree) {
    for (const auto& a : enumerate_arrow_diagrams(degree)) {
      for (const auto& t : triangles(a)) {
        if (!r3_shape(a, t)) continue;
        int valid = 0;
        for (int mask = 0; mask < (1 << degree); ++mask) {
          GaussDiagram g(a, sign_vector(mask, degree));
          if (!validate_r3(g, t.edges)) continue;
          ++valid;
          // The move is an involution on valid triangles.
          auto r = apply_move_raw(g, r3(t.edges));
          CHECK(validate_r3(r.diagram, t.edges));
          CHECK(apply_move_raw(r.diagram, r3(t.edges)).diagram == g);
        }
        CHECK(valid == 2 << (degree - 3));
      }
    }
  }
}

TEST_CASE("R2 death needs opposite signs") {
  auto g = GaussDiagram::parse("2; T1 T2 H1 H2; +-");
  CHECK(applicable(g, r2_death(0, 1)));
  CHECK_FALSE(applicable(g.with_sign(1, 1), r2_death(0, 1)));
  CHECK(apply_move(g, r2_death(0, 1)) == GaussDiagram());
}

TEST_CASE("moves are undone by their inverses") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_gauss_diagram(rng, 1 + trial % 4);
    for (const auto& m : enumerate_all_moves(g)) {
      auto raw = apply_move_raw(g, m);
      CHECK(apply_move_raw(raw.diagram, inverse_move(g, m)).diagram.canonical() == g);
      CHECK(apply_move(apply_move(g, m), inverse_move_canonical(g, m)) == g);
    }
  }
}
