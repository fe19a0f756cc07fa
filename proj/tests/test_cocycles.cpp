#include <doctest.h>

#include <map>

#include "knotcocycle/coboundary.hpp"
#include "knotcocycle/fixtures.hpp"

using namespace kc;

namespace {

const std::string dir = KC_FIXTURE_DIR;

const GermSum& alpha() {
  static const GermSum a = alpha31(dir);
  return a;
}

const std::vector<Germ>& rot(const std::string& name) {
  static std::map<std::string, std::vector<Germ>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const RotationSettings rs = rotation_settings(dir);
  KnotFixture k = load_knot(dir + "/knots/" + name + ".json");
  PolyKnot p = perturbed(knot_polygon(k), rs.seed, rs.eps);
  return cache[name] = rot_loop(p, rs.samples).germs;
}

// Walks away from g, traverses a meridian based elsewhere, and walks back:
// a closed loop with no special structure at g.
std::vector<Germ> lasso(const Meridian& m, Rng& rng) {
  std::vector<Germ> out, path;
  GaussDiagram g = m.germs.front().from;
  for (int i = 0; i < 3; ++i) {
    auto mv = random_move(g, rng, g.degree() + 2);
    if (!mv) break;
    path.push_back(make_germ(g, *mv));
    g = path.back().to;
  }
  auto back = reversed(path);
  out.insert(out.end(), back.begin(), back.end());
  out.insert(out.end(), m.germs.begin(), m.germs.end());
  out.insert(out.end(), path.begin(), path.end());
  return out;
}

}  // namespace

TEST_CASE("alpha31 fixture") {
  const GermSum& a = alpha();
  CHECK(a.size() == 4);
  CHECK(a.begin()->first.kind == GermKind::Delta);
  auto r = verify_cocycle(a, 3);
  CHECK(r.pass());
  CHECK_FALSE(r.trivial);
  auto rr = verify_cocycle(reversed(a), 3);
  CHECK(rr.pass());
  CHECK_FALSE(rr.trivial);
  // A single flipped coefficient breaks it.
  GermSum broken = a;
  broken.add(a.begin()->first, -2);
  CHECK_FALSE(verify_cocycle(broken, 3).pass());
}

TEST_CASE("coboundaries are trivial cocycles") {
  for (int deg = 1; deg <= 3; ++deg)
    for (const auto& A : enumerate_arrow_diagrams(deg)) {
      auto r = verify_cocycle(d(A).total(), 3);
      CHECK(r.pass());
      CHECK(r.trivial);
    }
}

TEST_CASE("v2 on the knot fixtures and under R-moves") {
  const std::map<std::string, int> expected{{"unknot", 0}, {"trefoil", 1}, {"figure8", -1}, {"trefoil_sum", 2}};
  Rng rng(21);
  for (const auto& [name, value] : expected) {
    auto k = load_knot(dir + "/knots/" + name + ".json");
    CHECK(v2(k.diagram) == value);
    for (int i = 0; i < 20; ++i) CHECK(v2(random_walk(k.diagram, rng, 6, k.diagram.degree() + 4)) == value);
  }
}

TEST_CASE("loop evaluation basics") {
  Rng rng(22);
  const auto g = GaussDiagram::parse("3; T1 T2 H1 T3 H2 H3; +++");
  CHECK(evaluate_loop(alpha(), do_undo(g, r3({0, 2, 4}))) == 0);
  CHECK(evaluate_loop(alpha(), std::vector<Germ>{}) == 0);
  std::vector<Germ> open{make_germ(g, r3({0, 2, 4}))};
  CHECK_THROWS_AS(evaluate_loop(alpha(), open), std::invalid_argument);

  const auto& loop = rot("trefoil");
  Rational v = evaluate_loop(alpha(), loop);
  CHECK(evaluate_loop(alpha(), reversed(loop)) == -v);
  auto twice = loop;
  twice.insert(twice.end(), loop.begin(), loop.end());
  CHECK(evaluate_loop(alpha(), twice) == 2 * v);
  CHECK(evaluate_loop(d(ArrowDiagram::parse("T1 H2 T3 H1 T2 H3").canonical()).total(), loop) == 0);
}

TEST_CASE("alpha31 vanishes on meridians") {
  for (const auto& m : enumerate_cube_meridians(0)) CHECK(evaluate_loop(alpha(), m.germs) == 0);
  for (const auto& m : enumerate_quadruple_meridians()) CHECK(evaluate_loop(alpha(), m.germs) == 0);
  auto by = enumerate_cube_meridians(1);
  for (std::size_t i = 0; i < by.size(); i += 37) CHECK(evaluate_loop(alpha(), by[i].germs) == 0);
}

TEST_CASE("cohomologous formulas agree on closed loops") {
  Rng rng(23);
  const GermSum shifted = alpha() + d(ArrowDiagram::parse("T1 T2 H1 T3 H2 H3").canonical()).total();
  for (const std::string name : {"unknot", "trefoil", "figure8"})
    CHECK(evaluate_loop(shifted, rot(name)) == evaluate_loop(alpha(), rot(name)));
  auto ms = enumerate_cube_meridians(1);
  std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
  for (int i = 0; i < 50; ++i) {
    auto l = lasso(ms[pick(rng)], rng);
    REQUIRE(closed(l));
    CHECK(evaluate_loop(shifted, l) == evaluate_loop(alpha(), l));
  }
}

TEST_CASE("rotation loops") {
  const std::map<std::string, int> expected{{"unknot", 0}, {"trefoil", 1}, {"figure8", -1}, {"trefoil_sum", 2}};
  for (const auto& [name, value] : expected) {
    const auto& loop = rot(name);
    CHECK(closed(loop));
    CHECK(evaluate_loop(alpha(), loop) == -value);
  }
}

TEST_CASE("do-undo insertion leaves the value unchanged") {
  Rng rng(24);
  auto loop = rot("trefoil");
  const Rational v = evaluate_loop(alpha(), loop);
  std::uniform_int_distribution<std::size_t> at(0, loop.size());
  for (int i = 0; i < 10; ++i) {
    loop = insert_do_undo(loop, at(rng), rng, 12);
    REQUIRE(closed(loop));
    CHECK(evaluate_loop(alpha(), loop) == v);
  }
}

TEST_CASE("serial and parallel rotation loops agree") {
  const PolyKnot k = perturbed(long_knot(trefoil_polygon(90)), 1, 1e-3);
  auto a = rot_loop(k, 512, false), b = rot_loop(k, 512, true);
  REQUIRE(a.germs.size() == b.germs.size());
  for (std::size_t i = 0; i < a.germs.size(); ++i) CHECK(a.germs[i].to == b.germs[i].to);
  CHECK(evaluate_loop(alpha(), a.germs, false) == evaluate_loop(alpha(), b.germs, true));
}
