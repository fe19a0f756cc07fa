#include <doctest.h>

#include "knotcocycle/fixtures.hpp"

using namespace kc;

TEST_CASE("diagram JSON round trip") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    auto g = random_gauss_diagram(rng, i % 5).canonical();
    CHECK(gauss_from_json(to_json(g)) == g);
    CHECK(gauss_from_json(json::parse(to_json(g).dump())) == g);
    CHECK(arrow_from_json(to_json(g.arrows())) == g.arrows());
  }
  CHECK(gauss_from_json(json("3; T1 H2 T3 H1 T2 H3; +++")) == GaussDiagram::parse("3; T1 H2 T3 H1 T2 H3; +++"));
}

TEST_CASE("malformed diagrams are rejected") {
  CHECK_THROWS_AS(gauss_from_json(json::parse(R"({"word":[{"id":1,"kind":"T"}],"signs":{"1":1}})")), std::invalid_argument);
  CHECK_THROWS(gauss_from_json(json::parse(R"({"word":[{"id":1,"kind":"T"},{"id":1,"kind":"H"}],"signs":{}})")));
  CHECK_THROWS(gauss_from_json(json::parse(R"({"word":[{"id":0,"kind":"T"},{"id":0,"kind":"H"}],"signs":{"0":1}})")));
  CHECK_THROWS(arrow_from_json(json::parse(R"({"degree":2,"word":[{"id":1,"kind":"T"},{"id":1,"kind":"H"}]})")));
  CHECK_THROWS(read_gauss("/nonexistent/knot.json"));
}

TEST_CASE("germs and formulas") {
  for (auto kind : {GermKind::I, GermKind::II, GermKind::Delta, GermKind::Lambda})
    for (const auto& g : enumerate_arrow_germs(kind, 3)) {
      CHECK(germ_from_json(to_json(g)) == g);
      CHECK(parse_germ(g.to_string()) == g);
    }
  // Lambda on the epsilon = -1 side.
  CHECK_THROWS(parse_germ("Lambda[T1 T2 H1 T3 H2 H3 | 1]"));
  CHECK_THROWS(parse_germ("Gamma[T1 H1 | 0]"));

  GermSum s;
  s.add(parse_germ("Lambda[T1 T2 H3 H1 T3 H2 | 1]"), Rational(-3, 2));
  s.add(parse_germ("Delta[H1 T2 H3 H2 T1 T3 | 0 2 4]"), 1);
  CHECK(formula_from_json(to_json(s, 3)) == s);
  CHECK(parse_germ_sum(germ_sum_text(s)) == s);
  CHECK(parse_germ_sum("0").empty());
  CHECK_THROWS(formula_from_json(to_json(s, 2)));
}

TEST_CASE("moves and loops") {
  const std::vector<Move> moves{r1_birth(0, true, -1), r2_birth(1, 3, false, true, 1), r1_death(2), r2_death(0, 3), r3({0, 2, 4})};
  for (const auto& m : moves) CHECK(move_from_json(to_json(m)) == m);
  Loop l{GaussDiagram::parse("3; T1 T2 H1 T3 H2 H3; +++"), {r3({0, 2, 4}), r3({0, 2, 4})}};
  Loop back = loop_from_json(to_json(l));
  CHECK(back.initial == l.initial);
  CHECK(back.moves == l.moves);
  CHECK(closed(loop_germs(back)));
}

TEST_CASE("fixture directory resolution") {
  CHECK(resolve_fixture_dir("/some/dir") == "/some/dir");
  setenv("KNOT_COCYCLE_FIXTURES", "/from/env", 1);
  CHECK(resolve_fixture_dir("") == "/from/env");
  unsetenv("KNOT_COCYCLE_FIXTURES");
  CHECK(resolve_fixture_dir("") == "fixtures");
}

TEST_CASE("knot and move fixtures") {
  const std::string dir = KC_FIXTURE_DIR;
  CHECK(load_knot(dir + "/knots/unknot.json").diagram.degree() == 0);
  CHECK(load_knot(dir + "/knots/trefoil.json").diagram == GaussDiagram::parse("3; T1 H2 T3 H1 T2 H3; +++"));
  CHECK(load_knot(dir + "/knots/figure8.json").diagram.degree() == 4);
  auto seed = read_json_file(dir + "/moves/seed_r3.json");
  auto g = gauss_from_json(seed["diagram"]);
  auto e = seed["edges"].get<std::vector<int>>();
  CHECK(validate_r3(g, {e[0], e[1], e[2]}));
  CHECK(apply_move(g, r3({e[0], e[1], e[2]})).canonical() == gauss_from_json(seed["target"]));

  auto rel = read_json_file(dir + "/relations/triangle_deg2.json");
  CHECK(rel["relators"].size() > 0);
  for (const auto& r : rel["relators"])
    CHECK(parse_germ_sum(r["relator"].get<std::string>()) == triangle_relator(parse_germ(r["germ"].get<std::string>())));
}
