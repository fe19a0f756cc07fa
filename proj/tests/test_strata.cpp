#include <doctest.h>

#include <set>

#include "knotcocycle/cocycles.hpp"
#include "knotcocycle/fixtures.hpp"

using namespace kc;

namespace {

const std::vector<Meridian>& cube0() {
  static const auto ms = enumerate_cube_meridians(0);
  return ms;
}

const std::vector<CubeScene>& scenes() {
  static const auto s = cube_scenes();
  return s;
}

// Replaces every 3-germ that some two-term equation identifies with a
// partial germ.
GermSum substituted(const GermSum& eq, const std::map<ArrowGerm, GermSum>& rules) {
  GermSum out;
  for (const auto& [k, c] : eq) {
    auto it = rules.find(k);
    if (it == rules.end()) out.add(k, c);
    else out.add(it->second, c);
  }
  return out;
}

bool only_partial(const GermSum& s) {
  for (const auto& [k, c] : s)
    if (k.kind != GermKind::Lambda) return false;
  return true;
}

}  // namespace

TEST_CASE("cube meridians close up and replay from their moves") {
  const auto& ms = cube0();
  CHECK(ms.size() == 288);
  for (const auto& m : ms) {
    REQUIRE(m.closed());
    REQUIRE(m.moves.size() == m.germs.size());
    auto replay = loop_germs(Loop{m.germs.front().from, m.moves});
    CHECK(replay.back().to.canonical() == m.germs.front().from.canonical());
  }
  CHECK(enumerate_cube_meridians(1).size() == 11520);
}

TEST_CASE("cube meridians form 48 loops in 6 scenes") {
  CHECK(unbased_cube_loop_count() == 48);
  const auto& s = scenes();
  REQUIRE(s.size() == 6);
  std::size_t instances = 0;
  for (const auto& sc : s) {
    CHECK(sc.loops == 8);
    instances += sc.instances.size();
  }
  CHECK(instances == 288);
}

TEST_CASE("scene equations: partial germ and basepoint structure") {
  std::map<ArrowGerm, GermSum> rules;
  // Scenes are stored up to arrow reversal, so reversed equations count too.
  for (const auto& sc : scenes())
    for (const auto& eq : sc.equations)
      for (const auto& e : {eq, reversed(eq)}) {
        if (e.size() != 2) continue;
        auto it = e.begin();
        auto a = *it++, b = *it;
        if (a.first.kind == GermKind::Delta && b.first.kind == GermKind::Lambda)
          rules[a.first] = GermSum(b.first, -b.second / a.second);
      }
  int four_partial = 0, three_based = 0;
  for (const auto& sc : scenes()) {
    bool four = false;
    for (const auto& e : sc.equations) {
      if (e.size() != 4) continue;
      GermSum r = substituted(e, rules);
      if (only_partial(r) && r.size() == 4) four = true;
    }
    four_partial += four;
    three_based += sc.equations.size() == 3;
  }
  CHECK(four_partial == 2);
  CHECK(three_based >= 1);
}

TEST_CASE("quadruple meridians") {
  auto ms = enumerate_quadruple_meridians();
  CHECK(ms.size() == 48);
  for (const auto& m : ms) {
    CHECK(m.closed());
    CHECK(loop_germs(Loop{m.germs.front().from, m.moves}).size() == 8);
  }
  auto pair = tetrahedron_pair();
  REQUIRE(pair.size() == 2);
  GermSum r = normalized(reversed(pair[0]));
  CHECK((r == normalized(pair[1]) || r * -1 == normalized(pair[1])));
}

TEST_CASE("variable bans") {
  // Isolated bystander.
  CHECK(banned_by(parse_germ("Lambda[T1 H1 T2 T3 H2 H3 | 2]")) == 1);
  auto vars = degree_variables(3);
  CHECK(vars.size() == 144);
  std::map<int, int> count;
  for (const auto& v : vars) ++count[banned_by(v)];
  CHECK(count[0] == 38);
  CHECK(count[1] == 48);
  CHECK(count[2] == 0);
  CHECK(count[3] == 44);
  CHECK(count[4] == 14);
  CHECK(filter_variables(vars).size() == 38);
}

TEST_CASE("degree 3 system regression constants") {
  const DegreeSystem& s = degree_system(3);
  CHECK(s.keys.size() == 312);
  CHECK(s.variables.size() == 38);
  CHECK(s.equations.size() == 60);
  CHECK(s.full_rank == 60);
  CHECK(s.filtered_rank == 16);
  CHECK(s.trivial.rows == 120);
  CHECK(s.trivial_rank == 119);
  CHECK(s.pure_trivial_dim == 21);
  CHECK(s.kernel_dim() == 22);
  CHECK(s.quotient_dim() == 1);
  int cube = 0;
  for (const auto& e : s.equations) cube += e.source.rfind("cube", 0) == 0;
  CHECK(cube == 36);
}

TEST_CASE("filtered cube equations are closed under arrow reversal") {
  const DegreeSystem& s = degree_system(3);
  std::set<GermSum> eqs;
  for (const auto& e : s.equations) {
    GermSum r = normalized(restricted(e.terms, s.variables));
    if (!r.empty()) eqs.insert(r);
  }
  for (const auto& e : eqs) CHECK(eqs.count(normalized(reversed(e))));
}

TEST_CASE("strata fixtures match the generator") {
  const std::string dir = KC_FIXTURE_DIR;
  auto expected = read_json_file(dir + "/strata/fig8_expected.json");
  REQUIRE(expected["scenes"].size() == scenes().size());
  for (std::size_t i = 0; i < scenes().size(); ++i) {
    std::vector<GermSum> eqs;
    for (const auto& t : expected["scenes"][i]) eqs.push_back(parse_germ_sum(t.get<std::string>()));
    CHECK(eqs == scenes()[i].equations);
  }
  auto tetra = read_json_file(dir + "/strata/fig9_tetra.json");
  std::vector<GermSum> t;
  for (const auto& e : tetra["equations"]) t.push_back(parse_germ_sum(e.get<std::string>()));
  CHECK(t == tetrahedron_pair());

  auto reps = read_json_file(dir + "/strata/fig7_scenes.json");
  for (const auto& sc : reps["scenes"]) {
    auto germs = loop_germs(loop_from_json(sc["representative"]));
    CHECK(germs.size() == 4);
    CHECK(closed(germs));
  }
}

TEST_CASE("parallel generation matches the serial reference") {
  auto a = cube_equations(3, false), b = cube_equations(3, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].terms == b[i].terms);
    CHECK(a[i].source == b[i].source);
  }
  auto q1 = enumerate_quadruple_meridians(false), q2 = enumerate_quadruple_meridians(true);
  REQUIRE(q1.size() == q2.size());
  for (std::size_t i = 0; i < q1.size(); ++i) CHECK(q1[i].moves == q2[i].moves);
}
