// Regenerates the computed fixture files. Usage: make_fixtures <dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "knotcocycle/coboundary.hpp"
#include "knotcocycle/fixtures.hpp"

using namespace kc;

namespace {

void write(const std::filesystem::path& path, const json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream(path) << j.dump(2) << '\n';
  std::cout << "wrote " << path.string() << '\n';
}

json knot(const std::string& name, const std::string& diagram, const json& polygon) {
  json j = {{"name", name}};
  j.update(to_json(GaussDiagram::parse(diagram).canonical()));
  j["polygon"] = polygon;
  return j;
}

json equation_list(const std::vector<GermSum>& eqs) {
  json out = json::array();
  for (const auto& e : eqs) out.push_back(germ_sum_text(e));
  return out;
}

// The sparsest nontrivial kernel vector, signed so that its value on the
// rotation loop of the trefoil is -v2.
GermSum pick_alpha(const RotationSettings& rs) {
  const DegreeSystem& sys = degree_system(3);
  GermSum best;
  for (const auto& v : sys.kernel) {
    GermSum a = from_vector(v, sys.variables);
    if (verify_cocycle(a, 3).trivial) continue;
    if (best.empty() || a.size() < best.size()) best = a;
  }
  if (best.empty()) throw std::runtime_error("no nontrivial kernel vector");
  PolyKnot k = perturbed(mirrored(long_knot(trefoil_polygon(90))), rs.seed, rs.eps);
  Rational value = evaluate_loop(best, rot_loop(k, rs.samples).germs, true);
  Rational target = -v2(project(k, 0.1).canonical());
  if (value == -target) best *= -1;
  else if (value != target) throw std::runtime_error("alpha is not a multiple of -v2 on rot(trefoil)");
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  const RotationSettings rs;

  write(dir / "knots/unknot.json", knot("unknot", "0; ; ", {{"family", "unknot"}, {"vertices", 60}}));
  write(dir / "knots/trefoil.json",
        knot("trefoil", "3; T1 H2 T3 H1 T2 H3; +++", {{"family", "trefoil"}, {"vertices", 90}, {"mirror", true}}));
  write(dir / "knots/figure8.json",
        knot("figure8", "4; T1 H2 T3 H4 T2 H1 T4 H3; ++--", {{"family", "figure_eight"}, {"vertices", 120}}));
  json tref = {{"family", "trefoil"}, {"vertices", 90}, {"mirror", true}};
  write(dir / "knots/trefoil_sum.json",
        knot("trefoil_sum", "6; T1 H2 T3 H1 T2 H3 T4 H5 T6 H4 T5 H6; ++++++", {{"sum", {tref, tref}}}));

  write(dir / "loops/rot_template.json", {{"axis", "x"},
                                          {"direction", "theta increasing"},
                                          {"samples", rs.samples},
                                          {"perturbation", {{"seed", rs.seed}, {"eps", rs.eps}}}});

  const GaussDiagram seed = GaussDiagram::parse("3; T1 T2 H1 T3 H2 H3; +++");
  write(dir / "moves/seed_r3.json",
        {{"diagram", to_json(seed)}, {"edges", {0, 2, 4}}, {"target", to_json(apply_move(seed, r3({0, 2, 4})).canonical())}});

  json rel = json::array();
  for (const auto& g : enumerate_arrow_germs(GermKind::Lambda, 2, false))
    if (!g.monotonic()) rel.push_back({{"germ", g.to_string()}, {"relator", germ_sum_text(triangle_relator(g))}});
  write(dir / "relations/triangle_deg2.json", {{"degree", 2}, {"relators", rel}});

  write(dir / "formulas/v2_diagram.json", to_json(ArrowDiagram::parse("T1 H2 H1 T2").canonical()));
  write(dir / "formulas/alpha31.json", to_json(pick_alpha(rs), 3));

  json scenes = json::array(), expected = json::array();
  for (const auto& s : cube_scenes()) {
    const Meridian& m = s.instances.front();
    scenes.push_back({{"loops", s.loops},
                      {"instances", s.instances.size()},
                      {"representative", to_json(Loop{m.germs.front().from, m.moves})}});
    expected.push_back(equation_list(s.equations));
  }
  write(dir / "strata/fig7_scenes.json", {{"generated", true}, {"scenes", scenes}});
  write(dir / "strata/fig8_expected.json", {{"generated", true}, {"degree", 3}, {"scenes", expected}});
  write(dir / "strata/fig9_tetra.json", {{"generated", true}, {"degree", 3}, {"equations", equation_list(tetrahedron_pair())}});
  return 0;
}
