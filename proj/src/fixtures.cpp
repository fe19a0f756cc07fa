#include "knotcocycle/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

namespace kc {

std::string resolve_fixture_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("KNOT_COCYCLE_FIXTURES"); env && *env) return env;
  return "fixtures";
}

KnotFixture load_knot(const std::string& path) {
  const std::string text = read_text_file(path);
  KnotFixture k;
  k.name = std::filesystem::path(path).stem().string();
  if (text.find('{') == std::string::npos) {
    k.diagram = read_gauss(path);
    return k;
  }
  const json j = read_json_file(path);
  k.name = j.value("name", k.name);
  k.diagram = gauss_from_json(j).canonical();
  if (j.contains("polygon")) k.polygon = j["polygon"];
  return k;
}

PolyKnot knot_polygon(const KnotFixture& k) {
  if (k.polygon.is_null()) throw std::invalid_argument(k.name + ": no polygon in the knot file");
  return polygon_from_json(k.polygon);
}

GermSum alpha31(const std::string& dir) {
  const GermSum a = formula_from_json(read_json_file(dir + "/formulas/alpha31.json"));
  if (a.empty()) throw std::invalid_argument("alpha31: empty formula");
  for (const auto& [k, c] : a) {
    if (k.kind != GermKind::Delta && k.kind != GermKind::Lambda) throw std::invalid_argument("alpha31: unexpected germ kind");
    if (k.kind == GermKind::Lambda && !k.monotonic()) throw std::invalid_argument("alpha31: non-monotonic partial germ");
    if (banned_by(k)) throw std::invalid_argument("alpha31: banned germ " + k.to_string());
  }
  return a;
}

RotationSettings rotation_settings(const std::string& dir) {
  return rotation_settings_from_json(read_json_file(dir + "/loops/rot_template.json"));
}

}  // namespace kc
