#include "knotcocycle/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

json word_json(const ArrowDiagram& a) {
  json w = json::array();
  for (const auto& e : a.word()) w.push_back({{"id", e.arrow + 1}, {"kind", e.kind == EndKind::Tail ? "T" : "H"}});
  return w;
}

std::vector<End> word_from_json(const json& j) {
  if (!j.is_array()) fail("diagram word must be an array");
  std::vector<End> w;
  for (const auto& e : j) {
    const int id = e.at("id").get<int>();
    const std::string k = e.at("kind").get<std::string>();
    if (id < 1) fail("arrow ids are 1-based");
    if (k != "T" && k != "H") fail("end kind must be T or H");
    w.push_back({id - 1, k == "T" ? EndKind::Tail : EndKind::Head});
  }
  return w;
}

GermKind kind_from_string(const std::string& s) {
  if (s == "I") return GermKind::I;
  if (s == "II") return GermKind::II;
  if (s == "Delta") return GermKind::Delta;
  if (s == "Lambda") return GermKind::Lambda;
  fail("unknown germ kind '" + s + "'");
}

bool is_edge_kind(GermKind k) { return k == GermKind::Delta || k == GermKind::Lambda; }

// Rejects germs that are not in their canonical orientation.
ArrowGerm checked(ArrowGerm g) {
  if (!g.diagram.is_canonical()) fail("germ diagram is not canonical: " + g.to_string());
  std::pair<ArrowGerm, int> c;
  if (g.kind == GermKind::Lambda) {
    if (g.marks.size() != 1) fail("Lambda germ needs one edge");
    c = arrow_partial_germ(g.diagram, g.marks[0]);
  } else if (g.kind == GermKind::Delta) {
    if (g.marks.size() != 3) fail("Delta germ needs three edges");
    c = arrow_3germ(g.diagram, {g.marks[0], g.marks[1], g.marks[2]});
  } else {
    return g;
  }
  if (c.second != 1 || c.first != g) fail("germ is not in canonical orientation: " + g.to_string());
  return g;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    if (r.get_den() == 0) fail("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    fail("bad rational '" + s + "'");
  }
}

json to_json(const ArrowDiagram& a) { return {{"degree", a.degree()}, {"word", word_json(a)}}; }

json to_json(const GaussDiagram& g) {
  json j = to_json(g.arrows());
  json signs = json::object();
  for (int id : g.arrows().arrow_ids()) signs[std::to_string(id + 1)] = g.sign(id);
  j["signs"] = signs;
  return j;
}

json to_json(const ArrowGerm& g) {
  json marks = json::array();
  for (int m : g.marks) marks.push_back(is_edge_kind(g.kind) ? m : m + 1);
  return {{"kind", to_string(g.kind)}, {"diagram", g.diagram.to_string()}, {"marks", marks}};
}

json to_json(const GermSum& s, int degree) {
  json terms = json::array();
  for (const auto& [k, c] : s) terms.push_back({{"coef", c.get_str()}, {"germ", to_json(k)}});
  return {{"degree", degree}, {"terms", terms}};
}

json to_json(const FormalSum<ArrowDiagram>& s) {
  json terms = json::array();
  for (const auto& [k, c] : s) terms.push_back({{"coef", c.get_str()}, {"diagram", k.to_string()}});
  return {{"terms", terms}};
}

json to_json(const Move& m) {
  json j = {{"kind", to_string(m.kind)}};
  switch (m.kind) {
    case MoveKind::R1Birth:
      j["gap"] = m.gap;
      j["head_first"] = m.head_first;
      j["sign"] = m.sign;
      break;
    case MoveKind::R2Birth:
      j["gap"] = m.gap;
      j["gap2"] = m.gap2;
      j["head_first"] = m.head_first;
      j["second_swapped"] = m.second_swapped;
      j["sign"] = m.sign;
      break;
    case MoveKind::R1Death: j["arrow"] = m.data.at(0) + 1; break;
    case MoveKind::R2Death: j["arrows"] = {m.data.at(0) + 1, m.data.at(1) + 1}; break;
    case MoveKind::R3: j["edges"] = m.data; break;
  }
  return j;
}

json to_json(const Loop& l) {
  json moves = json::array();
  for (const auto& m : l.moves) moves.push_back(to_json(m));
  return {{"initial", l.initial.to_string()}, {"moves", moves}};
}

ArrowDiagram arrow_from_json(const json& j) {
  if (j.is_string()) return ArrowDiagram::parse(j.get<std::string>());
  if (!j.is_object()) fail("arrow diagram must be an object or a string");
  ArrowDiagram a(word_from_json(j.at("word")));
  if (j.contains("degree") && j["degree"].get<int>() != a.degree()) fail("degree does not match the word");
  return a;
}

GaussDiagram gauss_from_json(const json& j) {
  if (j.is_string()) return GaussDiagram::parse(j.get<std::string>());
  if (!j.is_object()) fail("diagram must be an object or a string");
  ArrowDiagram a = arrow_from_json(j);
  std::vector<int> signs(static_cast<std::size_t>(a.max_id() + 1), 0);
  const json& s = j.at("signs");
  for (int id : a.arrow_ids()) {
    const std::string key = std::to_string(id + 1);
    if (!s.contains(key)) fail("missing sign for arrow " + key);
    signs[static_cast<std::size_t>(id)] = s[key].get<int>();
  }
  return GaussDiagram(a, signs);
}

ArrowGerm germ_from_json(const json& j) {
  if (j.is_string()) return parse_germ(j.get<std::string>());
  ArrowGerm g;
  g.kind = kind_from_string(j.at("kind").get<std::string>());
  g.diagram = ArrowDiagram::parse(j.at("diagram").get<std::string>());
  for (int m : j.at("marks").get<std::vector<int>>()) g.marks.push_back(is_edge_kind(g.kind) ? m : m - 1);
  return checked(g);
}

ArrowGerm parse_germ(const std::string& text) {
  const auto open = text.find('['), bar = text.find('|'), close = text.find(']');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos || !(open < bar && bar < close))
    fail("bad germ '" + text + "'");
  ArrowGerm g;
  g.kind = kind_from_string(text.substr(0, open));
  g.diagram = ArrowDiagram::parse(text.substr(open + 1, bar - open - 1));
  std::istringstream marks(text.substr(bar + 1, close - bar - 1));
  for (int m; marks >> m;) g.marks.push_back(is_edge_kind(g.kind) ? m : m - 1);
  return checked(g);
}

std::string germ_sum_text(const GermSum& s) {
  std::string out;
  for (const auto& [k, c] : s) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.get_str() + "*" + k.to_string();
  }
  return out.empty() ? "0" : out;
}

GermSum parse_germ_sum(const std::string& text) {
  GermSum s;
  std::size_t pos = text.find_first_not_of(' ');
  if (pos == std::string::npos || text.substr(pos) == "0") return s;
  while (pos != std::string::npos && pos < text.size()) {
    const auto star = text.find('*', pos), close = text.find(']', pos);
    if (star == std::string::npos || close == std::string::npos || star > close) fail("bad germ sum '" + text + "'");
    std::string coef = text.substr(pos, star - pos);
    if (!coef.empty() && coef[0] == '+') coef.erase(0, 1);
    s.add(parse_germ(text.substr(star + 1, close - star)), parse_rational(coef));
    pos = text.find_first_not_of(' ', close + 1);
  }
  return s;
}

GermSum formula_from_json(const json& j) {
  GermSum s;
  for (const auto& t : j.at("terms")) {
    const json& c = t.at("coef");
    s.add(germ_from_json(t.at("germ")), c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
  }
  if (j.contains("degree")) {
    const int deg = j["degree"].get<int>();
    for (const auto& [k, c] : s)
      if (k.degree() > deg) fail("formula term above the declared degree: " + k.to_string());
  }
  return s;
}

FormalSum<ArrowDiagram> arrow_sum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms")) return {arrow_from_json(j).canonical(), 1};
  FormalSum<ArrowDiagram> s;
  for (const auto& t : j["terms"]) {
    const json& c = t.at("coef");
    s.add(arrow_from_json(t.at("diagram")).canonical(), c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
  }
  return s;
}

Move move_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "R1_birth") return r1_birth(j.at("gap").get<int>(), j.value("head_first", false), j.value("sign", 1));
  if (k == "R2_birth")
    return r2_birth(j.at("gap").get<int>(), j.at("gap2").get<int>(), j.value("head_first", false), j.value("second_swapped", false),
                    j.value("sign", 1));
  if (k == "R1_death") return r1_death(j.at("arrow").get<int>() - 1);
  if (k == "R2_death") {
    auto a = j.at("arrows").get<std::vector<int>>();
    if (a.size() != 2) fail("R2_death needs two arrows");
    return r2_death(a[0] - 1, a[1] - 1);
  }
  if (k == "R3") {
    auto e = j.at("edges").get<std::vector<int>>();
    if (e.size() != 3) fail("R3 needs three edges");
    return r3({e[0], e[1], e[2]});
  }
  fail("unknown move kind '" + k + "'");
}

Loop loop_from_json(const json& j) {
  Loop l;
  l.initial = gauss_from_json(j.at("initial"));
  for (const auto& m : j.at("moves")) l.moves.push_back(move_from_json(m));
  return l;
}

PolyKnot polygon_from_json(const json& j) {
  if (j.contains("sum")) {
    const json& parts = j["sum"];
    if (!parts.is_array() || parts.empty()) fail("polygon sum needs a non-empty array");
    PolyKnot k = polygon_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) k = connected_sum(k, polygon_from_json(parts[i]));
    return k;
  }
  const std::string family = j.at("family").get<std::string>();
  const int n = j.value("vertices", 90);
  if (n < 8) fail("polygon needs at least 8 vertices");
  std::vector<Vec3> closed;
  if (family == "unknot") closed = unknot_polygon(n);
  else if (family == "trefoil") closed = trefoil_polygon(n);
  else if (family == "figure_eight") closed = figure_eight_polygon(n);
  else fail("unknown polygon family '" + family + "'");
  PolyKnot k = long_knot(closed);
  return j.value("mirror", false) ? mirrored(k) : k;
}

RotationSettings rotation_settings_from_json(const json& j) {
  RotationSettings s;
  s.samples = j.value("samples", s.samples);
  if (j.contains("perturbation")) {
    s.seed = j["perturbation"].value("seed", s.seed);
    s.eps = j["perturbation"].value("eps", s.eps);
  }
  if (s.samples < 16) fail("rotation needs at least 16 samples");
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

namespace {

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '{' || text[p] == '"');
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

GaussDiagram read_gauss(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    if (looks_like_json(text)) return gauss_from_json(json::parse(text)).canonical();
    return GaussDiagram::parse(trimmed(text)).canonical();
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

FormalSum<ArrowDiagram> read_arrow_sum(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    if (looks_like_json(text)) return arrow_sum_from_json(json::parse(text));
    return {ArrowDiagram::parse(trimmed(text)).canonical(), 1};
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace kc
