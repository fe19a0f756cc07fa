#pragma once

// JSON and text formats.
//
//   diagram   {"degree":3,"word":[{"id":1,"kind":"T"},...],"signs":{"1":1,...}}
//             or the text form "3; T1 H2 T3 H1 T2 H3; +++"
//   arrow     same JSON without "signs", or the bare word "T1 H2 H1 T2"
//   germ      {"kind":"Lambda","diagram":"T1 T2 H3 H1 T3 H2","marks":[1]}
//             or the text form "Lambda[T1 T2 H3 H1 T3 H2 | 1]"
//   formula   {"degree":3,"terms":[{"coef":"1","germ":...}]}
//   move      {"kind":"R3","edges":[0,2,4]}, {"kind":"R2_death","arrows":[1,2]}, ...
//   loop      {"initial":<diagram>,"moves":[<move>,...]}
//   polygon   {"family":"trefoil","vertices":90,"mirror":true}
//             or {"sum":[<polygon>,<polygon>,...]}
//
// Ids are 1-based in every external format. Parse errors throw
// std::invalid_argument.

#include <string>

#include "json.hpp"
#include "knotcocycle/cocycles.hpp"
#include "knotcocycle/rotation.hpp"

namespace kc {

using json = nlohmann::ordered_json;

json to_json(const ArrowDiagram& a);
json to_json(const GaussDiagram& g);
json to_json(const ArrowGerm& g);
json to_json(const GermSum& s, int degree);
json to_json(const FormalSum<ArrowDiagram>& s);
json to_json(const Move& m);
json to_json(const Loop& l);

ArrowDiagram arrow_from_json(const json& j);
GaussDiagram gauss_from_json(const json& j);
ArrowGerm germ_from_json(const json& j);
GermSum formula_from_json(const json& j);
// A single arrow diagram, or {"terms":[{"coef":..,"diagram":..}]}.
FormalSum<ArrowDiagram> arrow_sum_from_json(const json& j);
Move move_from_json(const json& j);
Loop loop_from_json(const json& j);

PolyKnot polygon_from_json(const json& j);
RotationSettings rotation_settings_from_json(const json& j);

ArrowGerm parse_germ(const std::string& text);
// "+1*Lambda[...] -2*Delta[...]"; "0" for the empty sum.
std::string germ_sum_text(const GermSum& s);
GermSum parse_germ_sum(const std::string& text);

// Reads a file; throws std::invalid_argument if it cannot be opened or parsed.
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
// Accepts JSON or the text form of either diagram kind.
GaussDiagram read_gauss(const std::string& path);
FormalSum<ArrowDiagram> read_arrow_sum(const std::string& path);

Rational parse_rational(const std::string& s);

}  // namespace kc
