#pragma once

// Locating and loading the fixture files.

#include <string>

#include "knotcocycle/io.hpp"

namespace kc {

// flag if non-empty, else $KNOT_COCYCLE_FIXTURES, else "./fixtures".
std::string resolve_fixture_dir(const std::string& flag);

struct KnotFixture {
  std::string name;
  GaussDiagram diagram;  // canonical
  json polygon;          // empty when the file has none
};

KnotFixture load_knot(const std::string& path);
// A polygon for the knot; throws std::invalid_argument if the file has none.
PolyKnot knot_polygon(const KnotFixture& k);

// formulas/alpha31.json; throws std::invalid_argument if it is missing or
// contains banned or non-canonical terms.
GermSum alpha31(const std::string& dir);
// loops/rot_template.json
RotationSettings rotation_settings(const std::string& dir);

}  // namespace kc
