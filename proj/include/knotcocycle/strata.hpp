#pragma once

// Meridians of codimension-2 strata and the linear system of degree-n
// cocycle equations extracted from them.

#include <map>
#include <string>
#include <vector>

#include "knotcocycle/germs.hpp"

namespace kc {

// A closed loop of germs: germs[i].to == germs[i+1].from (arrow ids shared)
// and the last germ returns to the first diagram.
struct Meridian {
  std::string tag;  // "cube" or "quadruple"
  std::vector<Germ> germs;
  std::vector<Move> moves;  // germs[i] = make_germ(germs[i].from, moves[i])
  std::vector<int> bystanders;  // arrows never distinguished along the loop

  bool closed() const;
};

// Cube meridians: R2 birth, two R3 moves through the bigon, R2 death.
// Base diagrams range over all degree-(2 + bystanders) diagrams.
std::vector<Meridian> enumerate_cube_meridians(int bystanders, bool parallel = true);

// Meridians of the positive braid-like quadruple point: four strands
// oriented alike, all crossings positive, every ordering of the strands
// along the knot. Each meridian is one R3 path around the point followed by
// the inverse of another path with the same endpoints.
std::vector<Meridian> enumerate_quadruple_meridians(bool parallel = true);
// Their base diagrams: strands met in lexicographic crossing order, all
// strand orders along the knot, all height orders, positive signs.
std::vector<GaussDiagram> quadruple_bases();

// Homogeneous parts of T(I(m; s)): subgerms keep exactly the bystanders in s.
// Non-monotonic partial germ coordinates are dropped.
std::map<int, GermSum> meridian_equations(const Meridian& m, const std::vector<int>& s);

// Scales an equation so that its first coefficient is 1 (the zero equation
// is returned unchanged).
GermSum normalized(const GermSum& eq);

// Degree-n variables: arrow 3-germs and monotonic partial germs.
std::vector<ArrowGerm> degree_variables(int degree);
// Degree-n variables of every kind (I, II, Delta, monotonic Lambda).
std::vector<ArrowGerm> all_degree_keys(int degree);

// The four variable bans. Returns the index of the first condition met, or 0.
int banned_by(const ArrowGerm& g);
std::vector<ArrowGerm> filter_variables(const std::vector<ArrowGerm>& basis);

struct Equation {
  GermSum terms;
  std::string source;  // e.g. "cube s=0", "quadruple"
};

// Deduplicated degree-n equations (up to scalar multiples) from cube
// meridians with 0 and 1 bystanders (every s) and quadruple meridians (s
// empty). Equations are full: they keep every key kind.
std::vector<Equation> cube_equations(int degree, bool parallel = true);
std::vector<Equation> quadruple_equations(int degree, bool parallel = true);

// Arrow reversal applied termwise.
GermSum reversed(const GermSum& s);

// Keeps only the terms whose key is in `vars`.
GermSum restricted(const GermSum& eq, const std::vector<ArrowGerm>& vars);

// Cube meridians without bystanders grouped into scenes: loops are first
// identified up to basepoint and direction, then loops whose filtered
// degree-3 equations coincide up to arrow reversal form one scene.
struct CubeScene {
  std::vector<Meridian> instances;  // every based, directed loop of the scene
  int loops = 0;                    // loops up to basepoint and direction
  std::vector<GermSum> equations;   // distinct filtered equations, up to sign
};
std::vector<CubeScene> cube_scenes(bool parallel = true);
// Loops up to basepoint and direction among cube meridians without bystanders.
int unbased_cube_loop_count(bool parallel = true);

// The cheapest pair {e, reversed(e)} of filtered quadruple equations that
// raises the rank of the filtered cube rows by two.
std::vector<GermSum> tetrahedron_pair(bool parallel = true);

}  // namespace kc
