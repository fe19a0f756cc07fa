#pragma once

// rot(K): the loop of long knots obtained by turning a long knot once around
// its axis (the x-axis). Realized on an actual polygonal knot: the diagram is
// recomputed as the projection direction turns, and every change between
// consecutive samples is resolved into a single R-move.

#include <array>
#include <cstdint>
#include <vector>

#include "knotcocycle/germs.hpp"

namespace kc {

using Vec3 = std::array<double, 3>;

// Open polyline whose first and last points lie on the x-axis; the knot
// continues along the axis to -inf and +inf.
struct PolyKnot {
  std::vector<Vec3> points;
};

// Long knot from a closed polygon: cut at the leftmost vertex, enter from the
// axis on the left, and leave over a detour above every other point.
PolyKnot long_knot(const std::vector<Vec3>& closed);

// Closed polygons sampled from standard parametrizations.
std::vector<Vec3> trefoil_polygon(int samples);
std::vector<Vec3> figure_eight_polygon(int samples);
std::vector<Vec3> unknot_polygon(int samples);

// Long connected sum: b is translated to start where a ends.
PolyKnot connected_sum(const PolyKnot& a, const PolyKnot& b);

// Reflection z -> -z; flips every crossing sign of the standard projection.
PolyKnot mirrored(const PolyKnot& k);
// Moves every interior point by at most eps (seeded, deterministic).
PolyKnot perturbed(const PolyKnot& k, std::uint64_t seed, double eps);

// Diagram seen from direction (0, -sin t, cos t). Arrow ids are compact.
GaussDiagram project(const PolyKnot& k, double theta);

struct RotationLoop {
  std::vector<Germ> germs;  // consecutive, closing up
  int samples = 0;
  int bisections = 0;
};

struct RotationSettings {
  int samples = 1024;
  std::uint64_t seed = 1;  // perturbation applied before turning
  double eps = 1e-3;
};

// Throws std::runtime_error if some change cannot be resolved into single
// moves (a non-generic knot); retrying with another perturbation helps.
RotationLoop rot_loop(const PolyKnot& k, int samples = 2048, bool parallel = true);

}  // namespace kc
