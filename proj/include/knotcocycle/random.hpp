#pragma once

// Random diagrams and R-move walks for property tests and benchmarks.

#include <optional>
#include <random>

#include "knotcocycle/moves.hpp"

namespace kc {

using Rng = std::mt19937_64;

// Uniform word over arrows 0..degree-1 (virtual diagrams allowed), random signs.
GaussDiagram random_gauss_diagram(Rng& rng, int degree);

// A uniformly chosen applicable move; births are skipped when the result
// would exceed max_degree. Empty if nothing is applicable.
std::optional<Move> random_move(const GaussDiagram& g, Rng& rng, int max_degree);

// Applies `steps` random moves, returning the canonical end diagram.
GaussDiagram random_walk(GaussDiagram g, Rng& rng, int steps, int max_degree);

}  // namespace kc
