#pragma once

// Edge combinatorics and R-moves on Gauss diagrams.

#include <array>
#include <compare>
#include <vector>

#include "knotcocycle/diagram.hpp"

namespace kc {

// Data attached to the edge between word positions pos and pos + 1.
struct EdgeData {
  int eta = 0;  // +1 iff the two bounding arrows cross each other
  int up = 0;   // number of heads among the two bounding ends
  int w = 0;    // product of the two arrows' signs (0 for arrow diagrams)
  int epsilon = 0;
};

// Throws std::invalid_argument if the edge is bounded by the two ends of a
// single arrow or lies outside the word (the unbounded gaps at infinity).
EdgeData edge_data(const ArrowDiagram& a, int pos);
EdgeData edge_data(const GaussDiagram& g, int pos);
int epsilon(const ArrowDiagram& a, int pos);

// Three disjoint edges whose six ends belong to three arrows, each arrow
// contributing one end to two of the edges.
struct Triangle {
  std::array<int, 3> edges{};   // word positions, increasing
  std::array<int, 3> arrows{};  // arrow ids, increasing
};

// Returns false when the positions do not form a triangle configuration.
bool triangle_at(const ArrowDiagram& a, std::array<int, 3> edges, Triangle& out);
std::vector<Triangle> triangles(const ArrowDiagram& a);

// The combinatorial R3 criterion: w*epsilon equal on the three edges and
// the three up-counts pairwise different. Throws std::invalid_argument if
// the edges do not form a triangle.
bool validate_r3(const GaussDiagram& g, std::array<int, 3> edges);
// Cube-edge operation: switch the two ends at edges[i] and flip the sign of
// the arrow not touching that edge.
GaussDiagram cube_step(const GaussDiagram& g, const std::array<int, 3>& edges, int i);
// All diagrams reachable from g by cube-edge operations (8 for a triangle).
std::vector<GaussDiagram> r3_cube(const GaussDiagram& g, const std::array<int, 3>& edges);
// Only the up-count condition; the one that survives forgetting signs.
bool r3_shape(const ArrowDiagram& a, const Triangle& t);

enum class MoveKind { R1Birth, R1Death, R2Birth, R2Death, R3 };

const char* to_string(MoveKind k);

// Move data refers to word positions and arrow ids of the diagram the move
// is applied to.
struct Move {
  MoveKind kind = MoveKind::R1Birth;
  // Births: insertion gaps in 0..2n (gap g inserts before word[g]).
  int gap = 0;
  int gap2 = 0;  // R2 birth: second block gap, gap2 >= gap
  // R1 birth: head precedes tail. R2 birth: first block holds heads.
  bool head_first = false;
  // R2 birth: second block lists the new arrows in reverse order.
  bool second_swapped = false;
  int sign = 1;  // sign of the first new arrow (R2: the other gets -sign)
  // Deaths: arrow ids. R3: edge positions (increasing).
  std::vector<int> data;

  auto operator<=>(const Move&) const = default;
  bool operator==(const Move&) const = default;
};

Move r1_birth(int gap, bool head_first, int sign);
Move r1_death(int arrow);
Move r2_birth(int gap, int gap2, bool head_first, bool second_swapped, int sign);
Move r2_death(int a, int b);
Move r3(std::array<int, 3> edges);

// Result of applying a move while keeping the arrow ids of the source.
struct AppliedMove {
  GaussDiagram diagram;           // ids shared with the source diagram
  std::vector<int> distinguished; // ids of the moving arrows (in diagram or source)
};

// Throws std::invalid_argument if the move is not applicable.
AppliedMove apply_move_raw(const GaussDiagram& g, const Move& m);
GaussDiagram apply_move(const GaussDiagram& g, const Move& m);
bool applicable(const GaussDiagram& g, const Move& m);

// The move undoing m, expressed on raw result diagram ids/positions.
Move inverse_move(const GaussDiagram& g, const Move& m);
// Same, expressed on the canonical form of apply_move(g, m).
Move inverse_move_canonical(const GaussDiagram& g, const Move& m);

std::vector<Move> enumerate_moves(const GaussDiagram& g, MoveKind kind);
std::vector<Move> enumerate_all_moves(const GaussDiagram& g);

}  // namespace kc
