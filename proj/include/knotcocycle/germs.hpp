#pragma once

// Germs (1-chains) and arrow germs (1-cochains).
//
// A germ is an ordered pair of Gauss diagrams (from, to) differing by one
// R-move; both diagrams share arrow ids. Every germ kind obeys
// (x, y) = -(y, x).
//
// Arrow germs are stored in a canonical orientation:
//  * kinds I and II: the diagram with more arrows, plus the ids of the moving
//    arrows;
//  * kind Delta: the side on which the edge with exactly one arrowhead has
//    epsilon = +1, plus the three switched edge positions;
//  * kind Lambda (partial germs): the side on which the switched edge has
//    epsilon = +1, plus that edge position.
// A germ presented in the other orientation carries a factor -1.

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knotcocycle/diagram.hpp"
#include "knotcocycle/formal_sum.hpp"
#include "knotcocycle/moves.hpp"

namespace kc {

enum class GermKind : std::uint8_t { I = 1, II = 2, Delta = 3, Lambda = 4 };

const char* to_string(GermKind k);

struct ArrowGerm {
  GermKind kind = GermKind::Delta;
  ArrowDiagram diagram;   // canonical labels
  std::vector<int> marks; // I/II: arrow ids; Delta/Lambda: edge positions

  int degree() const { return diagram.degree(); }
  // Lambda only: the switched edge holds one head and one tail.
  bool monotonic() const;
  std::vector<int> distinguished_arrows() const;
  // The diagram on the other side of the move (same arrow count for
  // Delta/Lambda; the smaller diagram for I/II).
  ArrowDiagram other_side() const;
  ArrowGerm reversed() const;  // all arrows reversed, canonical again
  std::string to_string() const;

  auto operator<=>(const ArrowGerm&) const = default;
  bool operator==(const ArrowGerm&) const = default;
};

using GermSum = FormalSum<ArrowGerm>;

// Builds the canonical arrow germ of the pair (side0 -> side1) and returns
// it with its orientation factor. Edges/arrows are given on side1.
std::pair<ArrowGerm, int> arrow_partial_germ(const ArrowDiagram& side1, int edge);
std::pair<ArrowGerm, int> arrow_3germ(const ArrowDiagram& side1, std::array<int, 3> edges);

// Signed germ with explicit arrow correspondence.
struct Germ {
  int kind = 3;  // 1, 2 or 3
  GaussDiagram from;
  GaussDiagram to;
  std::vector<int> distinguished;  // ids of the moving arrows
  // Kind 3: the switched edges as pairs of ends (order irrelevant).
  std::vector<std::pair<End, End>> edges;

  Germ inverse() const;
  int degree() const { return std::max(from.degree(), to.degree()); }
  // w*epsilon on the switched edges of `to` (kind 3 only).
  int coorientation() const;
  // Germ in canonical orientation together with the factor relating it to
  // *this (kind 3: w*epsilon = +1 on `to`; kinds 1/2: birth direction).
  std::pair<Germ, int> canonical() const;
};

Germ make_germ(const GaussDiagram& g0, const Move& m);

// Partial germs of a kind-3 germ are produced by subgerms(); a partial germ
// of the signed world is represented as the arrow key plus coefficient.

// Visits T(subgerm) for every subgerm of gamma that keeps exactly
// `kept_others` non-distinguished arrows (or all sizes if kept_others < 0).
// f(key, coefficient) receives the canonical arrow germ and its coefficient.
void for_each_subgerm(const Germ& gamma, int kept_others, const std::function<void(const ArrowGerm&, int)>& f);

// Same, restricted to a prescribed subset of the non-distinguished arrows that
// must be kept and a subset that must be removed; the remaining ones vary.
void for_each_subgerm_constrained(const Germ& gamma, const std::vector<int>& must_keep,
                                  const std::vector<int>& must_remove, const std::function<void(const ArrowGerm&, int)>& f);

// T(I(gamma)) in full (exponential in the number of non-distinguished arrows).
GermSum ti(const Germ& gamma);
// Subgerm count with multiplicity, before cancellation (for sanity checks).
std::size_t subgerm_count(const Germ& gamma);

// Pairing <alpha, gamma> = <alpha, T I(gamma)>, alpha in the monotonic basis
// for its Lambda part. Enumerates only subgerms of the degrees present in
// alpha.
Rational pair_germ(const GermSum& alpha, const Germ& gamma);
// Reference route: full T I(gamma) then orthonormal product.
Rational pair_germ_full(const GermSum& alpha, const Germ& gamma);
// Route through sign completions S(alpha) against signed subgerms.
Rational pair_germ_signed(const GermSum& alpha, const Germ& gamma);

// Expresses a partial arrow germ in the monotonic basis modulo triangle
// relations. Other kinds are returned unchanged.
GermSum monotonic_reduce(const ArrowGerm& g);
GermSum monotonic_reduce(const GermSum& s);

// The triangle relator attached to a non-monotonic partial arrow germ x:
// x - y1 - y2, where y1, y2 are the monotonic partial germs of the two R3
// configurations containing x.
GermSum triangle_relator(const ArrowGerm& x);

// A formal 3-germ: g on the `to` side and the triangle's edges switched on
// the other, whether or not g satisfies the R3 criterion.
Germ formal_3germ(const GaussDiagram& g, const Triangle& t);

// Checks that the triangle relators of degrees lo..hi annihilate T I(x) for
// a formal 3-germ x of degree lo+1..hi+1 exactly when x is an actual R3
// germ, over every diagram, triangle and sign pattern.
struct LemmaCheck {
  int relators = 0;
  int germs = 0;
  int mismatches = 0;
};
LemmaCheck check_triangle_lemma(int lo, int hi, bool parallel = true);

// All canonical arrow germs of the given kind and degree.
std::vector<ArrowGerm> enumerate_arrow_germs(GermKind kind, int degree, bool monotonic_only = true);

// All canonical arrow diagrams of a degree.
std::vector<ArrowDiagram> enumerate_arrow_diagrams(int degree);

}  // namespace kc
