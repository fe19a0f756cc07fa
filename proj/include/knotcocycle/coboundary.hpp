#pragma once

// The coboundary d: arrow diagrams -> arrow germs, and the Stokes check
// <dA, gamma> = <A, G1> - <A, G0>.

#include "knotcocycle/germs.hpp"

namespace kc {

struct CoboundaryValue {
  GermSum I, II, Delta, Lambda;  // Lambda in the monotonic basis

  GermSum total() const;
  bool zero() const { return I.empty() && II.empty() && Delta.empty() && Lambda.empty(); }
};

// Formal boundary of a germ: to - from.
FormalSum<GaussDiagram> boundary(const Germ& gamma);

CoboundaryValue d(const ArrowDiagram& a);
CoboundaryValue d(const FormalSum<ArrowDiagram>& a);

// Basis of the arrow diagram formulas of degree 1..max_degree with d = 0
// (R-move invariants). Throws std::invalid_argument above degree 4.
std::vector<FormalSum<ArrowDiagram>> coboundary_kernel(int max_degree, bool parallel = true);

struct StokesResult {
  Rational lhs;  // <dA, gamma>
  Rational rhs;  // <A, to> - <A, from>
  bool ok() const { return lhs == rhs; }
};

StokesResult stokes_check(const FormalSum<ArrowDiagram>& a, const Germ& gamma);

}  // namespace kc
