#pragma once

// Arrow germ formulas as 1-cocycles: loop evaluation, v2, the assembled
// cocycle systems and formula verification.

#include <string>
#include <vector>

#include "knotcocycle/germs.hpp"
#include "knotcocycle/linalg.hpp"
#include "knotcocycle/moves.hpp"
#include "knotcocycle/random.hpp"
#include "knotcocycle/strata.hpp"

namespace kc {

// A loop given by its moves. Move data refers to the raw (non-canonical)
// diagram reached so far, so arrow ids persist along the loop.
struct Loop {
  GaussDiagram initial;
  std::vector<Move> moves;
};

// Throws std::invalid_argument if a move does not apply.
std::vector<Germ> loop_germs(const Loop& loop);
// Consecutive germs match and the last one returns to the first diagram
// (canonical equality).
bool closed(const std::vector<Germ>& germs);
std::vector<Germ> reversed(const std::vector<Germ>& germs);

// Sum of pair_germ over the germs. Throws std::invalid_argument on an open
// loop.
Rational evaluate_loop(const GermSum& alpha, const std::vector<Germ>& germs, bool parallel = false);
Rational evaluate_loop(const GermSum& alpha, const Loop& loop);

// A germ followed by its inverse.
std::vector<Germ> do_undo(const GaussDiagram& g, const Move& m);
// Inserts a do-undo pair of a random move at the diagram before germ `at`
// (at == size: after the last germ).
std::vector<Germ> insert_do_undo(const std::vector<Germ>& germs, std::size_t at, Rng& rng, int max_degree);

FormalSum<ArrowDiagram> v2_formula();  // T1 H2 H1 T2
Rational v2(const GaussDiagram& g);

// The linear system at one degree. Columns are all_degree_keys(degree);
// rows are the deduplicated cube and quadruple equations. The filtered
// system keeps the allowed 3-germ and partial germ columns only.
struct DegreeSystem {
  int degree = 0;
  std::vector<ArrowGerm> keys;       // sorted
  std::vector<ArrowGerm> variables;  // filtered, sorted
  std::vector<Equation> equations;
  SparseMatrix full;      // equations over keys
  SparseMatrix filtered;  // equations over variables
  SparseMatrix trivial;   // d(A) for every A of this degree, over keys
  int full_rank = 0;
  int filtered_rank = 0;
  int trivial_rank = 0;
  // Dimension of the trivial formulas without I and II terms.
  int pure_trivial_dim = 0;
  std::vector<std::vector<Rational>> kernel;  // of `filtered`
  int kernel_dim() const { return static_cast<int>(kernel.size()); }
  int quotient_dim() const { return kernel_dim() - pure_trivial_dim; }
};

// Built once per degree (1..3) and cached. Throws std::invalid_argument for
// other degrees.
const DegreeSystem& degree_system(int degree, bool parallel = true);

std::vector<Rational> to_vector(const GermSum& s, const std::vector<ArrowGerm>& cols);
GermSum from_vector(const std::vector<Rational>& v, const std::vector<ArrowGerm>& cols);

struct Violation {
  int degree = 0;
  std::string id;  // "eq:<row>" or "ban:<germ>"
  Rational value;
};

struct CocycleReport {
  std::vector<Violation> violations;
  bool trivial = false;
  bool pass() const { return violations.empty(); }
};

// Checks every homogeneous part of alpha up to `degree` against the system
// of its degree. Formulas without I and II terms must also avoid banned
// variables. Triviality: every part is a combination of d(A).
CocycleReport verify_cocycle(const GermSum& alpha, int degree, bool parallel = true);

}  // namespace kc
