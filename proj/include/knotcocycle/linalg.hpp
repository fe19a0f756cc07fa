#pragma once

// Exact sparse linear algebra over Q. Elimination is fraction free: rows
// are kept as primitive integer vectors and rescaled to rationals at the end.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "knotcocycle/formal_sum.hpp"

namespace kc {

using SparseRow = std::vector<std::pair<int, Rational>>;  // increasing columns

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseRow> data;  // data.size() == rows

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r)) {}

  void set(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  std::size_t nnz() const;
  bool operator==(const SparseMatrix&) const = default;
};

struct Rref {
  SparseMatrix matrix;      // reduced rows only, sorted by pivot column
  std::vector<int> pivots;  // pivot column of each row
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Pivots by minimal row fill, ties broken by lowest leading column.
// parallel = false is the serial reference.
Rref rref(const SparseMatrix& m, bool parallel = true);
// One basis vector per free column (free entry 1).
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m, bool parallel = true);
int rank(const SparseMatrix& m, bool parallel = true);

// True iff v is a rational combination of the rows of m.
bool in_row_span(const SparseMatrix& m, const std::vector<Rational>& v);

// Matrix export: {"rows":R,"cols":C,"entries":[[r,c,"num/den"],...]} and
// whitespace-separated "row col num/den" lines.
std::string to_triplet_json(const SparseMatrix& m);
SparseMatrix from_triplet_json(const std::string& text);
void write_triplet_text(std::ostream& os, const SparseMatrix& m);
SparseMatrix read_triplet_text(std::istream& is, int rows, int cols);

}  // namespace kc
