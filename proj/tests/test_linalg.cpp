#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "knotcocycle/linalg.hpp"

using namespace kc;

namespace {

SparseMatrix dense(const std::vector<std::vector<int>>& rows) {
  SparseMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
  return m;
}

SparseMatrix identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> v(-3, 3), keep(0, 3);
  SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (keep(rng) == 0) {
        Rational x(v(rng), 2);
        x.canonicalize();
        m.set(r, c, x);
      }
  return m;
}

Rational row_dot(const SparseRow& row, const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& [c, x] : row) s += x * v[static_cast<std::size_t>(c)];
  return s;
}

}  // namespace

TEST_CASE("rank and rref of small matrices") {
  CHECK(rank(SparseMatrix(3, 4)) == 0);
  CHECK(rref(SparseMatrix(3, 4)).matrix.nnz() == 0);
  CHECK(rank(identity(5)) == 5);
  CHECK(rref(identity(5)).matrix == identity(5));
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  auto r = rref(dense({{2, 4, 6}, {1, 1, 1}}));
  CHECK(r.rank() == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
  CHECK(r.matrix.get(0, 2) == -1);
  CHECK(r.matrix.get(1, 2) == 2);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(identity(4)).empty());
  CHECK(kernel_basis(SparseMatrix(1, 5)).size() == 5);
  auto k = kernel_basis(dense({{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{1, 1});
}

TEST_CASE("rref ignores row order and matches the serial reference") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(rng, 12, 10);
    auto ref = rref(m, false);
    CHECK(rref(m, true).matrix == ref.matrix);
    auto p = m;
    std::shuffle(p.data.begin(), p.data.end(), rng);
    CHECK(rref(p, false).matrix == ref.matrix);

    auto k = kernel_basis(m);
    CHECK(static_cast<int>(k.size()) == m.cols - ref.rank());
    for (const auto& v : k)
      for (const auto& row : m.data) CHECK(row_dot(row, v) == 0);
  }
}

TEST_CASE("row span membership") {
  auto m = dense({{1, 0, 1}, {0, 1, 1}});
  CHECK(in_row_span(m, {1, 1, 2}));
  CHECK(in_row_span(m, {Rational(1, 2), 0, Rational(1, 2)}));
  CHECK_FALSE(in_row_span(m, {0, 0, 1}));
}

TEST_CASE("triplet formats round trip") {
  std::mt19937_64 rng(6);
  auto m = random_matrix(rng, 7, 9);
  CHECK(from_triplet_json(to_triplet_json(m)) == m);
  std::stringstream ss;
  write_triplet_text(ss, m);
  CHECK(read_triplet_text(ss, m.rows, m.cols) == m);
  CHECK_THROWS(from_triplet_json("{\"rows\":1,\"cols\":1,\"entries\":[[3,0,\"1\"]]}"));
}
