#include "knotcocycle/linalg.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kc {

void SparseMatrix::set(int r, int c, const Rational& value) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
  Rational v = value;
  v.canonicalize();
  auto& row = data[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

Rational SparseMatrix::get(int r, int c) const {
  const auto& row = data.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
  return it != row.end() && it->first == c ? it->second : Rational(0);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data) n += r.size();
  return n;
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

// Clears denominators and divides out the content; leading entry positive.
IntRow primitive(const SparseRow& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.push_back({c, mpz_class(v.get_num() * (l / v.get_den()))});
  return out;
}

void normalize(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const mpz_class* entry(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// row <- a*row - b*pivot, where b/a eliminates pivot's leading column.
void eliminate(IntRow& row, const IntRow& pivot, int col) {
  const mpz_class* e = entry(row, col);
  if (!e) return;
  const mpz_class b = *e;
  const mpz_class& a = *entry(pivot, col);
  mpz_class g = gcd(a, b);
  const mpz_class sa = a / g, sb = b / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back({row[i].first, row[i].second * sa});
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.push_back({pivot[j].first, -pivot[j].second * sb});
      ++j;
    } else {
      mpz_class v = row[i].second * sa - pivot[j].second * sb;
      if (v != 0) out.push_back({row[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  normalize(out);
  row = std::move(out);
}

}  // namespace

Rref rref(const SparseMatrix& m, bool parallel) {
  std::vector<IntRow> rows;
  for (const auto& r : m.data) {
    IntRow p = primitive(r);
    normalize(p);
    if (!p.empty()) rows.push_back(std::move(p));
  }
  std::vector<char> used(rows.size(), 0);
  std::vector<std::size_t> order;
  while (true) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size() ||
          (rows[i].size() == rows[best].size() && rows[i].front().first < rows[best].front().first))
        best = i;
    }
    if (best == rows.size()) break;
    used[best] = 1;
    order.push_back(best);
    const int col = rows[best].front().first;
    const IntRow pivot = rows[best];
    const auto n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < n; ++i)
      if (static_cast<std::size_t>(i) != best) eliminate(rows[static_cast<std::size_t>(i)], pivot, col);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].front().first < rows[b].front().first; });
  Rref out;
  out.matrix = SparseMatrix(static_cast<int>(order.size()), m.cols);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const IntRow& r = rows[order[k]];
    const mpz_class lead = r.front().second;
    SparseRow row;
    for (const auto& [c, v] : r) {
      Rational q(v, lead);
      q.canonicalize();
      row.push_back({c, q});
    }
    out.matrix.data[k] = std::move(row);
    out.pivots.push_back(r.front().first);
  }
  return out;
}

int rank(const SparseMatrix& m, bool parallel) { return rref(m, parallel).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m, bool parallel) {
  const Rref r = rref(m, parallel);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[static_cast<std::size_t>(r.pivots[k])] = -r.matrix.get(static_cast<int>(k), f);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_row_span(const SparseMatrix& m, const std::vector<Rational>& v) {
  SparseMatrix ext(m.rows + 1, m.cols);
  ext.data = m.data;
  ext.data.emplace_back();
  for (int c = 0; c < m.cols; ++c)
    if (v[static_cast<std::size_t>(c)] != 0) ext.data.back().push_back({c, v[static_cast<std::size_t>(c)]});
  return rank(ext) == rank(m);
}

std::string to_triplet_json(const SparseMatrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["entries"] = nlohmann::json::array();
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.data[static_cast<std::size_t>(r)]) j["entries"].push_back({r, c, v.get_str()});
  return j.dump();
}

SparseMatrix from_triplet_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SparseMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries")) m.set(e.at(0).get<int>(), e.at(1).get<int>(), Rational(e.at(2).get<std::string>()));
  return m;
}

void write_triplet_text(std::ostream& os, const SparseMatrix& m) {
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.data[static_cast<std::size_t>(r)]) os << r << ' ' << c << ' ' << v.get_num() << '/' << v.get_den() << '\n';
}

SparseMatrix read_triplet_text(std::istream& is, int rows, int cols) {
  SparseMatrix m(rows, cols);
  int r = 0, c = 0;
  std::string q;
  while (is >> r >> c >> q) {
    Rational v(q);
    v.canonicalize();
    m.set(r, c, v);
  }
  return m;
}

}  // namespace kc
