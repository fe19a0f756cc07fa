#include "knotcocycle/cocycles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "knotcocycle/coboundary.hpp"

namespace kc {

std::vector<Germ> loop_germs(const Loop& loop) {
  std::vector<Germ> out;
  GaussDiagram g = loop.initial;
  for (const auto& m : loop.moves) {
    out.push_back(make_germ(g, m));
    g = out.back().to;
  }
  return out;
}

bool closed(const std::vector<Germ>& germs) {
  if (germs.empty()) return true;
  for (std::size_t i = 0; i + 1 < germs.size(); ++i)
    if (germs[i].to.canonical() != germs[i + 1].from.canonical()) return false;
  return germs.back().to.canonical() == germs.front().from.canonical();
}

std::vector<Germ> reversed(const std::vector<Germ>& germs) {
  std::vector<Germ> out;
  for (auto it = germs.rbegin(); it != germs.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Rational evaluate_loop(const GermSum& alpha, const std::vector<Germ>& germs, bool parallel) {
  if (!closed(germs)) throw std::invalid_argument("evaluate_loop: loop is not closed");
  const long n = static_cast<long>(germs.size());
  std::vector<Rational> parts(germs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = pair_germ(alpha, germs[static_cast<std::size_t>(i)]);
  Rational sum = 0;
  for (const auto& p : parts) sum += p;
  return sum;
}

Rational evaluate_loop(const GermSum& alpha, const Loop& loop) { return evaluate_loop(alpha, loop_germs(loop)); }

std::vector<Germ> do_undo(const GaussDiagram& g, const Move& m) {
  Germ there = make_germ(g, m);
  return {there, there.inverse()};
}

std::vector<Germ> insert_do_undo(const std::vector<Germ>& germs, std::size_t at, Rng& rng, int max_degree) {
  if (germs.empty()) throw std::invalid_argument("insert_do_undo: empty loop");
  const GaussDiagram& g = at < germs.size() ? germs[at].from : germs.back().to;
  auto m = random_move(g, rng, max_degree);
  if (!m) return germs;
  auto pair = do_undo(g, *m);
  std::vector<Germ> out(germs.begin(), germs.begin() + static_cast<long>(at));
  out.insert(out.end(), pair.begin(), pair.end());
  out.insert(out.end(), germs.begin() + static_cast<long>(at), germs.end());
  return out;
}

FormalSum<ArrowDiagram> v2_formula() { return {ArrowDiagram::parse("T1 H2 H1 T2").canonical(), 1}; }

Rational v2(const GaussDiagram& g) { return pair(v2_formula(), g); }

std::vector<Rational> to_vector(const GermSum& s, const std::vector<ArrowGerm>& cols) {
  std::vector<Rational> v(cols.size());
  for (const auto& [k, c] : s) {
    auto it = std::lower_bound(cols.begin(), cols.end(), k);
    if (it == cols.end() || *it != k) throw std::invalid_argument("to_vector: no column for " + k.to_string());
    v[static_cast<std::size_t>(it - cols.begin())] = c;
  }
  return v;
}

GermSum from_vector(const std::vector<Rational>& v, const std::vector<ArrowGerm>& cols) {
  GermSum s;
  for (std::size_t i = 0; i < v.size(); ++i) s.add(cols[i], v[i]);
  return s;
}

namespace {

SparseMatrix matrix_of(const std::vector<GermSum>& rows, const std::vector<ArrowGerm>& cols, bool skip_missing) {
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [k, c] : rows[r]) {
      auto it = std::lower_bound(cols.begin(), cols.end(), k);
      if (it == cols.end() || *it != k) {
        if (skip_missing) continue;
        throw std::logic_error("matrix_of: no column for " + k.to_string());
      }
      m.set(static_cast<int>(r), static_cast<int>(it - cols.begin()), c);
    }
  return m;
}

bool is_partial_or_3germ(const ArrowGerm& g) { return g.kind == GermKind::Delta || g.kind == GermKind::Lambda; }

std::unique_ptr<DegreeSystem> build_system(int degree, bool parallel) {
  auto s = std::make_unique<DegreeSystem>();
  s->degree = degree;
  s->keys = all_degree_keys(degree);
  std::sort(s->keys.begin(), s->keys.end());
  s->variables = filter_variables(degree_variables(degree));
  std::sort(s->variables.begin(), s->variables.end());

  s->equations = cube_equations(degree, parallel);
  if (degree >= 3) {
    auto q = quadruple_equations(degree, parallel);
    s->equations.insert(s->equations.end(), q.begin(), q.end());
  }
  std::vector<GermSum> rows;
  for (const auto& e : s->equations) rows.push_back(e.terms);
  s->full = matrix_of(rows, s->keys, false);
  s->filtered = matrix_of(rows, s->variables, true);

  std::vector<GermSum> trivial;
  for (const auto& a : enumerate_arrow_diagrams(degree)) trivial.push_back(d(a).total());
  s->trivial = matrix_of(trivial, s->keys, false);

  s->full_rank = rank(s->full, parallel);
  s->filtered_rank = rank(s->filtered, parallel);
  s->trivial_rank = rank(s->trivial, parallel);
  // Combinations of d(A) whose I and II coordinates vanish.
  SparseMatrix low(s->trivial.rows, s->trivial.cols);
  for (int r = 0; r < s->trivial.rows; ++r)
    for (const auto& [c, v] : s->trivial.data[static_cast<std::size_t>(r)])
      if (!is_partial_or_3germ(s->keys[static_cast<std::size_t>(c)])) low.set(r, c, v);
  s->pure_trivial_dim = s->trivial_rank - rank(low, parallel);
  s->kernel = kernel_basis(s->filtered, parallel);
  return s;
}

}  // namespace

const DegreeSystem& degree_system(int degree, bool parallel) {
  if (degree < 1 || degree > 3) throw std::invalid_argument("degree_system: degree must be 1, 2 or 3");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = build_system(degree, parallel);
  return *slot;
}

CocycleReport verify_cocycle(const GermSum& alpha, int degree, bool parallel) {
  CocycleReport rep;
  rep.trivial = true;
  const GermSum reduced = monotonic_reduce(alpha);
  std::map<int, GermSum> parts;
  bool pure = true;
  for (const auto& [k, c] : reduced) {
    parts[k.degree()].add(k, c);
    if (!is_partial_or_3germ(k)) pure = false;
  }
  for (const auto& [deg, part] : parts) {
    if (deg > degree || deg < 1 || deg > 3) {
      rep.violations.push_back({deg, "degree:" + std::to_string(deg), 0});
      rep.trivial = false;
      continue;
    }
    const DegreeSystem& sys = degree_system(deg, parallel);
    if (pure)
      for (const auto& [k, c] : part)
        if (int b = banned_by(k)) rep.violations.push_back({deg, "ban" + std::to_string(b) + ":" + k.to_string(), c});
    for (std::size_t r = 0; r < sys.equations.size(); ++r) {
      Rational v = sys.equations[r].terms.dot(part);
      if (v != 0) rep.violations.push_back({deg, "eq:" + std::to_string(r) + ":" + sys.equations[r].source, v});
    }
    if (!in_row_span(sys.trivial, to_vector(part, sys.keys))) rep.trivial = false;
  }
  return rep;
}

}  // namespace kc
