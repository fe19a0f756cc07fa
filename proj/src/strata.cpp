#include "knotcocycle/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <omp.h>

#include "knotcocycle/linalg.hpp"

namespace kc {

namespace {

bool same_diagram(const GaussDiagram& a, const GaussDiagram& b) {
  if (a.word() != b.word()) return false;
  for (int id : a.arrows().arrow_ids())
    if (a.sign(id) != b.sign(id)) return false;
  return true;
}

std::vector<int> sign_vector(int mask, int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
  return s;
}

std::array<int, 3> triangle_arrows(const GaussDiagram& g, const Move& m) {
  Triangle t;
  triangle_at(g.arrows(), {m.data[0], m.data[1], m.data[2]}, t);
  return t.arrows;
}

bool contains(const std::array<int, 3>& a, int x) { return std::find(a.begin(), a.end(), x) != a.end(); }

// All cube loops starting at d0.
void cube_loops_at(const GaussDiagram& d0, std::vector<Meridian>& out) {
  const auto original = d0.arrows().arrow_ids();
  for (const auto& birth : enumerate_moves(d0, MoveKind::R2Birth)) {
    const AppliedMove d1 = apply_move_raw(d0, birth);
    const int x1 = d1.distinguished[0], x2 = d1.distinguished[1];
    for (int first : {x1, x2}) {
      const int second = first == x1 ? x2 : x1;
      for (const auto& m1 : enumerate_moves(d1.diagram, MoveKind::R3)) {
        const auto t1 = triangle_arrows(d1.diagram, m1);
        if (!contains(t1, first) || contains(t1, second)) continue;
        const GaussDiagram d2 = apply_move_raw(d1.diagram, m1).diagram;
        for (const auto& m2 : enumerate_moves(d2, MoveKind::R3)) {
          const auto t2 = triangle_arrows(d2, m2);
          if (!contains(t2, second)) continue;
          // Same two original arrows in both moves.
          bool same = true;
          for (int id : t1)
            if (id != first && !contains(t2, id)) same = false;
          if (!same) continue;
          const GaussDiagram d3 = apply_move_raw(d2, m2).diagram;
          const Move death = r2_death(x1, x2);
          if (!applicable(d3, death)) continue;
          const GaussDiagram d4 = apply_move_raw(d3, death).diagram;
          if (!same_diagram(d4, d0)) continue;
          Meridian m;
          m.tag = "cube";
          m.germs = {make_germ(d0, birth), make_germ(d1.diagram, m1), make_germ(d2, m2), make_germ(d3, death)};
          m.moves = {birth, m1, m2, death};
          for (int id : original)
            if (!contains(t1, id)) m.bystanders.push_back(id);
          out.push_back(std::move(m));
        }
      }
    }
  }
}

std::vector<GaussDiagram> signed_diagrams(int degree) {
  std::vector<GaussDiagram> out;
  for (const auto& a : enumerate_arrow_diagrams(degree))
    for (int mask = 0; mask < (1 << degree); ++mask) out.emplace_back(a, sign_vector(mask, degree));
  return out;
}

template <class F>
std::vector<Meridian> collect(const std::vector<GaussDiagram>& bases, bool parallel, F&& loops_at) {
  std::vector<std::vector<Meridian>> per(bases.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < bases.size(); ++i) loops_at(bases[i], per[i]);
  std::vector<Meridian> out;
  for (auto& v : per)
    for (auto& m : v) out.push_back(std::move(m));
  return out;
}

}  // namespace

bool Meridian::closed() const {
  if (germs.empty()) return false;
  FormalSum<GaussDiagram> total;
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const auto& next = germs[(i + 1) % germs.size()];
    if (!same_diagram(germs[i].to, next.from)) return false;
    total.add(germs[i].to.canonical(), 1);
    total.add(germs[i].from.canonical(), -1);
  }
  return total.empty();
}

std::vector<Meridian> enumerate_cube_meridians(int bystanders, bool parallel) {
  return collect(signed_diagrams(2 + bystanders), parallel,
                 [](const GaussDiagram& d0, std::vector<Meridian>& out) { cube_loops_at(d0, out); });
}

namespace {

// Arrow id of the crossing between strands i < j.
int pair_id(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int ids[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return ids[i][j];
}

// Strands of the crossing with the given arrow id.
std::pair<int, int> strands_of(int id) {
  static const std::pair<int, int> s[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return s[id];
}

int strand_triple(const std::array<int, 3>& arrows) {
  std::set<int> strands;
  for (int a : arrows) {
    auto [i, j] = strands_of(a);
    strands.insert(i);
    strands.insert(j);
  }
  if (strands.size() != 3) return -1;
  int missing = 0;
  while (strands.count(missing)) ++missing;
  return missing;  // the triangle is named after the strand it avoids
}

struct Path {
  std::vector<Germ> germs;
  std::vector<Move> moves;
  GaussDiagram end;
};

void r3_paths(const GaussDiagram& g, int used, Path& stack, std::vector<Path>& out) {
  if (used == 15) {
    out.push_back({stack.germs, stack.moves, g});
    return;
  }
  for (const auto& m : enumerate_moves(g, MoveKind::R3)) {
    int t = strand_triple(triangle_arrows(g, m));
    if (t < 0 || (used >> t & 1)) continue;
    stack.germs.push_back(make_germ(g, m));
    stack.moves.push_back(m);
    r3_paths(stack.germs.back().to, used | 1 << t, stack, out);
    stack.germs.pop_back();
    stack.moves.pop_back();
  }
}

void quadruple_loops_at(const GaussDiagram& d0, std::vector<Meridian>& out) {
  std::vector<Path> paths;
  Path stack;
  r3_paths(d0, 0, stack, paths);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!same_diagram(paths[i].end, paths[j].end)) continue;
      Meridian m;
      m.tag = "quadruple";
      m.germs = paths[i].germs;
      m.moves = paths[i].moves;
      for (auto it = paths[j].germs.rbegin(); it != paths[j].germs.rend(); ++it) m.germs.push_back(it->inverse());
      // An R3 move is undone by the same switch.
      for (auto it = paths[j].moves.rbegin(); it != paths[j].moves.rend(); ++it) m.moves.push_back(*it);
      out.push_back(std::move(m));
    }
  }
}

}  // namespace

std::vector<GaussDiagram> quadruple_bases() {
  std::vector<GaussDiagram> out;
  std::array<int, 4> order{0, 1, 2, 3};
  do {
    std::array<int, 4> height{0, 1, 2, 3};
    do {
      std::vector<End> w;
      for (int i : order)
        for (int j = 0; j < 4; ++j) {
          if (j == i) continue;
          w.push_back({pair_id(i, j), height[static_cast<std::size_t>(i)] > height[static_cast<std::size_t>(j)] ? EndKind::Tail : EndKind::Head});
        }
      out.emplace_back(ArrowDiagram(std::move(w)), std::vector<int>(6, 1));
    } while (std::next_permutation(height.begin(), height.end()));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<Meridian> enumerate_quadruple_meridians(bool parallel) {
  return collect(quadruple_bases(), parallel,
                 [](const GaussDiagram& d0, std::vector<Meridian>& out) { quadruple_loops_at(d0, out); });
}

std::map<int, GermSum> meridian_equations(const Meridian& m, const std::vector<int>& s) {
  std::vector<int> removed;
  for (int b : m.bystanders)
    if (std::find(s.begin(), s.end(), b) == s.end()) removed.push_back(b);
  // Cochains live in the monotonic basis, so they pair with T(I(m; s)) through
  // its monotonic coordinates only; the others are dropped, not reduced.
  std::map<int, GermSum> out;
  for (const auto& g : m.germs)
    for_each_subgerm_constrained(g, s, removed, [&](const ArrowGerm& k, int c) {
      if (k.kind != GermKind::Lambda || k.monotonic()) out[k.degree()].add(k, c);
    });
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

GermSum normalized(const GermSum& eq) {
  if (eq.empty()) return eq;
  GermSum out = eq;
  out *= 1 / Rational(eq.begin()->second);
  return out;
}

GermSum reversed(const GermSum& s) {
  GermSum out;
  for (const auto& [k, c] : s) out.add(k.reversed(), c);
  return out;
}

std::vector<ArrowGerm> degree_variables(int degree) {
  auto out = enumerate_arrow_germs(GermKind::Delta, degree);
  auto lam = enumerate_arrow_germs(GermKind::Lambda, degree);
  out.insert(out.end(), lam.begin(), lam.end());
  return out;
}

std::vector<ArrowGerm> all_degree_keys(int degree) {
  auto out = enumerate_arrow_germs(GermKind::I, degree);
  auto two = enumerate_arrow_germs(GermKind::II, degree);
  out.insert(out.end(), two.begin(), two.end());
  auto rest = degree_variables(degree);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int banned_by(const ArrowGerm& g) {
  if (g.kind != GermKind::Delta && g.kind != GermKind::Lambda) return 0;
  const auto dist = g.distinguished_arrows();
  std::vector<int> others;
  for (int id : g.diagram.arrow_ids())
    if (std::find(dist.begin(), dist.end(), id) == dist.end()) others.push_back(id);
  for (int id : others)
    if (g.diagram.isolated(id)) return 1;
  for (std::size_t i = 0; i < others.size(); ++i)
    for (std::size_t j = i + 1; j < others.size(); ++j)
      if (g.diagram.r2_pair(others[i], others[j])) return 2;
  // Both sides share arrow ids: the other side only switches edge ends.
  ArrowDiagram other = g.diagram;
  for (int p : g.marks) other = other.switched(p);
  for (const ArrowDiagram* side : std::array<const ArrowDiagram*, 2>{&g.diagram, &other}) {
    for (int t : dist) {
      if (!side->isolated(t)) continue;
      if (g.kind == GermKind::Lambda) return 3;
      std::vector<int> rest;
      for (int id : dist)
        if (id != t) rest.push_back(id);
      if (side->without({t}).r2_pair(rest[0], rest[1])) return 4;
    }
  }
  return 0;
}

std::vector<ArrowGerm> filter_variables(const std::vector<ArrowGerm>& basis) {
  std::vector<ArrowGerm> out;
  for (const auto& g : basis)
    if (banned_by(g) == 0) out.push_back(g);
  return out;
}

namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& ids) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask >> i & 1) s.push_back(ids[i]);
    out.push_back(s);
  }
  return out;
}

std::vector<Equation> dedup_equations(const std::vector<Meridian>& ms, int degree, bool all_s, bool parallel) {
  std::vector<std::vector<Equation>> per(ms.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& m = ms[i];
    for (const auto& s : all_s ? subsets(m.bystanders) : std::vector<std::vector<int>>{{}}) {
      auto eqs = meridian_equations(m, s);
      auto it = eqs.find(degree);
      if (it == eqs.end()) continue;
      per[i].push_back({normalized(it->second), m.tag + " s=" + std::to_string(s.size())});
    }
  }
  std::set<GermSum> seen;
  std::vector<Equation> out;
  for (auto& v : per)
    for (auto& e : v)
      if (seen.insert(e.terms).second) out.push_back(std::move(e));
  return out;
}

}  // namespace

std::vector<Equation> cube_equations(int degree, bool parallel) {
  std::vector<Meridian> ms;
  for (int by = 0; by <= std::max(0, degree - 2); ++by) {
    auto part = enumerate_cube_meridians(by, parallel);
    ms.insert(ms.end(), part.begin(), part.end());
  }
  return dedup_equations(ms, degree, true, parallel);
}

std::vector<Equation> quadruple_equations(int degree, bool parallel) {
  return dedup_equations(enumerate_quadruple_meridians(parallel), degree, false, parallel);
}


GermSum restricted(const GermSum& eq, const std::vector<ArrowGerm>& vars) {
  GermSum out;
  for (const auto& [k, c] : eq)
    if (std::binary_search(vars.begin(), vars.end(), k)) out.add(k, c);
  return out;
}

namespace {

GaussDiagram rotated(const GaussDiagram& g, std::size_t r) {
  auto w = g.word();
  std::rotate(w.begin(), w.begin() + static_cast<long>(r), w.end());
  return GaussDiagram(ArrowDiagram(std::move(w)), g.signs()).canonical();
}

// Smallest canonical form over all basepoint positions.
GaussDiagram unbased(const GaussDiagram& g) {
  GaussDiagram best = g.canonical();
  for (std::size_t r = 1; r < g.word().size(); ++r) best = std::min(best, rotated(g, r));
  return best;
}

using LoopKey = std::vector<GaussDiagram>;

LoopKey loop_key(const Meridian& m) {
  LoopKey a;
  for (const auto& g : m.germs) a.push_back(unbased(g.from));
  LoopKey b{a[0]};
  for (std::size_t i = a.size() - 1; i > 0; --i) b.push_back(a[i]);
  return std::min(a, b);
}

GermSum up_to_sign(const GermSum& e) {
  GermSum n = normalized(e), m = n;
  m *= -1;
  return std::min(n, m);
}

std::map<LoopKey, std::vector<std::size_t>> group_loops(const std::vector<Meridian>& ms) {
  std::map<LoopKey, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < ms.size(); ++i) out[loop_key(ms[i])].push_back(i);
  return out;
}

}  // namespace

int unbased_cube_loop_count(bool parallel) {
  return static_cast<int>(group_loops(enumerate_cube_meridians(0, parallel)).size());
}

std::vector<CubeScene> cube_scenes(bool parallel) {
  const auto ms = enumerate_cube_meridians(0, parallel);
  const auto vars = degree_variables(3);
  auto filtered = filter_variables(vars);
  std::sort(filtered.begin(), filtered.end());
  std::map<std::set<GermSum>, CubeScene> scenes;
  for (const auto& [key, idx] : group_loops(ms)) {
    std::set<GermSum> eqs, rev;
    for (std::size_t i : idx) {
      auto e = meridian_equations(ms[i], {});
      if (!e.count(3)) continue;
      GermSum r = restricted(e[3], filtered);
      if (r.empty()) continue;
      eqs.insert(up_to_sign(r));
      rev.insert(up_to_sign(reversed(r)));
    }
    CubeScene& s = scenes[std::min(eqs, rev)];
    if (s.equations.empty()) s.equations.assign(std::min(eqs, rev).begin(), std::min(eqs, rev).end());
    ++s.loops;
    for (std::size_t i : idx) s.instances.push_back(ms[i]);
  }
  std::vector<CubeScene> out;
  for (auto& [k, s] : scenes) out.push_back(std::move(s));
  return out;
}

namespace {

SparseMatrix rows_over(const std::vector<GermSum>& eqs, const std::vector<ArrowGerm>& cols) {
  SparseMatrix m(static_cast<int>(eqs.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [k, c] : eqs[r]) {
      auto it = std::lower_bound(cols.begin(), cols.end(), k);
      if (it != cols.end() && *it == k) m.set(static_cast<int>(r), static_cast<int>(it - cols.begin()), c);
    }
  return m;
}

}  // namespace

std::vector<GermSum> tetrahedron_pair(bool parallel) {
  auto vars = filter_variables(degree_variables(3));
  std::sort(vars.begin(), vars.end());
  std::vector<GermSum> cube;
  for (const auto& e : cube_equations(3, parallel)) cube.push_back(restricted(e.terms, vars));
  const int base = rank(rows_over(cube, vars), parallel);
  std::set<GermSum> candidates;
  for (const auto& e : quadruple_equations(3, parallel)) {
    GermSum r = restricted(e.terms, vars);
    if (!r.empty()) candidates.insert(up_to_sign(r));
  }
  std::vector<GermSum> sorted(candidates.begin(), candidates.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const GermSum& a, const GermSum& b) { return a.size() < b.size(); });
  for (const auto& e : sorted) {
    GermSum r = up_to_sign(reversed(e));
    auto rows = cube;
    rows.push_back(e);
    rows.push_back(r);
    if (rank(rows_over(rows, vars), parallel) == base + 2) return {e, r};
  }
  return {};
}

}  // namespace kc
