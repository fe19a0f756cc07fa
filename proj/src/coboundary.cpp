#include "knotcocycle/coboundary.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotcocycle/linalg.hpp"

namespace kc {

GermSum CoboundaryValue::total() const {
  GermSum s = I;
  s += II;
  s += Delta;
  s += Lambda;
  return s;
}

FormalSum<GaussDiagram> boundary(const Germ& gamma) {
  FormalSum<GaussDiagram> s(gamma.to.canonical(), 1);
  s.add(gamma.from.canonical(), -1);
  return s;
}

CoboundaryValue d(const ArrowDiagram& input) {
  const ArrowDiagram a = input.canonical();
  CoboundaryValue v;
  const auto ids = a.arrow_ids();
  for (int id : ids)
    if (a.isolated(id)) v.I.add(ArrowGerm{GermKind::I, a, {id}}, 1);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (a.r2_pair(ids[i], ids[j])) v.II.add(ArrowGerm{GermKind::II, a, {ids[i], ids[j]}}, 1);
  for (const auto& t : triangles(a)) {
    if (!r3_shape(a, t)) continue;
    auto [key, f] = arrow_3germ(a, t.edges);
    v.Delta.add(key, f);
  }
  GermSum partial;
  const auto& w = a.word();
  for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
    if (w[static_cast<std::size_t>(p)].arrow == w[static_cast<std::size_t>(p + 1)].arrow) continue;
    auto [key, f] = arrow_partial_germ(a, p);
    partial.add(key, f);
  }
  v.Lambda = monotonic_reduce(partial);
  return v;
}

CoboundaryValue d(const FormalSum<ArrowDiagram>& a) {
  CoboundaryValue v;
  for (const auto& [k, c] : a) {
    CoboundaryValue t = d(k);
    v.I.add(t.I, c);
    v.II.add(t.II, c);
    v.Delta.add(t.Delta, c);
    v.Lambda.add(t.Lambda, c);
  }
  return v;
}

StokesResult stokes_check(const FormalSum<ArrowDiagram>& a, const Germ& gamma) {
  StokesResult r;
  r.lhs = pair_germ(d(a).total(), gamma);
  r.rhs = pair(a, gamma.to) - pair(a, gamma.from);
  return r;
}

std::vector<FormalSum<ArrowDiagram>> coboundary_kernel(int max_degree, bool parallel) {
  if (max_degree > 4) throw std::invalid_argument("coboundary_kernel: degree cap is 4");
  std::vector<ArrowDiagram> basis;
  for (int deg = 1; deg <= max_degree; ++deg)
    for (const auto& a : enumerate_arrow_diagrams(deg)) basis.push_back(a);
  std::vector<GermSum> images(basis.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long j = 0; j < static_cast<long>(basis.size()); ++j) images[static_cast<std::size_t>(j)] = d(basis[static_cast<std::size_t>(j)]).total();
  std::vector<ArrowGerm> rows;
  for (const auto& im : images)
    for (const auto& [k, c] : im) rows.push_back(k);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  // One column per diagram, one row per germ coordinate.
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [k, c] : images[j])
      m.set(static_cast<int>(std::lower_bound(rows.begin(), rows.end(), k) - rows.begin()), static_cast<int>(j), c);
  std::vector<FormalSum<ArrowDiagram>> out;
  for (const auto& v : kernel_basis(m, parallel)) {
    FormalSum<ArrowDiagram> s;
    for (std::size_t j = 0; j < v.size(); ++j) s.add(basis[j], v[j]);
    out.push_back(s);
  }
  return out;
}

}  // namespace kc
