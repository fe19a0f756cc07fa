#include "knotcocycle/germs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kc {

const char* to_string(GermKind k) {
  switch (k) {
    case GermKind::I: return "I";
    case GermKind::II: return "II";
    case GermKind::Delta: return "Delta";
    case GermKind::Lambda: return "Lambda";
  }
  return "?";
}

bool ArrowGerm::monotonic() const {
  if (kind != GermKind::Lambda) return false;
  return edge_data(diagram, marks.at(0)).up == 1;
}

std::vector<int> ArrowGerm::distinguished_arrows() const {
  if (kind == GermKind::I || kind == GermKind::II) return marks;
  std::set<int> ids;
  for (int p : marks) {
    ids.insert(diagram.word()[static_cast<std::size_t>(p)].arrow);
    ids.insert(diagram.word()[static_cast<std::size_t>(p + 1)].arrow);
  }
  return {ids.begin(), ids.end()};
}

ArrowDiagram ArrowGerm::other_side() const {
  if (kind == GermKind::I || kind == GermKind::II) return diagram.without(marks).canonical();
  ArrowDiagram d = diagram;
  for (int p : marks) d = d.switched(p);
  return d.canonical();
}

ArrowGerm ArrowGerm::reversed() const {
  ArrowDiagram r = diagram.reversed();
  switch (kind) {
    case GermKind::I:
    case GermKind::II: {
      auto label = canonical_labels(r.word());
      std::vector<int> m;
      for (int id : marks) m.push_back(label[static_cast<std::size_t>(id)]);
      std::sort(m.begin(), m.end());
      return {kind, r.canonical(), m};
    }
    case GermKind::Delta:
      return arrow_3germ(r, {marks[0], marks[1], marks[2]}).first;
    case GermKind::Lambda:
      return arrow_partial_germ(r, marks[0]).first;
  }
  throw std::logic_error("unknown germ kind");
}

std::string ArrowGerm::to_string() const {
  std::string s = std::string(kc::to_string(kind)) + "[" + diagram.to_string() + " |";
  for (int m : marks) s += " " + std::to_string(kind == GermKind::I || kind == GermKind::II ? m + 1 : m);
  return s + "]";
}

std::pair<ArrowGerm, int> arrow_partial_germ(const ArrowDiagram& side1, int edge) {
  if (epsilon(side1, edge) == 1) return {{GermKind::Lambda, side1.canonical(), {edge}}, 1};
  return {{GermKind::Lambda, side1.switched(edge).canonical(), {edge}}, -1};
}

namespace {

int orientation_edge(const ArrowDiagram& d, const std::array<int, 3>& edges) {
  for (int p : edges)
    if (edge_data(d, p).up == 1) return p;
  return edges[0];
}

ArrowDiagram switched3(const ArrowDiagram& d, const std::array<int, 3>& edges) {
  ArrowDiagram out = d;
  for (int p : edges) out = out.switched(p);
  return out;
}

GaussDiagram switched_gauss(const GaussDiagram& g, const std::vector<int>& edges) {
  ArrowDiagram d = g.arrows();
  for (int p : edges) d = d.switched(p);
  return GaussDiagram(std::move(d), g.signs());
}

int position_of(const ArrowDiagram& d, const End& e) { return d.position(e.arrow, e.kind); }

int edge_position(const ArrowDiagram& d, const std::pair<End, End>& e) {
  return std::min(position_of(d, e.first), position_of(d, e.second));
}

std::vector<int> canonical_marks(const std::vector<End>& word, const std::vector<int>& ids) {
  auto label = canonical_labels(word);
  std::vector<int> out;
  for (int id : ids) out.push_back(label[static_cast<std::size_t>(id)]);
  std::sort(out.begin(), out.end());
  return out;
}

// A subgerm before forgetting signs: the `to` side restricted to the kept
// arrows, the marks on it and the orientation factor relative to gamma.
struct RawSubgerm {
  GermKind kind;
  GaussDiagram side1;
  std::vector<int> marks;  // ids (I/II) or positions (Delta/Lambda)
  int orientation;
};

template <class F>
void visit_raw(const Germ& gamma, const std::vector<int>& kept, F&& f) {
  if (gamma.kind == 1 || gamma.kind == 2) {
    const bool birth = gamma.to.degree() > gamma.from.degree();
    const GaussDiagram& big = birth ? gamma.to : gamma.from;
    std::vector<int> removed;
    for (int id : big.arrows().arrow_ids()) {
      if (std::find(gamma.distinguished.begin(), gamma.distinguished.end(), id) != gamma.distinguished.end()) continue;
      if (std::find(kept.begin(), kept.end(), id) == kept.end()) removed.push_back(id);
    }
    f(RawSubgerm{gamma.kind == 1 ? GermKind::I : GermKind::II, big.without(removed), gamma.distinguished, birth ? 1 : -1});
    return;
  }
  std::vector<int> removed;
  for (int id : gamma.to.arrows().arrow_ids()) {
    if (std::find(gamma.distinguished.begin(), gamma.distinguished.end(), id) != gamma.distinguished.end()) continue;
    if (std::find(kept.begin(), kept.end(), id) == kept.end()) removed.push_back(id);
  }
  GaussDiagram full = gamma.to.without(removed);
  std::vector<int> pos;
  for (const auto& e : gamma.edges) pos.push_back(edge_position(full.arrows(), e));
  f(RawSubgerm{GermKind::Delta, full, pos, 1});
  for (int t : gamma.distinguished) {
    GaussDiagram part = full.without({t});
    for (const auto& e : gamma.edges) {
      if (e.first.arrow == t || e.second.arrow == t) continue;
      f(RawSubgerm{GermKind::Lambda, part, {edge_position(part.arrows(), e)}, 1});
    }
  }
}

// T applied to a raw subgerm: canonical arrow germ and coefficient.
std::pair<ArrowGerm, int> forget(const RawSubgerm& r) {
  int coef = r.orientation * r.side1.sign_product();
  switch (r.kind) {
    case GermKind::I:
    case GermKind::II:
      return {{r.kind, r.side1.arrows().canonical(), canonical_marks(r.side1.word(), r.marks)}, coef};
    case GermKind::Delta: {
      auto [key, f] = arrow_3germ(r.side1.arrows(), {r.marks[0], r.marks[1], r.marks[2]});
      return {key, coef * f};
    }
    case GermKind::Lambda: {
      auto [key, f] = arrow_partial_germ(r.side1.arrows(), r.marks[0]);
      return {key, coef * f};
    }
  }
  throw std::logic_error("unknown germ kind");
}

std::vector<int> others_of(const Germ& gamma) {
  const GaussDiagram& big = gamma.to.degree() >= gamma.from.degree() ? gamma.to : gamma.from;
  std::vector<int> out;
  for (int id : big.arrows().arrow_ids())
    if (std::find(gamma.distinguished.begin(), gamma.distinguished.end(), id) == gamma.distinguished.end())
      out.push_back(id);
  return out;
}

}  // namespace

std::pair<ArrowGerm, int> arrow_3germ(const ArrowDiagram& side1, std::array<int, 3> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<int> marks(edges.begin(), edges.end());
  if (epsilon(side1, orientation_edge(side1, edges)) == 1) return {{GermKind::Delta, side1.canonical(), marks}, 1};
  return {{GermKind::Delta, switched3(side1, edges).canonical(), marks}, -1};
}

Germ Germ::inverse() const {
  Germ g = *this;
  std::swap(g.from, g.to);
  return g;
}

int Germ::coorientation() const {
  if (kind != 3) throw std::logic_error("co-orientation is defined for R3 germs only");
  EdgeData d = edge_data(to, edge_position(to.arrows(), edges.at(0)));
  return d.w * d.epsilon;
}

std::pair<Germ, int> Germ::canonical() const {
  bool ok = kind == 3 ? coorientation() == 1 : to.degree() > from.degree();
  if (ok) return {*this, 1};
  return {inverse(), -1};
}

Germ make_germ(const GaussDiagram& g0, const Move& m) {
  AppliedMove r = apply_move_raw(g0, m);
  Germ g;
  g.from = g0;
  g.to = r.diagram;
  g.distinguished = r.distinguished;
  std::sort(g.distinguished.begin(), g.distinguished.end());
  switch (m.kind) {
    case MoveKind::R1Birth:
    case MoveKind::R1Death: g.kind = 1; break;
    case MoveKind::R2Birth:
    case MoveKind::R2Death: g.kind = 2; break;
    case MoveKind::R3: {
      g.kind = 3;
      // Ends as they sit in `to` (the switch does not change membership).
      for (int p : m.data) {
        g.edges.push_back({g.to.word()[static_cast<std::size_t>(p)], g.to.word()[static_cast<std::size_t>(p + 1)]});
      }
      break;
    }
  }
  return g;
}

void for_each_subgerm_constrained(const Germ& gamma, const std::vector<int>& must_keep,
                                  const std::vector<int>& must_remove, const std::function<void(const ArrowGerm&, int)>& f) {
  std::vector<int> free;
  for (int id : others_of(gamma)) {
    if (std::find(must_keep.begin(), must_keep.end(), id) != must_keep.end()) continue;
    if (std::find(must_remove.begin(), must_remove.end(), id) != must_remove.end()) continue;
    free.push_back(id);
  }
  const std::size_t n = free.size();
  if (n > 30) throw std::length_error("too many free arrows for full subgerm enumeration");
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> kept = must_keep;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) kept.push_back(free[i]);
    visit_raw(gamma, kept, [&](const RawSubgerm& r) {
      auto [key, c] = forget(r);
      f(key, c);
    });
  }
}

void for_each_subgerm(const Germ& gamma, int kept_others, const std::function<void(const ArrowGerm&, int)>& f) {
  if (kept_others < 0) {
    for_each_subgerm_constrained(gamma, {}, {}, f);
    return;
  }
  for_each_subset(others_of(gamma), static_cast<std::size_t>(kept_others), [&](const std::vector<int>& kept) {
    visit_raw(gamma, kept, [&](const RawSubgerm& r) {
      auto [key, c] = forget(r);
      f(key, c);
    });
  });
}

GermSum ti(const Germ& gamma) {
  GermSum out;
  for_each_subgerm(gamma, -1, [&](const ArrowGerm& k, int c) { out.add(k, c); });
  return out;
}

std::size_t subgerm_count(const Germ& gamma) {
  std::size_t n = 0;
  for_each_subgerm(gamma, -1, [&](const ArrowGerm&, int) { ++n; });
  return n;
}

Rational pair_germ(const GermSum& alpha, const Germ& gamma) {
  if (alpha.empty()) return 0;
  std::set<int> sizes;
  for (const auto& [k, c] : alpha) {
    int d = k.degree();
    switch (k.kind) {
      case GermKind::I:
        if (gamma.kind == 1) sizes.insert(d - 1);
        break;
      case GermKind::II:
        if (gamma.kind == 2) sizes.insert(d - 2);
        break;
      case GermKind::Delta:
        if (gamma.kind == 3) sizes.insert(d - 3);
        break;
      case GermKind::Lambda:
        if (gamma.kind == 3) sizes.insert(d - 2);
        break;
    }
  }
  Rational r = 0;
  for (int k : sizes) {
    if (k < 0) continue;
    for_each_subgerm(gamma, k, [&](const ArrowGerm& key, int c) {
      auto it = alpha.terms().find(key);
      if (it != alpha.terms().end()) r += it->second * c;
    });
  }
  return r;
}

Rational pair_germ_full(const GermSum& alpha, const Germ& gamma) { return alpha.dot(ti(gamma)); }

namespace {

struct SignedKey {
  GermKind kind;
  GaussDiagram diagram;
  std::vector<int> marks;
  auto operator<=>(const SignedKey&) const = default;
};

// Canonical signed key with the same side convention as arrow germs.
std::pair<SignedKey, int> signed_key(const RawSubgerm& r) {
  switch (r.kind) {
    case GermKind::I:
    case GermKind::II:
      return {{r.kind, r.side1.canonical(), canonical_marks(r.side1.word(), r.marks)}, r.orientation};
    case GermKind::Delta: {
      std::array<int, 3> e{r.marks[0], r.marks[1], r.marks[2]};
      if (epsilon(r.side1.arrows(), orientation_edge(r.side1.arrows(), e)) == 1)
        return {{r.kind, r.side1.canonical(), r.marks}, r.orientation};
      return {{r.kind, switched_gauss(r.side1, r.marks).canonical(), r.marks}, -r.orientation};
    }
    case GermKind::Lambda: {
      if (epsilon(r.side1.arrows(), r.marks[0]) == 1) return {{r.kind, r.side1.canonical(), r.marks}, r.orientation};
      return {{r.kind, switched_gauss(r.side1, r.marks).canonical(), r.marks}, -r.orientation};
    }
  }
  throw std::logic_error("unknown germ kind");
}

}  // namespace

Rational pair_germ_signed(const GermSum& alpha, const Germ& gamma) {
  // S(alpha): every sign completion of every term.
  FormalSum<SignedKey> s_alpha;
  for (const auto& [k, c] : alpha) {
    for (const auto& [g, sgn] : completions(k.diagram)) s_alpha.add(SignedKey{k.kind, g, k.marks}, c * sgn);
  }
  // I(gamma): signed subgerms.
  FormalSum<SignedKey> i_gamma;
  const auto others = others_of(gamma);
  const std::size_t n = others.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> kept;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) kept.push_back(others[i]);
    visit_raw(gamma, kept, [&](const RawSubgerm& r) {
      auto [key, o] = signed_key(r);
      i_gamma.add(key, o);
    });
  }
  return s_alpha.dot(i_gamma);
}

namespace {

// Replaces arrow `gone` by a new arrow c: c keeps the far end of `gone`
// and gets its other end right after the opposite-kind end of `stay`.
ArrowGerm relator_partner(const ArrowDiagram& a, int stay, int gone, EndKind switched_kind) {
  const int c = a.max_id() + 1;
  const EndKind other = switched_kind == EndKind::Tail ? EndKind::Head : EndKind::Tail;
  std::vector<End> w;
  for (const auto& e : a.word()) {
    if (e.arrow == gone) {
      if (e.kind == other) w.push_back({c, other});
      continue;
    }
    w.push_back(e);
    if (e.arrow == stay && e.kind == other) w.push_back({c, switched_kind});
  }
  ArrowDiagram d(std::move(w));
  int pos = d.position(stay, other);
  return arrow_partial_germ(d, pos).first;
}

}  // namespace

GermSum triangle_relator(const ArrowGerm& x) {
  if (x.kind != GermKind::Lambda || x.monotonic()) {
    throw std::invalid_argument("triangle relators are attached to non-monotonic partial germs");
  }
  const auto& w = x.diagram.word();
  const int p = x.marks[0];
  const End l = w[static_cast<std::size_t>(p)], r = w[static_cast<std::size_t>(p + 1)];
  const EndKind kind = l.kind;  // both ends have this kind
  GermSum out(x, 1);
  out.add(relator_partner(x.diagram, l.arrow, r.arrow, kind), -1);
  out.add(relator_partner(x.diagram, r.arrow, l.arrow, kind), -1);
  return out;
}

GermSum monotonic_reduce(const ArrowGerm& g) {
  if (g.kind != GermKind::Lambda || g.monotonic()) return GermSum(g, 1);
  GermSum rel = triangle_relator(g);
  // g = g - rel (mod relators), which only contains monotonic terms.
  GermSum out;
  out.add(g, 1);
  out.add(rel, -1);
  return out;
}

GermSum monotonic_reduce(const GermSum& s) {
  GermSum out;
  for (const auto& [k, c] : s) out.add(monotonic_reduce(k), c);
  return out;
}

std::vector<ArrowDiagram> enumerate_arrow_diagrams(int degree) {
  std::vector<ArrowDiagram> out;
  std::vector<End> w;
  std::vector<int> open_kind(static_cast<std::size_t>(degree), -1);  // -1 unopened, 0/1 kind of first end, 2 closed
  std::function<void(int)> rec = [&](int opened) {
    if (static_cast<int>(w.size()) == 2 * degree) {
      out.emplace_back(w);
      return;
    }
    for (int id = 0; id < opened; ++id) {
      auto& st = open_kind[static_cast<std::size_t>(id)];
      if (st == 0 || st == 1) {
        int saved = st;
        w.push_back({id, saved == 0 ? EndKind::Head : EndKind::Tail});
        st = 2;
        rec(opened);
        st = saved;
        w.pop_back();
      }
    }
    if (opened < degree) {
      for (int k = 0; k < 2; ++k) {
        open_kind[static_cast<std::size_t>(opened)] = k;
        w.push_back({opened, k == 0 ? EndKind::Tail : EndKind::Head});
        rec(opened + 1);
        w.pop_back();
        open_kind[static_cast<std::size_t>(opened)] = -1;
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArrowGerm> enumerate_arrow_germs(GermKind kind, int degree, bool monotonic_only) {
  std::set<ArrowGerm> keys;
  for (const auto& a : enumerate_arrow_diagrams(degree)) {
    switch (kind) {
      case GermKind::I:
        for (int id : a.arrow_ids())
          if (a.isolated(id)) keys.insert({kind, a, {id}});
        break;
      case GermKind::II: {
        auto ids = a.arrow_ids();
        for (std::size_t i = 0; i < ids.size(); ++i)
          for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (a.r2_pair(ids[i], ids[j])) keys.insert({kind, a, {ids[i], ids[j]}});
        break;
      }
      case GermKind::Delta:
        for (const auto& t : triangles(a))
          if (r3_shape(a, t)) keys.insert(arrow_3germ(a, t.edges).first);
        break;
      case GermKind::Lambda: {
        const auto& w = a.word();
        for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
          if (w[static_cast<std::size_t>(p)].arrow == w[static_cast<std::size_t>(p + 1)].arrow) continue;
          ArrowGerm k = arrow_partial_germ(a, p).first;
          if (!monotonic_only || k.monotonic()) keys.insert(k);
        }
        break;
      }
    }
  }
  return {keys.begin(), keys.end()};
}

}  // namespace kc

namespace kc {

Germ formal_3germ(const GaussDiagram& g, const Triangle& t) {
  ArrowDiagram sw = g.arrows();
  for (int p : t.edges) sw = sw.switched(p);
  Germ gm;
  gm.kind = 3;
  gm.to = g;
  gm.from = GaussDiagram(sw, g.signs());
  gm.distinguished = {t.arrows.begin(), t.arrows.end()};
  for (int p : t.edges) gm.edges.push_back({g.word()[static_cast<std::size_t>(p)], g.word()[static_cast<std::size_t>(p + 1)]});
  return gm;
}

LemmaCheck check_triangle_lemma(int lo, int hi, bool parallel) {
  std::vector<GermSum> rel;
  for (int d = lo; d <= hi; ++d)
    for (const auto& x : enumerate_arrow_germs(GermKind::Lambda, d, false))
      if (!x.monotonic()) rel.push_back(triangle_relator(x));
  std::vector<GaussDiagram> gs;
  std::vector<Triangle> ts;
  for (int degree = lo + 1; degree <= hi + 1; ++degree)
    for (const auto& a : enumerate_arrow_diagrams(degree))
      for (const auto& t : triangles(a))
        for (int mask = 0; mask < (1 << degree); ++mask) {
          std::vector<int> s(static_cast<std::size_t>(degree));
          for (int i = 0; i < degree; ++i) s[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
          gs.emplace_back(a, s);
          ts.push_back(t);
        }
  LemmaCheck out;
  out.relators = static_cast<int>(rel.size());
  out.germs = static_cast<int>(gs.size());
  int bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad) if (parallel)
  for (long i = 0; i < static_cast<long>(gs.size()); ++i) {
    const auto& g = gs[static_cast<std::size_t>(i)];
    const auto& t = ts[static_cast<std::size_t>(i)];
    const GermSum v = ti(formal_3germ(g, t));
    bool annihilated = true;
    for (const auto& r : rel)
      if (r.dot(v) != 0) {
        annihilated = false;
        break;
      }
    if (annihilated != validate_r3(g, t.edges)) ++bad;
  }
  out.mismatches = bad;
  return out;
}

}  // namespace kc
