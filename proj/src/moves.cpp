#include "knotcocycle/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kc {

namespace {

int sign_at(const GaussDiagram& g, int arrow) { return g.sign(arrow); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

EdgeData edge_data(const ArrowDiagram& a, int pos) {
  const auto& w = a.word();
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size())) {
    throw std::invalid_argument("epsilon undefined here: edge touches the point at infinity");
  }
  const End& l = w[static_cast<std::size_t>(pos)];
  const End& r = w[static_cast<std::size_t>(pos + 1)];
  if (l.arrow == r.arrow) throw std::invalid_argument("epsilon undefined here: edge bounded by a single arrow");
  EdgeData d;
  d.eta = a.interleaved(l.arrow, r.arrow) ? 1 : -1;
  d.up = (l.kind == EndKind::Head) + (r.kind == EndKind::Head);
  d.epsilon = d.up % 2 == 0 ? d.eta : -d.eta;
  return d;
}

EdgeData edge_data(const GaussDiagram& g, int pos) {
  EdgeData d = edge_data(g.arrows(), pos);
  const auto& w = g.word();
  d.w = g.sign(w[static_cast<std::size_t>(pos)].arrow) * g.sign(w[static_cast<std::size_t>(pos + 1)].arrow);
  return d;
}

int epsilon(const ArrowDiagram& a, int pos) { return edge_data(a, pos).epsilon; }

bool triangle_at(const ArrowDiagram& a, std::array<int, 3> edges, Triangle& out) {
  std::sort(edges.begin(), edges.end());
  const auto& w = a.word();
  const int len = static_cast<int>(w.size());
  for (int i = 0; i < 3; ++i) {
    if (edges[i] < 0 || edges[i] + 1 >= len) return false;
    if (i > 0 && edges[i] < edges[i - 1] + 2) return false;
  }
  std::map<int, int> count;
  for (int e : edges) {
    int l = w[static_cast<std::size_t>(e)].arrow, r = w[static_cast<std::size_t>(e + 1)].arrow;
    if (l == r) return false;
    ++count[l];
    ++count[r];
  }
  if (count.size() != 3) return false;
  int k = 0;
  for (auto [id, c] : count) {
    if (c != 2) return false;
    out.arrows[static_cast<std::size_t>(k++)] = id;
  }
  // Each pair of arrows must share exactly one edge.
  std::set<std::pair<int, int>> pairs;
  for (int e : edges) {
    int l = w[static_cast<std::size_t>(e)].arrow, r = w[static_cast<std::size_t>(e + 1)].arrow;
    pairs.insert({std::min(l, r), std::max(l, r)});
  }
  if (pairs.size() != 3) return false;
  out.edges = edges;
  return true;
}

std::vector<Triangle> triangles(const ArrowDiagram& a) {
  const auto& w = a.word();
  const int len = static_cast<int>(w.size());
  std::vector<int> edges;
  for (int p = 0; p + 1 < len; ++p)
    if (w[static_cast<std::size_t>(p)].arrow != w[static_cast<std::size_t>(p + 1)].arrow) edges.push_back(p);
  // Index edges by their unordered arrow pair so only matching triples are tried.
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (int p : edges) {
    int l = w[static_cast<std::size_t>(p)].arrow, r = w[static_cast<std::size_t>(p + 1)].arrow;
    by_pair[{std::min(l, r), std::max(l, r)}].push_back(p);
  }
  std::vector<Triangle> out;
  for (const auto& [ab, list_ab] : by_pair) {
    auto [x, y] = ab;
    for (const auto& [bc, list_bc] : by_pair) {
      // bc must be (y, z) with z > y so each triangle x<y<z is visited once.
      if (bc.first != y || bc.second <= y) continue;
      int z = bc.second;
      auto it = by_pair.find({x, z});
      if (it == by_pair.end()) continue;
      for (int p1 : list_ab)
        for (int p2 : list_bc)
          for (int p3 : it->second) {
            Triangle t;
            if (triangle_at(a, {p1, p2, p3}, t)) out.push_back(t);
          }
    }
  }
  std::sort(out.begin(), out.end(), [](const Triangle& l, const Triangle& r) { return l.edges < r.edges; });
  return out;
}

bool r3_shape(const ArrowDiagram& a, const Triangle& t) {
  std::array<int, 3> ups{};
  for (int i = 0; i < 3; ++i) ups[static_cast<std::size_t>(i)] = edge_data(a, t.edges[static_cast<std::size_t>(i)]).up;
  std::sort(ups.begin(), ups.end());
  return ups == std::array<int, 3>{0, 1, 2};
}

GaussDiagram cube_step(const GaussDiagram& g, const std::array<int, 3>& edges, int i) {
  Triangle t;
  require(triangle_at(g.arrows(), edges, t), "edges do not form an R3 triangle");
  const int p = edges[static_cast<std::size_t>(i)];
  const auto& w = g.word();
  const int a = w[static_cast<std::size_t>(p)].arrow, b = w[static_cast<std::size_t>(p + 1)].arrow;
  int third = -1;
  for (int id : t.arrows)
    if (id != a && id != b) third = id;
  GaussDiagram out(g.arrows().switched(p), g.signs());
  return out.with_sign(third, -out.sign(third));
}

std::vector<GaussDiagram> r3_cube(const GaussDiagram& g, const std::array<int, 3>& edges) {
  std::set<GaussDiagram> seen{g};
  std::vector<GaussDiagram> todo{g};
  while (!todo.empty()) {
    GaussDiagram cur = todo.back();
    todo.pop_back();
    for (int i = 0; i < 3; ++i) {
      GaussDiagram next = cube_step(cur, edges, i);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

bool validate_r3(const GaussDiagram& g, std::array<int, 3> edges) {
  Triangle t;
  if (!triangle_at(g.arrows(), edges, t)) throw std::invalid_argument("edges do not form an R3 triangle");
  if (!r3_shape(g.arrows(), t)) return false;
  int first = 0;
  for (int i = 0; i < 3; ++i) {
    EdgeData d = edge_data(g, t.edges[static_cast<std::size_t>(i)]);
    int v = d.w * d.epsilon;
    if (i == 0) {
      first = v;
    } else if (v != first) {
      return false;
    }
  }
  return true;
}

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Birth: return "R1_birth";
    case MoveKind::R1Death: return "R1_death";
    case MoveKind::R2Birth: return "R2_birth";
    case MoveKind::R2Death: return "R2_death";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

Move r1_birth(int gap, bool head_first, int sign) {
  Move m;
  m.kind = MoveKind::R1Birth;
  m.gap = gap;
  m.head_first = head_first;
  m.sign = sign;
  return m;
}

Move r1_death(int arrow) {
  Move m;
  m.kind = MoveKind::R1Death;
  m.data = {arrow};
  return m;
}

Move r2_birth(int gap, int gap2, bool head_first, bool second_swapped, int sign) {
  Move m;
  m.kind = MoveKind::R2Birth;
  m.gap = gap;
  m.gap2 = gap2;
  m.head_first = head_first;
  m.second_swapped = second_swapped;
  m.sign = sign;
  return m;
}

Move r2_death(int a, int b) {
  Move m;
  m.kind = MoveKind::R2Death;
  m.data = {std::min(a, b), std::max(a, b)};
  return m;
}

Move r3(std::array<int, 3> edges) {
  std::sort(edges.begin(), edges.end());
  Move m;
  m.kind = MoveKind::R3;
  m.data = {edges[0], edges[1], edges[2]};
  return m;
}

AppliedMove apply_move_raw(const GaussDiagram& g, const Move& m) {
  const auto& word = g.word();
  const int len = static_cast<int>(word.size());
  std::vector<End> w = word;
  std::vector<int> signs = g.signs();
  AppliedMove out;
  switch (m.kind) {
    case MoveKind::R1Birth: {
      require(m.gap >= 0 && m.gap <= len, "R1 birth gap out of range");
      require(m.sign == 1 || m.sign == -1, "R1 birth sign must be +1 or -1");
      int id = g.arrows().max_id() + 1;
      End first{id, m.head_first ? EndKind::Head : EndKind::Tail};
      End second{id, m.head_first ? EndKind::Tail : EndKind::Head};
      w.insert(w.begin() + m.gap, {first, second});
      signs.resize(static_cast<std::size_t>(id + 1), 0);
      signs[static_cast<std::size_t>(id)] = m.sign;
      out.distinguished = {id};
      break;
    }
    case MoveKind::R1Death: {
      require(m.data.size() == 1, "R1 death needs one arrow");
      int id = m.data[0];
      require(g.arrows().isolated(id), "R1 death of a non-isolated arrow");
      out.distinguished = {id};
      w = g.arrows().without({id}).word();
      signs[static_cast<std::size_t>(id)] = 0;
      break;
    }
    case MoveKind::R2Birth: {
      require(m.gap >= 0 && m.gap <= m.gap2 && m.gap2 <= len, "R2 birth gaps out of range");
      require(m.sign == 1 || m.sign == -1, "R2 birth sign must be +1 or -1");
      int x = g.arrows().max_id() + 1, y = x + 1;
      EndKind k1 = m.head_first ? EndKind::Head : EndKind::Tail;
      EndKind k2 = m.head_first ? EndKind::Tail : EndKind::Head;
      std::vector<End> b1{{x, k1}, {y, k1}};
      std::vector<End> b2 = m.second_swapped ? std::vector<End>{{y, k2}, {x, k2}} : std::vector<End>{{x, k2}, {y, k2}};
      if (m.gap == m.gap2) {
        b1.insert(b1.end(), b2.begin(), b2.end());
        w.insert(w.begin() + m.gap, b1.begin(), b1.end());
      } else {
        w.insert(w.begin() + m.gap2, b2.begin(), b2.end());
        w.insert(w.begin() + m.gap, b1.begin(), b1.end());
      }
      signs.resize(static_cast<std::size_t>(y + 1), 0);
      signs[static_cast<std::size_t>(x)] = m.sign;
      signs[static_cast<std::size_t>(y)] = -m.sign;
      out.distinguished = {x, y};
      break;
    }
    case MoveKind::R2Death: {
      require(m.data.size() == 2, "R2 death needs two arrows");
      int a = m.data[0], b = m.data[1];
      require(g.arrows().r2_pair(a, b), "R2 death: arrows not in R2 position");
      require(g.sign(a) == -g.sign(b), "R2 death: arrows must have different signs");
      out.distinguished = {a, b};
      w = g.arrows().without({a, b}).word();
      signs[static_cast<std::size_t>(a)] = 0;
      signs[static_cast<std::size_t>(b)] = 0;
      break;
    }
    case MoveKind::R3: {
      require(m.data.size() == 3, "R3 needs three edges");
      std::array<int, 3> e{m.data[0], m.data[1], m.data[2]};
      Triangle t;
      require(triangle_at(g.arrows(), e, t), "R3 edges do not form a triangle");
      require(validate_r3(g, e), "R3 triple violates the R3 criterion");
      for (int p : t.edges) std::swap(w[static_cast<std::size_t>(p)], w[static_cast<std::size_t>(p + 1)]);
      out.distinguished = {t.arrows[0], t.arrows[1], t.arrows[2]};
      break;
    }
  }
  out.diagram = GaussDiagram(ArrowDiagram(std::move(w)), std::move(signs));
  return out;
}

GaussDiagram apply_move(const GaussDiagram& g, const Move& m) { return apply_move_raw(g, m).diagram.canonical(); }

bool applicable(const GaussDiagram& g, const Move& m) {
  try {
    apply_move_raw(g, m);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  } catch (const std::out_of_range&) {
    return false;
  }
}

Move inverse_move(const GaussDiagram& g, const Move& m) {
  AppliedMove r = apply_move_raw(g, m);
  switch (m.kind) {
    case MoveKind::R1Birth: return r1_death(r.distinguished[0]);
    case MoveKind::R2Birth: return r2_death(r.distinguished[0], r.distinguished[1]);
    case MoveKind::R3: return m;
    case MoveKind::R1Death: {
      int id = m.data[0];
      int p = std::min(g.arrows().tail_pos(id), g.arrows().head_pos(id));
      return r1_birth(p, g.word()[static_cast<std::size_t>(p)].kind == EndKind::Head, g.sign(id));
    }
    case MoveKind::R2Death: {
      int a = m.data[0], b = m.data[1];
      const auto& ad = g.arrows();
      std::array<int, 4> pos{ad.tail_pos(a), ad.tail_pos(b), ad.head_pos(a), ad.head_pos(b)};
      std::sort(pos.begin(), pos.end());
      // Blocks are (pos[0], pos[0]+1) and the other adjacent pair.
      int p = pos[0];
      int q = pos[2];
      const auto& w = g.word();
      int x = w[static_cast<std::size_t>(p)].arrow;
      bool swapped = w[static_cast<std::size_t>(q)].arrow != x;
      return r2_birth(p, q - 2, w[static_cast<std::size_t>(p)].kind == EndKind::Head, swapped, g.sign(x));
    }
  }
  throw std::logic_error("unknown move kind");
}

Move inverse_move_canonical(const GaussDiagram& g, const Move& m) {
  AppliedMove r = apply_move_raw(g, m);
  Move inv = inverse_move(g, m);
  if (inv.kind == MoveKind::R1Death || inv.kind == MoveKind::R2Death) {
    auto label = canonical_labels(r.diagram.word());
    for (int& id : inv.data) id = label[static_cast<std::size_t>(id)];
    std::sort(inv.data.begin(), inv.data.end());
  }
  return inv;
}

namespace {

// Key identifying a birth up to homeomorphism: canonical result together
// with the canonical labels of the new arrows.
std::pair<GaussDiagram, std::vector<int>> birth_key(const AppliedMove& r) {
  auto label = canonical_labels(r.diagram.word());
  std::vector<int> born;
  for (int id : r.distinguished) born.push_back(label[static_cast<std::size_t>(id)]);
  std::sort(born.begin(), born.end());
  return {r.diagram.canonical(), born};
}

}  // namespace

std::vector<Move> enumerate_moves(const GaussDiagram& g, MoveKind kind) {
  std::vector<Move> out;
  const int len = 2 * g.degree();
  const auto ids = g.arrows().arrow_ids();
  switch (kind) {
    case MoveKind::R1Birth: {
      std::set<std::pair<GaussDiagram, std::vector<int>>> seen;
      for (int gap = 0; gap <= len; ++gap)
        for (bool hf : {false, true})
          for (int s : {1, -1}) {
            Move m = r1_birth(gap, hf, s);
            if (seen.insert(birth_key(apply_move_raw(g, m))).second) out.push_back(m);
          }
      break;
    }
    case MoveKind::R1Death:
      for (int id : ids)
        if (g.arrows().isolated(id)) out.push_back(r1_death(id));
      break;
    case MoveKind::R2Birth: {
      std::set<std::pair<GaussDiagram, std::vector<int>>> seen;
      for (int g1 = 0; g1 <= len; ++g1)
        for (int g2 = g1; g2 <= len; ++g2)
          for (bool hf : {false, true})
            for (bool sw : {false, true})
              for (int s : {1, -1}) {
                Move m = r2_birth(g1, g2, hf, sw, s);
                if (seen.insert(birth_key(apply_move_raw(g, m))).second) out.push_back(m);
              }
      break;
    }
    case MoveKind::R2Death:
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
          if (g.arrows().r2_pair(ids[i], ids[j]) && sign_at(g, ids[i]) == -sign_at(g, ids[j]))
            out.push_back(r2_death(ids[i], ids[j]));
      break;
    case MoveKind::R3:
      for (const auto& t : triangles(g.arrows()))
        if (validate_r3(g, t.edges)) out.push_back(r3(t.edges));
      break;
  }
  return out;
}

std::vector<Move> enumerate_all_moves(const GaussDiagram& g) {
  std::vector<Move> out;
  for (MoveKind k : {MoveKind::R1Birth, MoveKind::R1Death, MoveKind::R2Birth, MoveKind::R2Death, MoveKind::R3}) {
    auto part = enumerate_moves(g, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace kc
