#include "knotcocycle/random.hpp"

#include <algorithm>

namespace kc {

GaussDiagram random_gauss_diagram(Rng& rng, int degree) {
  std::vector<End> w;
  for (int id = 0; id < degree; ++id) {
    w.push_back({id, EndKind::Tail});
    w.push_back({id, EndKind::Head});
  }
  std::shuffle(w.begin(), w.end(), rng);
  std::vector<int> signs(static_cast<std::size_t>(degree));
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto& s : signs) s = coin(rng) ? 1 : -1;
  return GaussDiagram(ArrowDiagram(std::move(w)), std::move(signs)).canonical();
}

std::optional<Move> random_move(const GaussDiagram& g, Rng& rng, int max_degree) {
  std::vector<Move> moves;
  for (const auto& m : enumerate_all_moves(g)) {
    if (m.kind == MoveKind::R1Birth && g.degree() + 1 > max_degree) continue;
    if (m.kind == MoveKind::R2Birth && g.degree() + 2 > max_degree) continue;
    moves.push_back(m);
  }
  if (moves.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

GaussDiagram random_walk(GaussDiagram g, Rng& rng, int steps, int max_degree) {
  g = g.canonical();
  for (int i = 0; i < steps; ++i) {
    auto m = random_move(g, rng, max_degree);
    if (!m) break;
    g = apply_move(g, *m);
  }
  return g;
}

}  // namespace kc
