#include "knotcocycle/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace kc {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class F>
std::vector<Vec3> sample(int n, F&& f) {
  std::vector<Vec3> out;
  for (int i = 0; i < n; ++i) out.push_back(f(2 * std::numbers::pi * i / n));
  return out;
}

}  // namespace

std::vector<Vec3> trefoil_polygon(int n) {
  return sample(n, [](double t) {
    return Vec3{std::sin(t) + 2 * std::sin(2 * t), std::cos(t) - 2 * std::cos(2 * t), -std::sin(3 * t)};
  });
}

std::vector<Vec3> figure_eight_polygon(int n) {
  return sample(n, [](double t) {
    double r = 2 + std::cos(2 * t);
    return Vec3{r * std::cos(3 * t), r * std::sin(3 * t), std::sin(4 * t)};
  });
}

std::vector<Vec3> unknot_polygon(int n) {
  return sample(n, [](double t) { return Vec3{2 * std::cos(t), std::sin(t), 0.7 * std::sin(2 * t)}; });
}

PolyKnot long_knot(const std::vector<Vec3>& closed) {
  if (closed.size() < 3) throw std::invalid_argument("closed polygon needs at least three points");
  std::size_t left = 0;
  double xmin = closed[0][0], xmax = closed[0][0], radius = 0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (closed[i][0] < closed[left][0]) left = i;
    xmin = std::min(xmin, closed[i][0]);
    xmax = std::max(xmax, closed[i][0]);
    radius = std::max(radius, std::hypot(closed[i][1], closed[i][2]));
  }
  const double r = radius + 1;
  PolyKnot k;
  k.points.push_back({xmin - 1, 0, 0});
  for (std::size_t i = 0; i < closed.size(); ++i) k.points.push_back(closed[(left + i) % closed.size()]);
  k.points.push_back({xmin - 1, 0, r});
  k.points.push_back({xmax + 1, 0, r});
  k.points.push_back({xmax + 1, 0, 0});
  return k;
}

PolyKnot connected_sum(const PolyKnot& a, const PolyKnot& b) {
  PolyKnot out = a;
  const double shift = a.points.back()[0] - b.points.front()[0];
  for (std::size_t i = 1; i < b.points.size(); ++i) {
    Vec3 p = b.points[i];
    p[0] += shift;
    out.points.push_back(p);
  }
  return out;
}

PolyKnot mirrored(const PolyKnot& k) {
  PolyKnot out = k;
  for (auto& p : out.points) p[2] = -p[2];
  return out;
}

PolyKnot perturbed(const PolyKnot& k, std::uint64_t seed, double eps) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-eps, eps);
  PolyKnot out = k;
  for (std::size_t i = 1; i + 1 < out.points.size(); ++i)
    for (double& c : out.points[i]) c += u(rng);
  return out;
}

namespace {

struct Projection {
  GaussDiagram diagram;
  std::vector<long> keys;  // segment pair of each arrow id
};

Projection project_keyed(const PolyKnot& k, double theta) {
  const Vec3 d{0, -std::sin(theta), std::cos(theta)};
  const Vec3 u{0, std::cos(theta), std::sin(theta)};
  const auto& p = k.points;
  const long n = static_cast<long>(p.size()) - 1;
  std::vector<std::array<double, 2>> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = {p[i][0], dot(p[i], u)};

  struct EndRec {
    double param;
    int id;
    EndKind kind;
  };
  std::vector<EndRec> ends;
  std::vector<long> keys;
  std::vector<int> signs;
  for (long i = 0; i < n; ++i) {
    const auto &a0 = q[static_cast<std::size_t>(i)], &a1 = q[static_cast<std::size_t>(i + 1)];
    for (long j = i + 2; j < n; ++j) {
      const auto &b0 = q[static_cast<std::size_t>(j)], &b1 = q[static_cast<std::size_t>(j + 1)];
      const double rx = a1[0] - a0[0], ry = a1[1] - a0[1], sx = b1[0] - b0[0], sy = b1[1] - b0[1];
      const double den = rx * sy - ry * sx;
      if (den == 0) continue;
      const double wx = b0[0] - a0[0], wy = b0[1] - a0[1];
      const double s = (wx * sy - wy * sx) / den, t = (wx * ry - wy * rx) / den;
      if (s < 0 || s >= 1 || t < 0 || t >= 1) continue;
      const Vec3 ta = sub(p[static_cast<std::size_t>(i + 1)], p[static_cast<std::size_t>(i)]);
      const Vec3 tb = sub(p[static_cast<std::size_t>(j + 1)], p[static_cast<std::size_t>(j)]);
      const double ha = dot(p[static_cast<std::size_t>(i)], d) + s * dot(ta, d);
      const double hb = dot(p[static_cast<std::size_t>(j)], d) + t * dot(tb, d);
      const bool a_over = ha > hb;
      const int id = static_cast<int>(keys.size());
      keys.push_back(i * n + j);
      const Vec3 c = a_over ? cross(ta, tb) : cross(tb, ta);
      signs.push_back(dot(c, d) > 0 ? 1 : -1);
      ends.push_back({static_cast<double>(i) + s, id, a_over ? EndKind::Tail : EndKind::Head});
      ends.push_back({static_cast<double>(j) + t, id, a_over ? EndKind::Head : EndKind::Tail});
    }
  }
  std::sort(ends.begin(), ends.end(), [](const EndRec& l, const EndRec& r) { return l.param < r.param; });
  std::vector<End> word;
  for (const auto& e : ends) word.push_back({e.id, e.kind});
  return {GaussDiagram(ArrowDiagram(std::move(word)), std::move(signs)), std::move(keys)};
}

bool same_raw(const GaussDiagram& a, const GaussDiagram& b) {
  if (a.word() != b.word()) return false;
  for (int id : a.arrows().arrow_ids())
    if (a.sign(id) != b.sign(id)) return false;
  return true;
}

// Re-labels both projections over the union of their segment-pair keys.
std::pair<GaussDiagram, GaussDiagram> common_ids(const Projection& a, const Projection& b) {
  std::map<long, int> id;
  for (long key : a.keys) id.emplace(key, 0);
  for (long key : b.keys) id.emplace(key, 0);
  int next = 0;
  for (auto& [key, v] : id) v = next++;
  auto relabel = [&](const Projection& p) {
    std::vector<End> w;
    for (const auto& e : p.diagram.word()) w.push_back({id.at(p.keys[static_cast<std::size_t>(e.arrow)]), e.kind});
    std::vector<int> s(static_cast<std::size_t>(next), 0);
    for (std::size_t i = 0; i < p.keys.size(); ++i) s[static_cast<std::size_t>(id.at(p.keys[i]))] = p.diagram.sign(static_cast<int>(i));
    return GaussDiagram(ArrowDiagram(std::move(w)), std::move(s));
  };
  return {relabel(a), relabel(b)};
}

MoveKind kind_for(int delta) {
  switch (delta) {
    case 1: return MoveKind::R1Birth;
    case -1: return MoveKind::R1Death;
    case 2: return MoveKind::R2Birth;
    case -2: return MoveKind::R2Death;
    default: return MoveKind::R3;
  }
}

// A single move turning a into b, tracked through segment pairs when possible.
std::optional<Germ> single_move(const Projection& pa, const Projection& pb) {
  const int delta = pb.diagram.degree() - pa.diagram.degree();
  if (std::abs(delta) > 2) return std::nullopt;
  const MoveKind kind = kind_for(delta);
  auto [a, b] = common_ids(pa, pb);
  std::vector<Germ> found;
  for (const auto& m : enumerate_moves(a, kind)) {
    AppliedMove r = apply_move_raw(a, m);
    if (delta > 0) {
      // Births name the new arrows max_id + 1, ...; rename them by position.
      if (r.diagram.canonical() != b.canonical()) continue;
      std::vector<End> w = r.diagram.word();
      if (w.size() != b.word().size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i) {
        const bool fresh = std::find(r.distinguished.begin(), r.distinguished.end(), w[i].arrow) != r.distinguished.end();
        if (!fresh) ok = w[i] == b.word()[i];
      }
      if (ok) found.push_back(make_germ(a, m));
    } else if (same_raw(r.diagram, b)) {
      found.push_back(make_germ(a, m));
    }
  }
  if (found.size() == 1) return found.front();
  // Fall back to canonical comparison (a crossing slid over a vertex).
  const GaussDiagram ca = pa.diagram.canonical(), cb = pb.diagram.canonical();
  found.clear();
  for (const auto& m : enumerate_moves(ca, kind))
    if (apply_move(ca, m) == cb) found.push_back(make_germ(ca, m));
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

struct Resolver {
  const PolyKnot& knot;
  int bisections = 0;

  void resolve(double ta, const Projection& pa, double tb, const Projection& pb, int depth, std::vector<Germ>& out) {
    if (pa.diagram.canonical() == pb.diagram.canonical()) return;
    if (auto g = single_move(pa, pb)) {
      out.push_back(*g);
      return;
    }
    if (depth > 60) throw std::runtime_error("rotation event could not be resolved into single moves");
    ++bisections;
    const double tm = (ta + tb) / 2;
    const Projection pm = project_keyed(knot, tm);
    resolve(ta, pa, tm, pm, depth + 1, out);
    resolve(tm, pm, tb, pb, depth + 1, out);
  }
};

}  // namespace

GaussDiagram project(const PolyKnot& k, double theta) { return project_keyed(k, theta).diagram; }

RotationLoop rot_loop(const PolyKnot& k, int samples, bool parallel) {
  const double step = 2 * std::numbers::pi / samples;
  std::vector<Projection> proj(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < samples; ++i) proj[static_cast<std::size_t>(i)] = project_keyed(k, i * step);

  std::vector<std::vector<Germ>> per(static_cast<std::size_t>(samples));
  std::vector<int> bis(static_cast<std::size_t>(samples), 0);
  std::vector<std::string> errors(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < samples; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    const std::size_t next = (ii + 1) % static_cast<std::size_t>(samples);
    Resolver r{k};
    try {
      r.resolve(i * step, proj[ii], (i + 1) * step, proj[next], 0, per[ii]);
    } catch (const std::exception& e) {
      errors[ii] = e.what();
    }
    bis[ii] = r.bisections;
  }
  RotationLoop loop;
  loop.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    if (!errors[ii].empty()) throw std::runtime_error(errors[ii]);
    loop.bisections += bis[ii];
    for (auto& g : per[ii]) loop.germs.push_back(std::move(g));
  }
  return loop;
}

}  // namespace kc
