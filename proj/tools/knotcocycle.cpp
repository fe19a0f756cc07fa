// knotcocycle: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <algorithm>
#include <fstream>
#include <iostream>

#include <omp.h>

#include "CLI11.hpp"
#include "knotcocycle/coboundary.hpp"
#include "knotcocycle/fixtures.hpp"

using namespace kc;

namespace {

struct Options {
  std::string format = "json";
  std::string fixtures;
  int jobs = 0;
  std::uint64_t seed = 1;

  std::string dir() const { return resolve_fixture_dir(fixtures); }
  bool parallel() const { return jobs != 1; }
};

struct VerificationFailure {};

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Aligned "key  value" lines; arrays print one element per line.
void print_text(const json& j, const std::string& indent = "") {
  if (!j.is_object()) {
    if (j.is_array())
      for (const auto& e : j) print_text(e, indent);
    else
      std::cout << indent << scalar_text(j) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) {
      std::cout << indent << k << '\n';
      print_text(v, indent + "  ");
    } else {
      std::cout << indent << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << '\n';
    }
  }
}

void emit(const Options& o, const json& j) {
  if (o.format == "text") print_text(j);
  else std::cout << j.dump(j.is_structured() ? 2 : -1) << '\n';
}

std::string rational_json(const Rational& r) { return r.get_str(); }

// Integers print as numbers, other rationals as "p/q" strings.
json number(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

GermSum formula_or_alpha(const Options& o, const std::string& path) {
  return path.empty() ? alpha31(o.dir()) : formula_from_json(read_json_file(path));
}

int max_degree(const GermSum& s) {
  int d = 0;
  for (const auto& [k, c] : s) d = std::max(d, k.degree());
  return d;
}

json report_json(const CocycleReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"degree", x.degree}, {"id", x.id}, {"value", rational_json(x.value)}});
  return {{"pass", r.pass()}, {"trivial", r.trivial}, {"violations", v}};
}

void cmd_pair(const Options& o, const std::string& arrow, const std::string& gauss) {
  emit(o, number(pair(read_arrow_sum(arrow), read_gauss(gauss))));
}

void cmd_coboundary(const Options& o, const std::string& arrow) {
  const auto a = read_arrow_sum(arrow);
  const auto v = d(a);
  int deg = 0;
  for (const auto& [k, c] : a) deg = std::max(deg, k.degree());
  if (o.format == "text") {
    emit(o, {{"I", germ_sum_text(v.I)}, {"II", germ_sum_text(v.II)}, {"Delta", germ_sum_text(v.Delta)}, {"Lambda", germ_sum_text(v.Lambda)}});
    return;
  }
  json j = to_json(v.total(), deg);
  j["zero"] = v.zero();
  emit(o, j);
}

void cmd_kernel(const Options& o, int degree) {
  json out = json::array();
  for (const auto& s : coboundary_kernel(degree, o.parallel())) {
    if (o.format == "text") {
      std::string line;
      for (const auto& [k, c] : s) line += (line.empty() ? "" : " ") + std::string(c > 0 ? "+" : "") + c.get_str() + "*[" + k.to_string() + "]";
      out.push_back(line);
    } else {
      out.push_back(to_json(s));
    }
  }
  emit(o, {{"max_degree", degree}, {"dimension", out.size()}, {"basis", out}});
}

void cmd_stokes(const Options& o, int cases, int degree) {
  if (cases < 1 || degree < 0) throw std::invalid_argument("stokes-check: need --cases >= 1 and --max-degree >= 0");
  std::vector<char> ok(static_cast<std::size_t>(cases));
#pragma omp parallel for schedule(dynamic) if (o.parallel())
  for (int i = 0; i < cases; ++i) {
    // One generator per case keeps the result independent of --jobs.
    Rng rng(o.seed * 1000003u + static_cast<std::uint64_t>(i));
    std::uniform_int_distribution<int> deg(0, degree), coef(-2, 2);
    FormalSum<ArrowDiagram> a;
    for (int t = 0; t < 4; ++t) a.add(random_gauss_diagram(rng, deg(rng)).arrows().canonical(), coef(rng));
    std::optional<Move> m;
    GaussDiagram g;
    while (!m) {
      g = random_gauss_diagram(rng, deg(rng));
      m = random_move(g, rng, degree);
    }
    ok[static_cast<std::size_t>(i)] = stokes_check(a, make_germ(g, *m)).ok();
  }
  const long failures = std::count(ok.begin(), ok.end(), 0);
  emit(o, {{"cases", cases}, {"max_degree", degree}, {"seed", o.seed}, {"failures", failures}});
  if (failures) throw VerificationFailure{};
}

void cmd_equations(const Options& o, int degree, bool filtered, const std::string& matrix) {
  const DegreeSystem& s = degree_system(degree, o.parallel());
  const SparseMatrix& m = filtered ? s.filtered : s.full;
  if (!matrix.empty()) {
    std::ofstream out(matrix);
    if (!out) throw std::invalid_argument("cannot write " + matrix);
    if (matrix.size() > 5 && matrix.substr(matrix.size() - 5) == ".json") out << to_triplet_json(m) << '\n';
    else write_triplet_text(out, m);
  }
  json rows = json::array();
  for (const auto& e : s.equations) {
    GermSum t = filtered ? restricted(e.terms, s.variables) : e.terms;
    rows.push_back({{"source", e.source}, {"terms", germ_sum_text(t)}});
  }
  json cols = json::array();
  for (const auto& k : filtered ? s.variables : s.keys) cols.push_back(k.to_string());
  emit(o, {{"degree", degree},
           {"filtered", filtered},
           {"rows", m.rows},
           {"cols", m.cols},
           {"rank", filtered ? s.filtered_rank : s.full_rank},
           {"columns", cols},
           {"equations", rows}});
}

void cmd_solve(const Options& o, int degree) {
  const DegreeSystem& s = degree_system(degree, o.parallel());
  json j = {{"degree", degree},
            {"variables", s.variables.size()},
            {"equations", s.equations.size()},
            {"rank", s.filtered_rank},
            {"kernel_dim", s.kernel_dim()},
            {"trivial_dim", s.pure_trivial_dim},
            {"quotient_dim", s.quotient_dim()}};
  if (degree == 3) {
    const GermSum a = alpha31(o.dir());
    auto r = verify_cocycle(a, 3, o.parallel());
    std::vector<Rational> v = to_vector(a, s.variables);
    bool in_kernel = true;
    for (const auto& row : s.filtered.data) {
      Rational dot = 0;
      for (const auto& [c, x] : row) dot += x * v[static_cast<std::size_t>(c)];
      if (dot != 0) in_kernel = false;
    }
    j["alpha31_in_kernel"] = in_kernel && r.pass();
    j["alpha31_nontrivial"] = !r.trivial;
  }
  emit(o, j);
}

void cmd_verify(const Options& o, const std::string& formula, int degree) {
  const GermSum a = formula_or_alpha(o, formula);
  const auto r = verify_cocycle(a, degree > 0 ? degree : std::max(1, max_degree(a)), o.parallel());
  emit(o, report_json(r));
  if (!r.pass()) throw VerificationFailure{};
}

void cmd_eval_loop(const Options& o, const std::string& formula, const std::string& loop) {
  const GermSum a = formula_or_alpha(o, formula);
  const Loop l = loop_from_json(read_json_file(loop));
  const auto germs = loop_germs(l);
  if (!closed(germs)) throw std::invalid_argument("eval-loop: the loop does not close");
  emit(o, {{"moves", germs.size()}, {"value", number(evaluate_loop(a, germs, o.parallel()))}});
}

void cmd_rot_test(const Options& o, const std::string& knot) {
  const KnotFixture k = load_knot(knot);
  const RotationSettings rs = rotation_settings(o.dir());
  const PolyKnot p = perturbed(knot_polygon(k), rs.seed, rs.eps);
  const RotationLoop loop = rot_loop(p, rs.samples, o.parallel());
  const Rational value = evaluate_loop(alpha31(o.dir()), loop.germs, o.parallel());
  const Rational v = v2(k.diagram);
  const Rational polygon_v = v2(project(p, 0.1).canonical());
  const bool holds = value == -v && polygon_v == v;
  const std::string summary =
      "alpha31(rot)=" + value.get_str() + ", v2=" + v.get_str() + ", identity " + (holds ? "holds" : "fails");
  if (o.format == "text") {
    std::cout << summary << '\n';
  } else {
    emit(o, {{"knot", k.name},
             {"alpha31_rot", number(value)},
             {"v2", number(v)},
             {"polygon_v2", number(polygon_v)},
             {"moves", loop.germs.size()},
             {"identity", holds},
             {"summary", summary}});
  }
  if (!holds) throw VerificationFailure{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagram 1-cocycle engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--fixtures", o.fixtures, "fixture directory");
  app.add_option("--jobs", o.jobs, "worker threads (1 = serial)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed for randomized suites");

  std::string arrow, gauss, formula, loop, knot, matrix;
  int degree = 3, cases = 1000, stokes_degree = 4;
  bool filtered = false;

  auto* pair_cmd = app.add_subcommand("pair", "Polyak-Viro pairing <A, G>");
  pair_cmd->add_option("--arrow", arrow, "arrow diagram or formula")->required();
  pair_cmd->add_option("--gauss", gauss, "Gauss diagram")->required();

  auto* cob = app.add_subcommand("coboundary", "d(A) in arrow germs");
  int kernel_degree = 0;
  auto* arrow_opt = cob->add_option("--arrow", arrow, "arrow diagram or formula");
  auto* kernel_opt = cob->add_option("--kernel", kernel_degree, "list a basis of Ker(d) up to this degree instead")->check(CLI::Range(1, 4));
  arrow_opt->excludes(kernel_opt);
  cob->require_option(1);

  auto* stokes = app.add_subcommand("stokes-check", "randomized Stokes suite");
  stokes->add_option("--cases", cases, "number of (A, gamma) pairs");
  stokes->add_option("--max-degree", stokes_degree, "largest degree");

  auto* eqs = app.add_subcommand("equations", "cocycle equations from meridians");
  eqs->add_option("--degree", degree)->check(CLI::Range(1, 3));
  eqs->add_flag("--filtered", filtered, "restrict to allowed 3-germs and partial germs");
  eqs->add_option("--matrix", matrix, "write the matrix (.json triplets or text)");

  auto* solve = app.add_subcommand("solve", "kernel of the filtered system");
  solve->add_option("--degree", degree)->check(CLI::Range(1, 3));

  auto* verify = app.add_subcommand("verify", "check a formula against the equations");
  verify->add_option("--formula", formula, "formula file (default: alpha31 fixture)");
  verify->add_option("--degree", degree)->check(CLI::Range(1, 3));

  auto* eval = app.add_subcommand("eval-loop", "evaluate a formula on a loop");
  eval->add_option("--formula", formula, "formula file (default: alpha31 fixture)");
  eval->add_option("--loop", loop, "loop file")->required();

  auto* rot = app.add_subcommand("rot-test", "alpha31(rot K) = -v2(K)");
  rot->add_option("--knot", knot, "knot file with a polygon")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (o.jobs > 0) omp_set_num_threads(o.jobs);

  try {
    if (*pair_cmd) cmd_pair(o, arrow, gauss);
    else if (*cob && kernel_degree > 0) cmd_kernel(o, kernel_degree);
    else if (*cob) cmd_coboundary(o, arrow);
    else if (*stokes) cmd_stokes(o, cases, stokes_degree);
    else if (*eqs) cmd_equations(o, degree, filtered, matrix);
    else if (*solve) cmd_solve(o, degree);
    else if (*verify) cmd_verify(o, formula, verify->count("--degree") ? degree : 0);
    else if (*eval) cmd_eval_loop(o, formula, loop);
    else if (*rot) cmd_rot_test(o, knot);
  } catch (const VerificationFailure&) {
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
