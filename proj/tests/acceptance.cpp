// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hsegal/corrlim.hpp"
#include "hsegal/cyclic.hpp"
#include "hsegal/hall.hpp"
#include "hsegal/hcomb.hpp"
#include "hsegal/io.hpp"
#include "hsegal/ordcube.hpp"
#include "hsegal/segal.hpp"

using namespace hsegal;
using namespace fixtures;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct CorpusItem {
  std::string name;
  Input input;
  SSet s;
};

std::vector<CorpusItem> load_corpus() {
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(HSEGAL_CORPUS_DIR)) {
    const std::string n = e.path().filename().string();
    if (n.ends_with(".json") && !n.ends_with(".expected.json")) paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusItem> out;
  for (const auto& p : paths) {
    Input in = load_input(p.string());
    SSet s = in.simplicial_set(6);
    out.push_back({p.stem().string(), std::move(in), std::move(s)});
  }
  return out;
}

bool is_nerve(const CorpusItem& c) { return c.input.kind() != "simplicial_set"; }

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome c1_associator_cubes() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const PlusCube c = associator_cube(n);
    o.require(!c.commutativity_violation(), "A_" + std::to_string(n) + " does not commute");
    const auto paths = path_composites(c);
    o.require(paths.size() == factorial(n), "A_" + std::to_string(n) + " path count");
    for (const auto& p : paths) o.require(p == paths.front(), "path composites differ");
  }
  for (int n = 1; n <= 3; ++n) {
    const UniquenessReport u = verify_unique_associator(n);
    o.require(u.unique, "A_" + std::to_string(n) + " not unique up to direction permutation");
  }
  return o;
}

Outcome c2_boundary() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const BoundaryReport r = boundary_decomposition(n);
    o.require(r.ok, "boundary_decomposition(" + std::to_string(n) + "): " + r.failure);
  }
  // A_2: + faces are A_1; v_1^- = Id_<1> + (<2> ->> <1>), v_2^- = (<2> ->> <1>) + Id_<1>
  const BoundaryReport r = boundary_decomposition(2);
  o.require(r.faces.size() == 4, "A_2 has four faces");
  for (const auto& f : r.faces) {
    if (f.side == Side::Plus) {
      o.require(f.is_lower_associator, "A_2 + face is not A_1");
      continue;
    }
    o.require(f.parts.size() == 2, "A_2 - face is not a union of two parts");
    if (f.parts.size() != 2) continue;
    const OrdMap left = f.parts[0].cube.edge(0, 1), right = f.parts[1].cube.edge(0, 1);
    const OrdMap id1 = identity_map(1), s21 = terminal_map(2);
    o.require(f.dir == 1 ? (left == id1 && right == s21) : (left == s21 && right == id1), "A_2 - face parts differ");
  }
  return o;
}

Outcome c3_fundamental() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const FactorizationReport r = check_fundamental_factorization(n);
    o.require(r.ok, "n = " + std::to_string(n) + ": " + r.failure);
  }
  return o;
}

Outcome c4_hcomb() {
  Outcome o;
  o.require(h_comb(identity_map(2)) == VertexComplex(2, {0b011, 0b110}), "h_comb(Id_<2>) is not the horn");
  o.require(h_comb(terminal_map(2)) == VertexComplex::full(2), "h_comb(<2> -> <1>) is not Delta_2");
  const HCombCube h = corr_cube(associator_cube(1));
  for (const Monoid& m : {trivial_monoid(), cyclic_group(2), cyclic_group(3)}) {
    const SSet s = nerve_monoid(m, 3);
    const EvaluatedCube e = evaluate(h, s);
    const std::size_t k = m.elements.size();
    o.require(e.sets[0].elements.size() == k * k && e.sets[1].elements.size() == k * k &&
                  e.sets[2].elements.size() == k,
              "span sizes");
    std::set<std::size_t> seen_left;
    for (std::size_t x = 0; x < e.sets[1].elements.size(); ++x) {
      const Simplex t = e.sets[1].elements[x][0];
      o.require(e.sets[0].elements[e.minus[1][x]] == HomElement{face(s, t, 2), face(s, t, 0)}, "left leg is not (d2, d0)");
      o.require(e.sets[2].elements[e.plus[1][x]] == HomElement{face(s, t, 1)}, "right leg is not d1");
      seen_left.insert(e.minus[1][x]);
    }
    o.require(seen_left.size() == k * k, "left leg is not a bijection onto M^2");
  }
  return o;
}

Outcome c5_main(const std::vector<CorpusItem>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const int n_max = std::min(5, c.s.dim_bound() - 1);
    for (int d : {2, 3}) {
      if (d > n_max) continue;
      const std::string tag = c.name + " d=" + std::to_string(d);
      const auto full = check_dsegal_triangulations(c.s, d, n_max + 1, SegalMode::Full);
      const auto reduced = check_dsegal_triangulations(c.s, d, n_max + 1, SegalMode::Reduced);
      const auto cubes = check_dsegal_cubes(c.s, d, n_max);
      o.require(full.ok() == reduced.ok(), tag + ": full and reduced disagree");
      o.require(full.ok() == cubes.ok(), tag + ": routes disagree");
      for (const CubeRow& row : cubes.rows) {
        bool tri = true;
        for (const auto& t : reduced.rows)
          if (t.n == row.n + 1) tri = tri && t.result.adapted;
        o.require(tri == row.invertible(), tag + ": level " + std::to_string(row.n) + " disagrees");
      }
      if (is_nerve(c)) o.require(full.ok(), tag + ": nerve fails");
      if ((c.name == "dup2" || c.name == "dup3") && d == 2) {
        o.require(!full.ok() && !cubes.ok(), tag + ": mutant passes");
        bool witnessed = false;
        for (const auto& row : full.rows) witnessed = witnessed || (!row.result.adapted && !row.result.witness_element.empty());
        o.require(witnessed, tag + ": no witness");
      }
    }
  }
  return o;
}

Outcome c6_lower_upper(const std::vector<CorpusItem>& corpus) {
  Outcome o;
  bool distinguishes2 = false, distinguishes3 = false;
  for (const auto& c : corpus) {
    for (int d : {2, 3}) {
      if (d + 1 > c.s.dim_bound()) continue;
      const LowerUpperDiagnostic r = lower_upper_diagnostic(c.s, d);
      // odd d pairs l with L; even d pairs u with L
      if (d == 3) o.require(r.direct_matches, c.name + " d=3: l/u do not match L/U");
      if (d == 2) o.require(r.swapped_matches, c.name + " d=2: u/l do not match L/U");
      if (r.tri_lower != r.tri_upper) (d == 2 ? distinguishes2 : distinguishes3) = true;
    }
  }
  o.require(distinguishes2 && distinguishes3, "corpus has no lower-only input for some d");
  return o;
}

Outcome c7_two_implies_three(const std::vector<CorpusItem>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    if (c.s.dim_bound() < 6) continue;
    const auto two = check_dsegal_triangulations(c.s, 2, 6, SegalMode::Full);
    if (two.lower || two.upper)
      o.require(check_dsegal_triangulations(c.s, 3, 6, SegalMode::Full).ok(), c.name + " fails 3-Segal");
  }
  return o;
}

Outcome c8_pullbacks() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 200; ++t) {
      const int dir = 1 + static_cast<int>(rng() % n);
      const FinCube c = gen::random_cube(rng, n, dir);
      o.require(is_pullback_cube(c).pullback == gen::brute_is_pullback(c), "is_pullback_cube against brute force");
      const auto p = pasting_check(c, dir);
      o.require(p.has_value() && *p, "pasting fails at n = " + std::to_string(n));
    }
  return o;
}

Outcome c9_composition() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto [a, b] = gen::random_composable_squares(rng);
    const auto r = invertible_composition_check(a, b);
    o.require(r.has_value() && *r, "composite of invertible squares is not invertible");
  }
  return o;
}

Outcome c10_hall(const std::vector<CorpusItem>& corpus) {
  Outcome o;
  bool dup2_witness = false;
  for (const auto& c : corpus) {
    if (const auto* m = std::get_if<Monoid>(&c.input.value))
      o.require(same_table(structure_constants(c.s), monoid_algebra_oracle(*m)), c.name + ": oracle mismatch");
    if (c.s.cell_count(0) != 1 || c.s.dim_bound() < 3) continue;
    const int n_max = std::min(6, c.s.dim_bound());
    const bool segal2 = check_dsegal_triangulations(c.s, 2, n_max, SegalMode::Full).ok();
    const auto rep = check_associativity(structure_constants(c.s));
    if (segal2) o.require(rep.ok, c.name + ": 2-Segal but not associative");
    if (c.name == "dup2") dup2_witness = !rep.ok && rep.witness && rep.witness->lhs != rep.witness->rhs;
  }
  o.require(dup2_witness, "no witness on the duplicate-triangle mutant");
  return o;
}

Outcome c11_gale() {
  Outcome o;
  for (int d : {2, 3})
    for (int n = d + 1; n <= 6; ++n) {
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
      o.require(cross_check_gale(n, d), tag + ": geometry differs from evenness");
      const Certificate c = certify_triangulation(n, d, Sides::Both, 1000, 1000 + 10 * n + d);
      o.require(c.ok, tag + ": certificate " + c.failure);
    }
  return o;
}

std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome c12_determinism() {
  Outcome o;
  const std::string cli = HSEGAL_CLI, corpus = HSEGAL_CORPUS_DIR;
  const std::vector<std::string> cases{
      "assoc-cube --n 3 --boundary --check-unique",
      "segal-check --input " + corpus + "/z3.json --d 2 --nmax 5 --method both",
      "segal-check --input " + corpus + "/dup3.json --d 3 --nmax 5 --method both --mode reduced",
      "hall --input " + corpus + "/dup2.json",
      "gale --n 6 --d 3 --geometry --samples 300 --seed 5",
  };
  for (const auto& c : cases) {
    const std::string cmd = cli + " --format machine " + c + " 2>/dev/null";
    const auto a = run(cmd), b = run(cmd);
    o.require(a.first >= 0 && a.first <= 1, "unexpected exit for: " + c);
    o.require(!a.second.empty() && a == b, "reports differ for: " + c);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<CorpusItem> corpus = load_corpus();
  struct Criterion {
    const char* title;
    double budget_s;  // 0 = no target
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria{
      {"associator cubes commute, are unique, have n! paths", 5, c1_associator_cubes},
      {"boundary decomposition for n = 2, 3, 4", 5, c2_boundary},
      {"fundamental cube factorization for n <= 4", 0, c3_fundamental},
      {"H_comb anchors and the multiplication span", 0, c4_hcomb},
      {"triangulation and cube routes agree on the corpus", 60, [&] { return c5_main(corpus); }},
      {"lower/upper subcubes match lower/upper triangulations", 0, [&] { return c6_lower_upper(corpus); }},
      {"lower or upper 2-Segal implies 3-Segal", 0, [&] { return c7_two_implies_three(corpus); }},
      {"pullback cubes: brute force and pasting, 200 trials per n", 0, c8_pullbacks},
      {"invertible squares compose, 200 trials", 0, c9_composition},
      {"Hall algebra against the monoid algebra; associativity", 0, [&] { return c10_hall(corpus); }},
      {"Gale evenness against exact geometry", 10, c11_gale},
      {"machine reports are byte-identical", 0, c12_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_s > 0 && secs > criteria[i].budget_s)
      o.require(false, "over the " + std::to_string(int(criteria[i].budget_s)) + " s budget");
    failed += !o.ok;
    char line[256];
    std::snprintf(line, sizeof line, "%s %2zu  %-58s %7.2f s", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].title, secs);
    std::cout << line << (o.ok ? "" : "  -- " + o.note) << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
