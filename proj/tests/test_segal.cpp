#include <functional>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hsegal/errors.hpp"
#include "hsegal/segal.hpp"

using namespace hsegal;
using namespace fixtures;

namespace {

VertexSet vs(std::initializer_list<int> v) {
  VertexSet s = 0;
  for (int x : v) s |= VertexSet{1} << x;
  return s;
}

// Random triangulation of the polygon on vertices 0..n by recursive ear choice.
std::vector<VertexSet> random_polygon(std::mt19937_64& rng, int n) {
  std::vector<VertexSet> out;
  std::function<void(int, int)> split = [&](int a, int b) {
    if (b - a < 2) return;
    const int c = a + 1 + static_cast<int>(rng() % (b - a - 1));
    out.push_back(vs({a, c, b}));
    split(a, c);
    split(c, b);
  };
  split(0, n);
  return out;
}

struct Named {
  std::string name;
  SSet s;
};

std::vector<Named> corpus() {
  return {{"trivial", nerve_monoid(trivial_monoid(), 6)},
          {"z2", nerve_monoid(cyclic_group(2), 6)},
          {"z3", nerve_monoid(cyclic_group(3), 6)},
          {"absorbing", nerve_monoid(absorbing_monoid(), 6)},
          {"poset3", nerve_category(chain_poset(3), 6)},
          {"dup2", duplicate_triangle_mutant(6)},
          {"dup3", duplicate_tetrahedron_mutant(6)},
          {"free_edge_z2", free_edge_mutant(cyclic_group(2), 6)},
          {"free_edge_point", free_edge_mutant(trivial_monoid(), 6)},
          {"lower3", lower3_mutant(6)}};
}

}  // namespace

TEST_CASE("evenness") {
  CHECK(is_even_subset(vs({0, 1, 2, 3}), 3));
  CHECK(is_odd_subset(vs({0, 1, 2, 3}), 3));
  CHECK(is_even_subset(vs({0, 1, 2}), 3));
  CHECK(is_odd_subset(vs({0, 1, 3}), 3));
  CHECK_FALSE(is_even_subset(vs({0, 1, 3}), 3));
  for (int n = 2; n <= 7; ++n)
    for (VertexSet s = 1; s < (VertexSet{1} << (n + 1)) - 1; ++s)
      CHECK_FALSE((is_even_subset(s, n) && is_odd_subset(s, n)));
}

TEST_CASE("gale triangulations") {
  CHECK(gale_triangulation(3, 2, TriKind::Lower).simplices == std::vector<VertexSet>{vs({0, 1, 2}), vs({0, 2, 3})});
  CHECK(gale_triangulation(4, 2, TriKind::Upper).simplices ==
        std::vector<VertexSet>{vs({0, 1, 4}), vs({1, 2, 4}), vs({2, 3, 4})});
  for (int d = 1; d <= 4; ++d)
    for (TriKind k : {TriKind::Lower, TriKind::Upper})
      CHECK(gale_triangulation(d, d, k).simplices == std::vector<VertexSet>{vertex_range(0, d)});
  CHECK_THROWS_AS(gale_triangulation(2, 3, TriKind::Lower), ArgumentError);
  // hand-derived shapes: d = 1 gives the spine and the long edge, d = 2 gives
  // the fans at 0 and at n
  for (int n = 2; n <= 8; ++n) {
    std::vector<VertexSet> spine, fan0, fann;
    for (int i = 0; i < n; ++i) spine.push_back(vs({i, i + 1}));
    for (int b = 1; b < n; ++b) fan0.push_back(vs({0, b, b + 1}));
    for (int a = 0; a + 1 < n; ++a) fann.push_back(vs({a, a + 1, n}));
    CHECK(gale_triangulation(n, 1, TriKind::Lower).simplices == spine);
    CHECK(gale_triangulation(n, 1, TriKind::Upper).simplices == std::vector<VertexSet>{vs({0, n})});
    CHECK(gale_triangulation(n, 2, TriKind::Lower).simplices == fan0);
    CHECK(gale_triangulation(n, 2, TriKind::Upper).simplices == fann);
  }
  const Triangulation u43 = gale_triangulation(4, 3, TriKind::Upper);
  CHECK(u43.simplices == std::vector<VertexSet>{vs({0, 1, 2, 4}), vs({0, 2, 3, 4})});
  CHECK(triangulation_complex(u43).generators().size() == 2);
}

TEST_CASE("adaptedness basics") {
  const SSet z3 = nerve_monoid(cyclic_group(3), 4);
  for (int n = 0; n <= 4; ++n) CHECK(is_adapted(z3, n, VertexComplex::full(n)).adapted);
  const auto spine = is_adapted(z3, 2, VertexComplex(2, {vs({0, 1}), vs({1, 2})}));
  CHECK(spine.adapted);
  CHECK(spine.simplices == 9);
  const SSet bad = duplicate_triangle_mutant(4);
  const auto r = is_adapted(bad, 3, triangulation_complex(gale_triangulation(3, 2, TriKind::Lower)));
  CHECK_FALSE(r.adapted);
  CHECK(r.witness != AdaptWitness::None);
  CHECK_FALSE(r.witness_element.empty());
  CHECK_THROWS_AS(is_adapted(z3, 5, VertexComplex::full(5)), BoundError);
}

TEST_CASE("1-Segal") {
  CHECK(check_1segal(nerve_monoid(absorbing_monoid(), 5), 5).ok);
  CHECK(check_1segal(nerve_category(chain_poset(3), 5), 5).ok);
  CHECK(check_1segal(free_edge_mutant(cyclic_group(2), 3), 1).ok);
  const auto r = check_1segal(duplicate_triangle_mutant(4), 4);
  CHECK_FALSE(r.ok);
  CHECK(r.n == 2);
  CHECK(r.m == 1);
  CHECK(r.failure.witness == AdaptWitness::MultiplePreimages);
  // a free edge breaks 1-Segal but not 2-Segal
  const SSet fe = free_edge_mutant(trivial_monoid(), 6);
  CHECK_FALSE(check_1segal(fe, 4).ok);
  CHECK(check_dsegal_triangulations(fe, 2, 6, SegalMode::Full).ok());
}

TEST_CASE("full and reduced modes agree, and match the cube route level by level") {
  for (const auto& [name, s] : corpus()) {
    for (int d : {2, 3}) {
      CAPTURE(name);
      CAPTURE(d);
      const auto full = check_dsegal_triangulations(s, d, 6, SegalMode::Full);
      const auto reduced = check_dsegal_triangulations(s, d, 6, SegalMode::Reduced);
      CHECK(full.ok() == reduced.ok());
      const auto cubes = check_dsegal_cubes(s, d, 5);
      CHECK(cubes.ok() == reduced.ok());
      // H_n against L[n+1,n] and U[n+1,n]
      for (const CubeRow& row : cubes.rows) {
        bool tri = true;
        for (const auto& t : reduced.rows)
          if (t.n == row.n + 1) tri = tri && t.result.adapted;
        CHECK(row.invertible() == tri);
      }
    }
  }
}

TEST_CASE("expected verdicts on the corpus") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    const bool nerve = name != "dup2" && name != "dup3" && name.rfind("free_edge", 0) != 0 && name != "lower3";
    const auto two = check_dsegal_triangulations(s, 2, 6, SegalMode::Full);
    if (nerve) CHECK(two.ok());
    if (name == "dup2" || name == "dup3") {
      CHECK_FALSE(two.lower);
      CHECK_FALSE(two.upper);
      const auto cubes = check_dsegal_cubes(s, 2, 5);
      CHECK_FALSE(cubes.rows[0].invertible());
    }
    // passing lower or upper 2-Segal implies full 3-Segal
    if (two.lower || two.upper) CHECK(check_dsegal_triangulations(s, 3, 6, SegalMode::Full).ok());
  }
}

TEST_CASE("lower and upper diagnostics") {
  for (const auto& [name, s] : corpus())
    for (int d : {2, 3}) {
      CAPTURE(name);
      const auto r = lower_upper_diagnostic(s, d);
      if (d == 3) CHECK(r.direct_matches);
      if (d == 2) CHECK(r.swapped_matches);
    }
  const auto low2 = lower_upper_diagnostic(lower2_mutant(), 2);
  CHECK(low2.tri_lower);
  CHECK_FALSE(low2.tri_upper);
  CHECK(low2.cube_u);
  CHECK_FALSE(low2.cube_l);
  CHECK(low2.swapped_matches);
  CHECK_FALSE(low2.direct_matches);
  const auto low3 = lower_upper_diagnostic(lower3_mutant(6), 3);
  CHECK(low3.tri_lower);
  CHECK_FALSE(low3.tri_upper);
  CHECK(low3.direct_matches);
  CHECK_FALSE(low3.swapped_matches);
  CHECK(validate(lower2_mutant()).empty());
}

TEST_CASE("polygon triangulations for 2-Segal inputs") {
  std::mt19937_64 rng(30);
  for (const auto& [name, s] : corpus()) {
    if (!check_dsegal_triangulations(s, 2, 5, SegalMode::Full).ok()) continue;
    CAPTURE(name);
    for (int n = 3; n <= 5; ++n)
      for (int t = 0; t < 5; ++t) CHECK(is_adapted(s, n, VertexComplex(n, random_polygon(rng, n))).adapted);
  }
}

TEST_CASE("chain form against the union form") {
  for (const auto& [name, s] : corpus()) {
    CAPTURE(name);
    for (int n = 2; n <= 6; ++n)
      for (TriKind k : {TriKind::Lower, TriKind::Upper}) CHECK(chain_form_agrees(s, gale_triangulation(n, 2, k)));
  }
  // L[4,3] = {0123, 0134, 1234}: the outer two share the triangle 123, which
  // consecutive gluing never constrains
  const SSet z2 = nerve_monoid(cyclic_group(2), 6);
  CHECK_FALSE(chain_form_agrees(z2, gale_triangulation(4, 3, TriKind::Lower)));
  CHECK(chain_form_agrees(point_sset(6), gale_triangulation(4, 3, TriKind::Lower)));
}

TEST_CASE("lax degree") {
  const auto nerve = lax_degree(nerve_monoid(cyclic_group(3), 6), 5);
  CHECK(nerve.segal_d == 2);
  CHECK(nerve.lax_degree() == 1);
  CHECK(lax_degree(point_sset(6), 5).segal_d == 2);
  const auto fe = lax_degree(free_edge_mutant(cyclic_group(2), 6), 5);
  CHECK(fe.segal_d == 3);
  CHECK(fe.lax_degree() == 2);
  CHECK(lax_degree(duplicate_triangle_mutant(6), 5).segal_d == 4);
  CHECK_THROWS_AS(lax_degree(point_sset(5), 5), BoundError);
}
