#pragma once

// Shared inputs for the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hsegal/errors.hpp"
#include "hsegal/segal.hpp"
#include "hsegal/sset.hpp"

namespace fixtures {

inline hsegal::Monoid trivial_monoid() { return {{"e"}, {{0}}}; }

inline hsegal::Monoid cyclic_group(int n) {
  hsegal::Monoid m;
  for (int i = 0; i < n; ++i) m.elements.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  m.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[a][b] = (a + b) % n;
  return m;
}

// {e, a, z}: a*a = a, z absorbing.
inline hsegal::Monoid absorbing_monoid() {
  return {{"e", "a", "z"}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}};
}

inline hsegal::Category chain_poset(int n) {
  hsegal::Category c;
  for (int i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      idx[i][j] = static_cast<int>(c.morphisms.size());
      c.morphisms.push_back({i == j ? "id" + std::to_string(i) : std::to_string(i) + "<" + std::to_string(j), i, j});
    }
  for (int i = 0; i < n; ++i) c.identities.push_back(idx[i][i]);
  const int nm = static_cast<int>(c.morphisms.size());
  c.compose.assign(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c.morphisms[f].tgt == c.morphisms[g].src) c.compose[f][g] = idx[c.morphisms[f].src][c.morphisms[g].tgt];
  return c;
}

// Degenerate 1-simplex on the unique vertex.
inline hsegal::Simplex unit_edge() { return hsegal::Simplex::make({0, 0}, 0); }

// Z/2 nerve with a second triangle bounded like s_0(g): d0 = g, d1 = g, d2 = unit.
inline hsegal::SSet duplicate_triangle_mutant(int dim_bound) {
  using namespace hsegal;
  const SSet base = nerve_monoid(cyclic_group(2), dim_bound);
  const Simplex g = Simplex::nondegenerate(1, 0);
  return attach_cell(base, 2, {g, g, unit_edge()}, "g'");
}

// Z/2 nerve with a second 3-cell bounded like (g,g,g).
inline hsegal::SSet duplicate_tetrahedron_mutant(int dim_bound) {
  using namespace hsegal;
  const SSet base = nerve_monoid(cyclic_group(2), dim_bound);
  std::vector<Simplex> boundary;
  for (int i = 0; i <= 3; ++i) boundary.push_back(base.cell_face(3, 0, i));
  return attach_cell(base, 3, boundary, "ggg'");
}

// Nerve with an extra edge h on the single vertex and no 2-cells touching it.
inline hsegal::SSet free_edge_mutant(const hsegal::Monoid& m, int dim_bound) {
  using namespace hsegal;
  return attach_cell(nerve_monoid(m, dim_bound), 1, {Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 0)}, "h");
}

// Point with a free edge h and a triangle bounded by (h, unit, unit).
inline hsegal::SSet lower3_mutant(int dim_bound) {
  using namespace hsegal;
  const SSet base = free_edge_mutant(trivial_monoid(), dim_bound);
  return attach_cell(base, 2, {Simplex::nondegenerate(1, 0), unit_edge(), unit_edge()}, "t");
}

// Z/2 nerve with a triangle t bounded by (g, unit, g), then 3-cells attached
// until Delta_3 restricts bijectively onto the lower triangulation {012, 023};
// the upper one {013, 123} stays non-bijective. Only meaningful up to n = 3.
inline hsegal::SSet lower2_mutant() {
  using namespace hsegal;
  const Simplex g = Simplex::nondegenerate(1, 0);
  SSet s = attach_cell(nerve_monoid(cyclic_group(2), 3), 2, {g, unit_edge(), g}, "t");
  const VertexComplex lower = triangulation_complex(gale_triangulation(3, 2, TriKind::Lower));
  const VertexMap id{0, 1, 2, 3};
  for (int added = 0; !is_adapted(s, 3, lower).adapted; ++added) {
    const HomSet full = hom(VertexComplex::full(3), s), part = hom(lower, s);
    std::vector<char> hit(part.elements.size(), 0);
    for (const auto& x : full.elements) hit[part.index_of(restrict(s, id, lower, full.complex, x))] = 1;
    const auto miss = std::find(hit.begin(), hit.end(), 0) - hit.begin();
    const HomElement& want = part.elements[miss];  // faces 012 and 023
    bool attached = false;
    for (const auto& a : materialize(s, 2)) {
      for (const auto& b : materialize(s, 2)) {
        try {
          s = attach_cell(s, 3, {a, want[1], b, want[0]}, "w" + std::to_string(added));
          attached = true;
          break;
        } catch (const InputError&) {
        }
      }
      if (attached) break;
    }
    if (!attached) throw ContractError("lower2_mutant: no filler found");
  }
  return s;
}

}  // namespace fixtures
