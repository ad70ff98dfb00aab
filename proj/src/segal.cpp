#include "hsegal/segal.hpp"

#include <algorithm>
#include <map>

#include "hsegal/errors.hpp"
#include "hsegal/hcomb.hpp"

namespace hsegal {

namespace {

int popcount(VertexSet s) { return __builtin_popcount(s); }

bool parity_subset(VertexSet s, int n, int parity) {
  for (int j = 0; j <= n; ++j) {
    if (s & (VertexSet{1} << j)) continue;
    const int above = popcount(s >> (j + 1));
    if (above % 2 != parity) return false;
  }
  return true;
}

std::string describe_element(const SSet& s, const HomElement& h) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? ", " : "") + describe(s, h[i]);
  return out + "]";
}

// Positions of the vertices of sub inside sup, both as bitmasks.
std::vector<int> relative_positions(VertexSet sub, VertexSet sup) {
  const auto all = vertex_list(sup);
  std::vector<int> r;
  for (int v : vertex_list(sub)) r.push_back(static_cast<int>(std::find(all.begin(), all.end(), v) - all.begin()));
  return r;
}

}  // namespace

bool is_even_subset(VertexSet s, int n) { return parity_subset(s, n, 0); }
bool is_odd_subset(VertexSet s, int n) { return parity_subset(s, n, 1); }

std::string to_string(TriKind k) {
  switch (k) {
    case TriKind::Lower: return "lower";
    case TriKind::Upper: return "upper";
    default: return "custom";
  }
}

Triangulation gale_triangulation(int n, int d, TriKind kind) {
  if (d < 0 || d > n || n > kMaxDim) throw ArgumentError("gale_triangulation: need 0 <= d <= n <= 15");
  if (kind == TriKind::Custom) throw ArgumentError("gale_triangulation: kind must be lower or upper");
  Triangulation t{n, d, kind, {}};
  for (VertexSet s = 0; s < (VertexSet{1} << (n + 1)); ++s) {
    if (popcount(s) != d + 1) continue;
    if (kind == TriKind::Lower ? is_even_subset(s, n) : is_odd_subset(s, n)) t.simplices.push_back(s);
  }
  std::sort(t.simplices.begin(), t.simplices.end(),
            [](VertexSet a, VertexSet b) { return vertex_list(a) < vertex_list(b); });
  return t;
}

VertexComplex triangulation_complex(const Triangulation& t) { return VertexComplex(t.n, t.simplices); }

std::string to_string(AdaptWitness w) {
  switch (w) {
    case AdaptWitness::NoPreimage: return "no_preimage";
    case AdaptWitness::MultiplePreimages: return "multiple_preimages";
    default: return "none";
  }
}

AdaptednessReport is_adapted(const SSet& s, int n, const VertexComplex& k) {
  if (k.ambient() != n) throw ArgumentError("is_adapted: complex is not inside Delta_n");
  const HomSet full = hom(VertexComplex::full(n), s);
  const HomSet part = hom(k, s);
  VertexMap id(n + 1);
  for (int i = 0; i <= n; ++i) id[i] = i;
  std::vector<std::size_t> hits(part.elements.size(), 0);
  for (const auto& x : full.elements) {
    const std::size_t i = part.index_of(restrict(s, id, k, full.complex, x));
    if (i == static_cast<std::size_t>(-1)) throw ContractError("is_adapted: restriction leaves hom(K, S)");
    ++hits[i];
  }
  AdaptednessReport r;
  r.simplices = full.elements.size();
  r.restricted = part.elements.size();
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i] != 1) {
      r.witness = hits[i] ? AdaptWitness::MultiplePreimages : AdaptWitness::NoPreimage;
      r.witness_element = describe_element(s, part.elements[i]);
      return r;
    }
  r.adapted = true;
  return r;
}

bool chain_form_agrees(const SSet& s, const Triangulation& t) {
  if (t.simplices.empty()) return true;
  std::vector<std::vector<Simplex>> cells;
  for (VertexSet x : t.simplices) cells.push_back(materialize(s, popcount(x) - 1));
  std::vector<std::size_t> count(cells[0].size(), 1);
  for (std::size_t j = 1; j < t.simplices.size(); ++j) {
    const VertexSet a = t.simplices[j - 1], b = t.simplices[j], meet = a & b;
    std::map<Simplex, std::size_t> by_meet;
    if (meet) {
      const auto pa = relative_positions(meet, a);
      for (std::size_t i = 0; i < cells[j - 1].size(); ++i) by_meet[act(s, cells[j - 1][i], pa)] += count[i];
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < count.size(); ++i) total += count[i];
    std::vector<std::size_t> next(cells[j].size(), 0);
    const auto pb = meet ? relative_positions(meet, b) : std::vector<int>{};
    for (std::size_t i = 0; i < cells[j].size(); ++i) {
      if (!meet) {
        next[i] = total;
        continue;
      }
      auto it = by_meet.find(act(s, cells[j][i], pb));
      next[i] = it == by_meet.end() ? 0 : it->second;
    }
    count = std::move(next);
  }
  std::size_t chain = 0;
  for (std::size_t c : count) chain += c;
  return chain == hom(triangulation_complex(t), s).elements.size();
}

OneSegalReport check_1segal(const SSet& s, int n_max) {
  OneSegalReport r;
  for (int n = 2; n <= n_max; ++n)
    for (int m = 1; m < n; ++m) {
      const AdaptednessReport a = is_adapted(s, n, VertexComplex(n, {vertex_range(0, m), vertex_range(m, n)}));
      if (!a.adapted) {
        r.ok = false;
        r.n = n;
        r.m = m;
        r.failure = a;
        return r;
      }
    }
  return r;
}

TriangulationVerdict check_dsegal_triangulations(const SSet& s, int d, int n_max, SegalMode mode) {
  if (d < 1) throw ArgumentError("check_dsegal_triangulations: d must be positive");
  if (n_max > s.dim_bound()) throw BoundError("check_dsegal_triangulations: n_max exceeds dim_bound", n_max);
  TriangulationVerdict v;
  v.d = d;
  v.n_max = n_max;
  v.mode = mode;
  auto run = [&](int n, int dd) {
    for (TriKind k : {TriKind::Lower, TriKind::Upper}) {
      const Triangulation t = gale_triangulation(n, dd, k);
      TriangulationRow row{n, dd, k, is_adapted(s, n, triangulation_complex(t))};
      (k == TriKind::Lower ? v.lower : v.upper) &= row.result.adapted;
      v.rows.push_back(std::move(row));
    }
  };
  if (mode == SegalMode::Full)
    for (int n = d; n <= n_max; ++n) run(n, d);
  else
    for (int n = d; n <= n_max - 1; ++n) run(n + 1, n);
  return v;
}

bool CubeVerdict::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CubeRow& r) { return r.invertible(); });
}

CubeRow check_cube(const SSet& s, int n) {
  if (n + 1 > s.dim_bound()) throw BoundError("check_cube: H_" + std::to_string(n) + " needs Delta_" + std::to_string(n + 1), n + 1);
  const HCombCube h = corr_cube(associator_cube(n));
  const Position center(n, Pos::Zero);
  CubeRow r;
  r.n = n;
  r.upper = is_pullback_cube(evaluate_subcube(h, s, center, alternating_upper(n)));
  r.lower = is_pullback_cube(evaluate_subcube(h, s, center, alternating_lower(n)));
  return r;
}

CubeVerdict check_dsegal_cubes(const SSet& s, int d, int n_max) {
  if (d < 1) throw ArgumentError("check_dsegal_cubes: d must be positive");
  if (n_max + 1 > s.dim_bound()) throw BoundError("check_dsegal_cubes: n_max + 1 exceeds dim_bound", n_max + 1);
  CubeVerdict v;
  v.d = d;
  v.n_max = n_max;
  for (int n = d; n <= n_max; ++n) v.rows.push_back(check_cube(s, n));
  return v;
}

LowerUpperDiagnostic lower_upper_diagnostic(const SSet& s, int d) {
  if (d + 1 > s.dim_bound()) throw BoundError("lower_upper_diagnostic: needs Delta_" + std::to_string(d + 1), d + 1);
  LowerUpperDiagnostic r;
  r.d = d;
  r.tri_lower = is_adapted(s, d + 1, triangulation_complex(gale_triangulation(d + 1, d, TriKind::Lower))).adapted;
  r.tri_upper = is_adapted(s, d + 1, triangulation_complex(gale_triangulation(d + 1, d, TriKind::Upper))).adapted;
  const CubeRow c = check_cube(s, d);
  r.cube_l = c.lower.pullback;
  r.cube_u = c.upper.pullback;
  r.direct_matches = r.cube_l == r.tri_lower && r.cube_u == r.tri_upper;
  r.swapped_matches = r.cube_u == r.tri_lower && r.cube_l == r.tri_upper;
  return r;
}

LaxDegreeReport lax_degree(const SSet& s, int n_max) {
  if (n_max + 1 > s.dim_bound()) throw BoundError("lax_degree: n_max + 1 exceeds dim_bound", n_max + 1);
  LaxDegreeReport r;
  r.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) r.invertible.push_back(check_cube(s, n).invertible());
  // scan down from n_max while every cube stays invertible
  for (int d = n_max; d >= 2 && r.invertible[d - 2]; --d) r.segal_d = d;
  return r;
}

}  // namespace hsegal
