#pragma once

// Gale evenness triangulations, adaptedness, and the 1-Segal and higher Segal
// checks by triangulations and by associator cubes.

#include <optional>
#include <string>
#include <vector>

#include "hsegal/corrlim.hpp"
#include "hsegal/sset.hpp"

namespace hsegal {

// For every j outside I, the number of elements of I above j is even (odd).
bool is_even_subset(VertexSet s, int n);
bool is_odd_subset(VertexSet s, int n);

enum class TriKind { Lower, Upper, Custom };
std::string to_string(TriKind k);

struct Triangulation {
  int n = 0;
  int d = 0;
  TriKind kind = TriKind::Custom;
  std::vector<VertexSet> simplices;  // ascending by vertex list
};

// All even (lower) or odd (upper) (d+1)-subsets of {0..n}.
Triangulation gale_triangulation(int n, int d, TriKind kind);
VertexComplex triangulation_complex(const Triangulation& t);

enum class AdaptWitness { None, NoPreimage, MultiplePreimages };
std::string to_string(AdaptWitness w);

struct AdaptednessReport {
  bool adapted = false;
  AdaptWitness witness = AdaptWitness::None;
  std::string witness_element;  // first offending element of hom(K, S)
  std::size_t simplices = 0;    // |hom(Delta_n, S)|
  std::size_t restricted = 0;   // |hom(K, S)|
};

// Restriction hom(Delta_n, S) -> hom(K, S) along the inclusion.
AdaptednessReport is_adapted(const SSet& s, int n, const VertexComplex& k);

// Chain form of gluing: simplices in the given order glued along consecutive
// intersections only. True when it counts the same as hom over the union.
bool chain_form_agrees(const SSet& s, const Triangulation& t);

struct OneSegalReport {
  bool ok = true;
  int n = 0, m = 0;  // first failing split {0..m} u {m..n}
  AdaptednessReport failure;
};
OneSegalReport check_1segal(const SSet& s, int n_max);

enum class SegalMode { Full, Reduced };

struct TriangulationRow {
  int n = 0, d = 0;
  TriKind kind = TriKind::Lower;
  AdaptednessReport result;
};

struct TriangulationVerdict {
  int d = 0, n_max = 0;
  SegalMode mode = SegalMode::Full;
  bool lower = true, upper = true;
  std::vector<TriangulationRow> rows;
  bool ok() const { return lower && upper; }
};

// Full: L[n,d] and U[n,d] for d <= n <= n_max. Reduced: L[n+1,n] and U[n+1,n]
// for d <= n <= n_max - 1.
TriangulationVerdict check_dsegal_triangulations(const SSet& s, int d, int n_max, SegalMode mode);

struct CubeRow {
  int n = 0;
  PullbackReport upper, lower;  // alternating subcubes u = (+,-,..), l = (-,+,..)
  bool invertible() const { return upper.pullback && lower.pullback; }
};

struct CubeVerdict {
  int d = 0, n_max = 0;
  std::vector<CubeRow> rows;
  bool ok() const;
};

CubeRow check_cube(const SSet& s, int n);
// H_n for d <= n <= n_max; needs dim_bound >= n_max + 1.
CubeVerdict check_dsegal_cubes(const SSet& s, int d, int n_max);

struct LowerUpperDiagnostic {
  int d = 0;
  bool tri_lower = false, tri_upper = false;  // L[d+1,d], U[d+1,d]
  bool cube_l = false, cube_u = false;        // alternating subcubes of H_d
  // l <-> L and u <-> U, versus the swapped pairing
  bool direct_matches = false, swapped_matches = false;
};
LowerUpperDiagnostic lower_upper_diagnostic(const SSet& s, int d);

struct LaxDegreeReport {
  int n_max = 0;
  std::vector<bool> invertible;      // index n - 2 for 2 <= n <= n_max
  std::optional<int> segal_d;        // smallest d >= 2 with H_n invertible for d <= n <= n_max
  std::optional<int> lax_degree() const { return segal_d ? std::optional<int>(*segal_d - 1) : std::nullopt; }
};
LaxDegreeReport lax_degree(const SSet& s, int n_max);

}  // namespace hsegal
