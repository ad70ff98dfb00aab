#pragma once

// Exact rational geometry of cyclic polytopes on the moment curve, used to
// re-derive the lower and upper triangulations independently of evenness.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsegal/segal.hpp"

namespace hsegal {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoint = std::vector<Rational>;

RationalPoint moment_point(std::int64_t t, int d);  // (t, t^2, .., t^d)
RationalPoint drop_last(const RationalPoint& p);
std::string to_string(const Rational& q);

// Exact determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m);

// d! times the volume of the simplex on moment points {t in I} in R^d, signed.
Rational simplex_det(VertexSet subset, int d);
Rational simplex_volume(VertexSet subset, int d);

// Lower (upper) facets of C_{d+1}(n): (d+1)-subsets with every other vertex
// strictly above (below) their hyperplane. Dropping the last coordinate
// projects them onto a triangulation of C_d(n). Needs 1 <= d <= n.
std::vector<VertexSet> envelope_facets(int n, int d, TriKind side);

bool cross_check_gale(int n, int d);

// Barycentric coordinates of x in the simplex on {gamma_d(t) : t in subset}.
std::vector<Rational> barycentric(const RationalPoint& x, VertexSet subset, int d);

enum class Sides { Lower, Upper, Both };
std::string to_string(Sides s);

struct PointLocation {
  std::vector<VertexSet> containing;  // simplices of the triangulation holding x
  bool shared_face = true;            // all of them agree on the supporting face
  VertexSet support = 0;              // that face, when shared
};
PointLocation locate(const RationalPoint& x, const std::vector<VertexSet>& simplices, int d);

struct Certificate {
  int n = 0, d = 0;
  Sides side = Sides::Both;
  Rational lower_volume, upper_volume;  // sums of simplex volumes
  std::size_t samples = 0;
  bool ok = false;
  std::string failure;  // "volume", "uncovered" or "overlap"
  TriKind failing_side = TriKind::Lower;
  RationalPoint witness_point;
  std::vector<VertexSet> witness_simplices;
};

// Volume identity between the two triangulations, plus `samples` seeded random
// rational points of C_d(n) located in the chosen triangulation(s).
Certificate certify_triangulation(int n, int d, Sides side, std::size_t samples, std::uint64_t seed);

}  // namespace hsegal
