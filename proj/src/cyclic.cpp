#include "hsegal/cyclic.hpp"

#include <algorithm>
#include <random>

#include "hsegal/errors.hpp"

namespace hsegal {

namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<RationalPoint> points_of(VertexSet subset, int d) {
  std::vector<RationalPoint> out;
  for (int t : vertex_list(subset)) out.push_back(moment_point(t, d));
  return out;
}

void check_range(int n, int d, const char* who) {
  if (d < 1 || d > n || n > kMaxDim) throw ArgumentError(std::string(who) + ": need 1 <= d <= n <= 15");
}

// Solves a x = b exactly; throws ContractError if a is singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ContractError("solve: singular system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

}  // namespace

RationalPoint moment_point(std::int64_t t, int d) {
  if (d < 1) throw ArgumentError("moment_point: d must be positive");
  RationalPoint p;
  Rational x = 1;
  for (int k = 1; k <= d; ++k) p.push_back(x *= t);
  return p;
}

RationalPoint drop_last(const RationalPoint& p) {
  if (p.empty()) throw ArgumentError("drop_last: empty point");
  return RationalPoint(p.begin(), p.end() - 1);
}

std::string to_string(const Rational& q) { return q.str(); }

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational simplex_det(VertexSet subset, int d) {
  const auto pts = points_of(subset, d);
  if (static_cast<int>(pts.size()) != d + 1) throw ArgumentError("simplex_det: need d+1 vertices");
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m[r][c] = pts[r + 1][c] - pts[0][c];
  return determinant(std::move(m));
}

Rational simplex_volume(VertexSet subset, int d) {
  Rational v = abs(simplex_det(subset, d));
  for (int k = 2; k <= d; ++k) v /= k;
  return v;
}

std::vector<VertexSet> envelope_facets(int n, int d, TriKind side) {
  check_range(n, d, "envelope_facets");
  if (side == TriKind::Custom) throw ArgumentError("envelope_facets: side must be lower or upper");
  const int big = d + 1;
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s < (VertexSet{1} << (n + 1)); ++s) {
    if (__builtin_popcount(s) != d + 1) continue;
    const auto pts = points_of(s, big);
    // f(y) = det[p_1 - p_0, .., p_d - p_0, y - p_0] = <N, y - p_0>
    auto f = [&](const RationalPoint& y) {
      std::vector<std::vector<Rational>> m;
      for (int r = 1; r <= d; ++r) {
        std::vector<Rational> row(big);
        for (int c = 0; c < big; ++c) row[c] = pts[r][c] - pts[0][c];
        m.push_back(row);
      }
      std::vector<Rational> last(big);
      for (int c = 0; c < big; ++c) last[c] = y[c] - pts[0][c];
      m.push_back(last);
      return determinant(std::move(m));
    };
    RationalPoint up = pts[0];
    up[big - 1] += 1;
    const int normal = sign(f(up));
    if (normal == 0) throw ContractError("envelope_facets: vertical hyperplane");
    bool facet = true;
    for (int t = 0; t <= n && facet; ++t) {
      if (s & (VertexSet{1} << t)) continue;
      const int h = sign(f(moment_point(t, big))) * normal;
      if (h == 0) throw ContractError("envelope_facets: degenerate hull");
      facet = side == TriKind::Lower ? h > 0 : h < 0;
    }
    if (facet) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return vertex_list(a) < vertex_list(b); });
  return out;
}

bool cross_check_gale(int n, int d) {
  for (TriKind k : {TriKind::Lower, TriKind::Upper})
    if (envelope_facets(n, d, k) != gale_triangulation(n, d, k).simplices) return false;
  return true;
}

std::vector<Rational> barycentric(const RationalPoint& x, VertexSet subset, int d) {
  const auto pts = points_of(subset, d);
  if (static_cast<int>(pts.size()) != d + 1 || static_cast<int>(x.size()) != d)
    throw ArgumentError("barycentric: dimension mismatch");
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(d + 1));
  std::vector<Rational> b(d + 1);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c <= d; ++c) a[r][c] = pts[c][r];
    b[r] = x[r];
  }
  for (int c = 0; c <= d; ++c) a[d][c] = 1;
  b[d] = 1;
  return solve(std::move(a), std::move(b));
}

std::string to_string(Sides s) {
  switch (s) {
    case Sides::Lower: return "lower";
    case Sides::Upper: return "upper";
    default: return "both";
  }
}

PointLocation locate(const RationalPoint& x, const std::vector<VertexSet>& simplices, int d) {
  PointLocation loc;
  bool first = true;
  for (VertexSet s : simplices) {
    const auto lambda = barycentric(x, s, d);
    const auto verts = vertex_list(s);
    VertexSet support = 0;
    bool inside = true;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i] < 0) inside = false;
      if (lambda[i] > 0) support |= VertexSet{1} << verts[i];
    }
    if (!inside) continue;
    loc.containing.push_back(s);
    if (first) loc.support = support;
    else if (support != loc.support) loc.shared_face = false;
    first = false;
  }
  return loc;
}

Certificate certify_triangulation(int n, int d, Sides side, std::size_t samples, std::uint64_t seed) {
  check_range(n, d, "certify_triangulation");
  Certificate c;
  c.n = n;
  c.d = d;
  c.side = side;
  c.samples = samples;
  const auto lower = envelope_facets(n, d, TriKind::Lower);
  const auto upper = envelope_facets(n, d, TriKind::Upper);
  for (VertexSet s : lower) c.lower_volume += simplex_volume(s, d);
  for (VertexSet s : upper) c.upper_volume += simplex_volume(s, d);
  if (c.lower_volume != c.upper_volume) {
    c.failure = "volume";
    return c;
  }

  std::vector<TriKind> kinds;
  if (side != Sides::Upper) kinds.push_back(TriKind::Lower);
  if (side != Sides::Lower) kinds.push_back(TriKind::Upper);
  std::vector<RationalPoint> verts;
  for (int t = 0; t <= n; ++t) verts.push_back(moment_point(t, d));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 12);
  for (std::size_t k = 0; k < samples; ++k) {
    // a random nonempty subset of vertices with positive integer weights, so
    // boundary points of every face come up as well as interior ones
    std::vector<int> w(n + 1, 0);
    while (std::all_of(w.begin(), w.end(), [](int v) { return v == 0; }))
      for (int t = 0; t <= n; ++t) w[t] = rng() % 2 ? weight(rng) : 0;
    int total = 0;
    for (int v : w) total += v;
    RationalPoint x(d, 0);
    for (int t = 0; t <= n; ++t)
      for (int r = 0; r < d; ++r) x[r] += Rational(w[t], total) * verts[t][r];
    for (TriKind kind : kinds) {
      const PointLocation loc = locate(x, kind == TriKind::Lower ? lower : upper, d);
      if (loc.containing.empty() || !loc.shared_face) {
        c.failure = loc.containing.empty() ? "uncovered" : "overlap";
        c.failing_side = kind;
        c.witness_point = x;
        c.witness_simplices = loc.containing;
        return c;
      }
    }
  }
  c.ok = true;
  return c;
}

}  // namespace hsegal
