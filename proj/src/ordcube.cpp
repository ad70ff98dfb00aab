#include "hsegal/ordcube.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hsegal/errors.hpp"

namespace hsegal {

OrdMap make_map(int src, int tgt, std::vector<int> values) {
  if (src < 0 || tgt < 0) throw ArgumentError("ordinal sizes must be nonnegative");
  if (static_cast<int>(values.size()) != src) throw ArgumentError("map needs one value per source element");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= tgt) throw ArgumentError("map value out of range");
    if (i > 0 && values[i] < values[i - 1]) throw ArgumentError("map is not monotone");
  }
  return OrdMap{OrdObj{src}, OrdObj{tgt}, std::move(values)};
}

OrdMap identity_map(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return OrdMap{OrdObj{n}, OrdObj{n}, std::move(v)};
}

OrdMap compose(const OrdMap& g, const OrdMap& f) {
  if (f.tgt.size != g.src.size) throw ArgumentError("maps are not composable");
  std::vector<int> v(f.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.values[f.values[i]];
  return OrdMap{f.src, g.tgt, std::move(v)};
}

OrdMap ordered_union(const OrdMap& f, const OrdMap& g) {
  std::vector<int> v = f.values;
  for (int x : g.values) v.push_back(x + f.tgt.size);
  return OrdMap{OrdObj{f.src.size + g.src.size}, OrdObj{f.tgt.size + g.tgt.size}, std::move(v)};
}

bool is_surjective(const OrdMap& f) {
  std::vector<bool> hit(f.tgt.size, false);
  for (int x : f.values) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_identity(const OrdMap& f) { return f == identity_map(f.src.size); }

std::string to_string(const OrdMap& f) {
  std::ostringstream os;
  os << "<" << f.src.size << ">-><" << f.tgt.size << "> (";
  for (std::size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << f.values[i];
  os << ")";
  return os.str();
}

OrdMap surjection(int m, int i) {
  if (m < 2 || i < 1 || i > m - 1) throw ArgumentError("surjection(m, i) needs 1 <= i <= m-1");
  std::vector<int> v(m);
  for (int k = 0; k < m; ++k) v[k] = k < i ? k : k - 1;
  return OrdMap{OrdObj{m}, OrdObj{m - 1}, std::move(v)};
}

OrdMap terminal_map(int m) {
  if (m < 0) throw ArgumentError("negative ordinal");
  return OrdMap{OrdObj{m}, OrdObj{1}, std::vector<int>(m, 0)};
}

std::vector<int> cut_pullback(const OrdMap& f) {
  std::vector<int> out(f.tgt.size + 1);
  for (int k = 0; k <= f.tgt.size; ++k)
    out[k] = static_cast<int>(std::count_if(f.values.begin(), f.values.end(), [k](int y) { return y < k; }));
  return out;
}

PlusCube::PlusCube(int dim, std::vector<OrdObj> vertices, std::vector<OrdMap> edges)
    : dim_(dim), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (dim < 0 || dim > 16) throw ArgumentError("cube dimension out of range");
  const std::size_t nv = std::size_t{1} << dim;
  if (vertices_.size() != nv) throw ArgumentError("cube needs 2^dim vertices");
  edges_.resize(nv * dim);
  for (CubeVertex v = 0; v < nv; ++v) {
    for (int d = 1; d <= dim; ++d) {
      if (!has_edge(v, d)) continue;
      const OrdMap& e = edges_[v * dim + d - 1];
      const CubeVertex w = v | direction_bit(dim, d);
      if (e.src != vertices_[v] || e.tgt != vertices_[w] || e.values.size() != static_cast<std::size_t>(e.src.size))
        throw ArgumentError("edge " + vertex_label(dim, v) + " dir " + std::to_string(d) +
                            " does not match its endpoints");
    }
  }
}

const OrdMap& PlusCube::edge(CubeVertex v, int dir) const {
  if (dir < 1 || dir > dim_ || !has_edge(v, dir)) throw ArgumentError("no such cube edge");
  return edges_[v * dim_ + dir - 1];
}

OrdMap PlusCube::composite(CubeVertex from, CubeVertex to) const {
  if ((from & ~to) != 0) throw ArgumentError("composite needs from <= to");
  OrdMap acc = identity_map(vertex(from).size);
  CubeVertex cur = from;
  for (int d = 1; d <= dim_; ++d) {
    const CubeVertex b = direction_bit(dim_, d);
    if ((to & b) && !(cur & b)) {
      acc = compose(edge(cur, d), acc);
      cur |= b;
    }
  }
  return acc;
}

std::optional<std::string> PlusCube::commutativity_violation() const {
  const CubeVertex nv = CubeVertex{1} << dim_;
  for (CubeVertex v = 0; v < nv; ++v)
    for (int a = 1; a <= dim_; ++a)
      for (int b = a + 1; b <= dim_; ++b) {
        if (!has_edge(v, a) || !has_edge(v, b)) continue;
        const CubeVertex va = v | direction_bit(dim_, a), vb = v | direction_bit(dim_, b);
        if (compose(edge(va, b), edge(v, a)) != compose(edge(vb, a), edge(v, b)))
          return "square at " + vertex_label(dim_, v) + " in directions " + std::to_string(a) + "," +
                 std::to_string(b);
      }
  return std::nullopt;
}

bool operator==(const PlusCube& a, const PlusCube& b) {
  if (a.dim_ != b.dim_ || a.vertices_ != b.vertices_) return false;
  const CubeVertex nv = CubeVertex{1} << a.dim_;
  for (CubeVertex v = 0; v < nv; ++v)
    for (int d = 1; d <= a.dim_; ++d)
      if (a.has_edge(v, d) && a.edge(v, d) != b.edge(v, d)) return false;
  return true;
}

std::string vertex_label(int dim, CubeVertex v) {
  std::string s;
  for (int d = 1; d <= dim; ++d) s += (v & direction_bit(dim, d)) ? '1' : '0';
  return s.empty() ? std::string("()") : s;
}

namespace {

// A_n for n >= 0; A_0 is the point <1>.
PlusCube associator_or_point(int n) {
  const CubeVertex nv = CubeVertex{1} << n;
  std::vector<OrdObj> verts(nv);
  std::vector<OrdMap> edges(nv * n);
  for (CubeVertex v = 0; v < nv; ++v) {
    const int m = n + 1 - depth(v);
    verts[v] = OrdObj{m};
    int pos = 0;
    for (int d = 1; d <= n; ++d) {
      if (v & direction_bit(n, d)) continue;
      edges[v * n + d - 1] = surjection(m, ++pos);
    }
  }
  return PlusCube(n, std::move(verts), std::move(edges));
}

std::vector<int> directions_of(int n, CubeVertex mask) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (mask & direction_bit(n, d)) out.push_back(d);
  return out;
}

}  // namespace

PlusCube associator_cube(int n) {
  if (n < 1) throw ArgumentError("associator_cube needs n >= 1");
  PlusCube c = associator_or_point(n);
  if (auto bad = c.commutativity_violation()) throw ContractError("associator cube does not commute: " + *bad);
  return c;
}

PlusCube constant_cube(int dim, OrdObj x) {
  const CubeVertex nv = CubeVertex{1} << dim;
  return PlusCube(dim, std::vector<OrdObj>(nv, x), std::vector<OrdMap>(nv * dim, identity_map(x.size)));
}

PlusCube ordered_union(const PlusCube& a, const PlusCube& b) {
  if (a.dim() != b.dim()) throw ArgumentError("ordered union needs cubes of equal dimension");
  const int n = a.dim();
  const CubeVertex nv = CubeVertex{1} << n;
  std::vector<OrdObj> verts(nv);
  std::vector<OrdMap> edges(nv * n);
  for (CubeVertex v = 0; v < nv; ++v) {
    verts[v] = OrdObj{a.vertex(v).size + b.vertex(v).size};
    for (int d = 1; d <= n; ++d)
      if (a.has_edge(v, d)) edges[v * n + d - 1] = ordered_union(a.edge(v, d), b.edge(v, d));
  }
  return PlusCube(n, std::move(verts), std::move(edges));
}

PlusCube degenerate_extension(const PlusCube& c, int dim, const std::vector<int>& directions) {
  if (static_cast<int>(directions.size()) != c.dim()) throw ArgumentError("need one target direction per cube direction");
  for (std::size_t k = 0; k < directions.size(); ++k)
    if (directions[k] < 1 || directions[k] > dim || (k && directions[k] <= directions[k - 1]))
      throw ArgumentError("directions must be ascending and within the target dimension");
  auto project = [&](CubeVertex v) {
    CubeVertex w = 0;
    for (std::size_t k = 0; k < directions.size(); ++k)
      if (v & direction_bit(dim, directions[k])) w |= direction_bit(c.dim(), static_cast<int>(k) + 1);
    return w;
  };
  const CubeVertex nv = CubeVertex{1} << dim;
  std::vector<OrdObj> verts(nv);
  std::vector<OrdMap> edges(nv * dim);
  for (CubeVertex v = 0; v < nv; ++v) {
    const CubeVertex pv = project(v);
    verts[v] = c.vertex(pv);
    for (int d = 1; d <= dim; ++d) {
      if (v & direction_bit(dim, d)) continue;
      auto it = std::find(directions.begin(), directions.end(), d);
      edges[v * dim + d - 1] = it == directions.end()
                                   ? identity_map(c.vertex(pv).size)
                                   : c.edge(pv, static_cast<int>(it - directions.begin()) + 1);
    }
  }
  return PlusCube(dim, std::move(verts), std::move(edges));
}

PlusCube cube_face(const PlusCube& c, int dir, Side side) {
  const int n = c.dim();
  if (dir < 1 || dir > n) throw ArgumentError("cube_face: bad direction");
  const int m = n - 1;
  // face direction k (1-based) is cube direction k, or k+1 past dir
  auto lift = [&](CubeVertex w) {
    CubeVertex v = side == Side::Plus ? direction_bit(n, dir) : 0;
    for (int k = 1; k <= m; ++k)
      if (w & direction_bit(m, k)) v |= direction_bit(n, k < dir ? k : k + 1);
    return v;
  };
  const CubeVertex nv = CubeVertex{1} << m;
  std::vector<OrdObj> verts(nv);
  std::vector<OrdMap> edges(nv * m);
  for (CubeVertex w = 0; w < nv; ++w) {
    verts[w] = c.vertex(lift(w));
    for (int k = 1; k <= m; ++k)
      if (!(w & direction_bit(m, k))) edges[w * m + k - 1] = c.edge(lift(w), k < dir ? k : k + 1);
  }
  return PlusCube(m, std::move(verts), std::move(edges));
}

std::vector<int> degenerate_directions(const PlusCube& c) {
  std::vector<int> out;
  const CubeVertex nv = CubeVertex{1} << c.dim();
  for (int d = 1; d <= c.dim(); ++d) {
    bool all_id = true;
    for (CubeVertex v = 0; v < nv && all_id; ++v)
      if (c.has_edge(v, d) && !is_identity(c.edge(v, d))) all_id = false;
    if (all_id) out.push_back(d);
  }
  return out;
}

std::vector<OrdMap> path_composites(const PlusCube& c) {
  std::vector<int> order(c.dim());
  std::iota(order.begin(), order.end(), 1);
  std::vector<OrdMap> out;
  do {
    OrdMap acc = identity_map(c.vertex(0).size);
    CubeVertex cur = 0;
    for (int d : order) {
      acc = compose(c.edge(cur, d), acc);
      cur |= direction_bit(c.dim(), d);
    }
    out.push_back(std::move(acc));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

UniquenessReport verify_unique_associator(int n) {
  if (n < 1) throw ArgumentError("verify_unique_associator needs n >= 1");
  if (n > 3) throw ArgumentError("verify_unique_associator is exhaustive and limited to n <= 3");
  const CubeVertex nv = CubeVertex{1} << n;
  struct Slot {
    CubeVertex v;
    int dir;
    int m;
  };
  std::vector<Slot> slots;
  for (CubeVertex v = 0; v < nv; ++v)
    for (int d = 1; d <= n; ++d)
      if (!(v & direction_bit(n, d))) slots.push_back({v, d, n + 1 - depth(v)});

  auto build = [&](const std::vector<int>& label) {
    std::vector<OrdObj> verts(nv);
    for (CubeVertex v = 0; v < nv; ++v) verts[v] = OrdObj{n + 1 - depth(v)};
    std::vector<OrdMap> edges(nv * n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      edges[slots[s].v * n + slots[s].dir - 1] = surjection(slots[s].m, label[s]);
    return PlusCube(n, std::move(verts), std::move(edges));
  };
  auto uses_all = [&](const std::vector<int>& label) {
    std::set<std::pair<int, int>> seen;
    for (std::size_t s = 0; s < slots.size(); ++s) seen.insert({slots[s].m, label[s]});
    for (int j = 2; j <= n + 1; ++j)
      for (int i = 1; i <= j - 1; ++i)
        if (!seen.count({j, i})) return false;
    return true;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  // canonical label under relabeling directions by each permutation
  auto permute_vertex = [&](CubeVertex v, const std::vector<int>& p) {
    CubeVertex w = 0;
    for (int d = 1; d <= n; ++d)
      if (v & direction_bit(n, d)) w |= direction_bit(n, p[d - 1]);
    return w;
  };
  std::vector<int> slot_index(nv * n, -1);
  for (std::size_t s = 0; s < slots.size(); ++s) slot_index[slots[s].v * n + slots[s].dir - 1] = static_cast<int>(s);
  auto canonical = [&](const std::vector<int>& label) {
    std::vector<int> best;
    for (const auto& p : perms) {
      std::vector<int> moved(label.size());
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const CubeVertex w = permute_vertex(slots[s].v, p);
        moved[slot_index[w * n + p[slots[s].dir - 1] - 1]] = label[s];
      }
      if (best.empty() || moved < best) best = moved;
    }
    return best;
  };

  UniquenessReport rep;
  std::set<std::vector<int>> orbits;
  std::vector<int> label(slots.size(), 1);
  std::vector<int> assoc_label;
  {
    const PlusCube a = associator_or_point(n);
    for (const auto& s : slots) {
      const auto& e = a.edge(s.v, s.dir);
      int idx = 1;
      while (surjection(s.m, idx) != e) ++idx;
      assoc_label.push_back(idx);
    }
  }
  while (true) {
    ++rep.examined;
    if (uses_all(label) && !build(label).commutativity_violation()) {
      ++rep.labelings;
      orbits.insert(canonical(label));
    }
    std::size_t s = 0;
    while (s < slots.size() && label[s] == slots[s].m - 1) label[s++] = 1;
    if (s == slots.size()) break;
    ++label[s];
  }
  rep.orbits = orbits.size();
  rep.unique = rep.orbits == 1 && orbits.count(canonical(assoc_label)) == 1;
  return rep;
}

BoundaryReport boundary_decomposition(int n) {
  if (n < 2 || n > 4) throw ArgumentError("boundary_decomposition needs 2 <= n <= 4");
  const PlusCube a = associator_cube(n);
  const PlusCube lower = associator_cube(n - 1);
  const int m = n - 1;
  BoundaryReport rep;
  rep.ok = true;
  for (Side side : {Side::Minus, Side::Plus}) {
    for (int dir = 1; dir <= n; ++dir) {
      const PlusCube face = cube_face(a, dir, side);
      FaceDecomposition fd;
      fd.dir = dir;
      fd.side = side;
      bool found = false;
      if (face == lower) {
        fd.is_lower_associator = true;
        found = true;
      }
      for (int k = 0; k <= m && !found; ++k) {
        std::vector<int> first(k), second(m - k);
        std::iota(first.begin(), first.end(), 1);
        std::iota(second.begin(), second.end(), k + 1);
        FacePart p1{k, first, degenerate_extension(associator_or_point(k), m, first)};
        FacePart p2{m - k, second, degenerate_extension(associator_or_point(m - k), m, second)};
        if (ordered_union(p1.cube, p2.cube) == face) {
          fd.parts = {std::move(p1), std::move(p2)};
          found = true;
        }
      }
      if (!found && rep.ok) {
        rep.ok = false;
        rep.failure = std::string("face ") + (side == Side::Plus ? "+" : "-") + " in direction " + std::to_string(dir);
      }
      rep.faces.push_back(std::move(fd));
    }
  }
  return rep;
}

std::vector<int> fundamental_map(int n, CubeVertex I, CubeVertex J) {
  if ((I & ~J) != 0) throw ArgumentError("fundamental_map needs I subset of J");
  const std::vector<int> is = directions_of(n, I), js = directions_of(n, J);
  const int a = static_cast<int>(is.size()) + 1, b = static_cast<int>(js.size()) + 1;
  std::vector<int> out(a + 1);
  out[0] = 0;
  for (int m = 1; m < a; ++m)
    out[m] = static_cast<int>(std::find(js.begin(), js.end(), is[m - 1]) - js.begin()) + 1;
  out[a] = b;
  return out;
}

FactorizationReport check_fundamental_factorization(int n) {
  if (n < 1 || n > 4) throw ArgumentError("check_fundamental_factorization needs 1 <= n <= 4");
  const PlusCube a = associator_cube(n);
  const CubeVertex all = a.sink();
  FactorizationReport rep;
  rep.ok = true;
  // Subset J sits at the vertex whose zero directions are J.
  for (CubeVertex J = 0; J <= all; ++J)
    for (CubeVertex I = 0; I <= all; ++I) {
      if ((I & ~J) != 0) continue;
      ++rep.pairs_checked;
      const std::vector<int> lhs = fundamental_map(n, I, J);
      const std::vector<int> rhs = cut_pullback(a.composite(all & ~J, all & ~I));
      if (lhs != rhs && rep.ok) {
        rep.ok = false;
        rep.failure = "I=" + vertex_label(n, I) + " J=" + vertex_label(n, J);
      }
    }
  return rep;
}

}  // namespace hsegal
