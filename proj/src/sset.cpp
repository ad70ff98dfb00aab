#include "hsegal/sset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hsegal/errors.hpp"

namespace hsegal {

Simplex Simplex::nondegenerate(int dim, int cell) {
  Simplex s;
  s.dim = static_cast<std::uint8_t>(dim);
  s.cell_dim = static_cast<std::uint8_t>(dim);
  s.cell = cell;
  for (int t = 0; t <= dim; ++t) s.word[t] = static_cast<std::uint8_t>(t);
  return s;
}

Simplex Simplex::make(const std::vector<int>& word, int cell) {
  if (word.empty() || static_cast<int>(word.size()) > kMaxDim + 1) throw ArgumentError("simplex word length out of range");
  if (word[0] != 0) throw ArgumentError("simplex word must start at 0");
  for (std::size_t t = 1; t < word.size(); ++t)
    if (word[t] != word[t - 1] && word[t] != word[t - 1] + 1)
      throw ArgumentError("simplex word must be a monotone surjection");
  Simplex s;
  s.dim = static_cast<std::uint8_t>(word.size() - 1);
  s.cell_dim = static_cast<std::uint8_t>(word.back());
  s.cell = cell;
  for (std::size_t t = 0; t < word.size(); ++t) s.word[t] = static_cast<std::uint8_t>(word[t]);
  return s;
}

std::vector<int> Simplex::word_vector() const { return std::vector<int>(word.begin(), word.begin() + dim + 1); }

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.cell) * 0x9E3779B97F4A7C15ull + s.dim * 131 + s.cell_dim;
  for (int t = 0; t <= s.dim; ++t) h = (h ^ s.word[t]) * 0x100000001B3ull;
  return h;
}

std::size_t HomElementHash::operator()(const HomElement& e) const noexcept {
  std::size_t h = e.size();
  SimplexHash sh;
  for (const auto& s : e) h = (h ^ sh(s)) * 0x100000001B3ull + 0x9E37;
  return h;
}

SSet::SSet(int dim_bound) : dim_bound_(dim_bound) {
  if (dim_bound < 0 || dim_bound > kMaxDim) throw ArgumentError("dim_bound out of range");
  names_.resize(dim_bound + 1);
  faces_.resize(dim_bound + 1);
}

int SSet::cell_count(int k) const {
  if (k < 0 || k > dim_bound_) return 0;
  return static_cast<int>(names_[k].size());
}

int SSet::find_cell(int k, const std::string& name) const {
  if (k < 0 || k > dim_bound_) return -1;
  auto it = std::find(names_[k].begin(), names_[k].end(), name);
  return it == names_[k].end() ? -1 : static_cast<int>(it - names_[k].begin());
}

int SSet::add_cell_unchecked(int k, std::string name, std::vector<Simplex> faces) {
  if (k < 0 || k > dim_bound_) throw BoundError("cell of dimension " + std::to_string(k) + " exceeds dim_bound", k);
  names_[k].push_back(std::move(name));
  faces_[k].push_back(std::move(faces));
  return static_cast<int>(names_[k].size()) - 1;
}

namespace {

bool well_formed(const SSet& s, const Simplex& x, int expected_dim) {
  if (x.dim != expected_dim || x.cell_dim > x.dim) return false;
  if (x.cell < 0 || x.cell >= s.cell_count(x.cell_dim)) return false;
  if (x.word[0] != 0 || x.word[x.dim] != x.cell_dim) return false;
  for (int t = 1; t <= x.dim; ++t)
    if (x.word[t] != x.word[t - 1] && x.word[t] != x.word[t - 1] + 1) return false;
  for (int t = x.dim + 1; t <= kMaxDim; ++t)
    if (x.word[t] != 0) return false;
  return true;
}

// Restriction of a nondegenerate cell along an injection delta: [r] -> [j].
Simplex restrict_cell(const SSet& s, int j, int cell, std::vector<int> delta) {
  const int r = static_cast<int>(delta.size()) - 1;
  if (r == j) return Simplex::nondegenerate(j, cell);
  int missing = 0;
  for (int t = 0; t <= r && delta[t] == missing; ++t) ++missing;
  for (auto& v : delta)
    if (v > missing) --v;
  return act(s, s.cell_face(j, cell, missing), delta);
}

std::string face_label(int k, int c, const SSet& s) { return "cell " + s.cell_name(k, c) + " (dim " + std::to_string(k) + ")"; }

}  // namespace

Simplex act(const SSet& s, const Simplex& x, const std::vector<int>& theta) {
  const int m = static_cast<int>(theta.size()) - 1;
  if (m < 0 || m > kMaxDim) throw ArgumentError("act: domain out of range");
  std::vector<int> u(m + 1);
  for (int t = 0; t <= m; ++t) {
    if (theta[t] < 0 || theta[t] > x.dim || (t && theta[t] < theta[t - 1])) throw ArgumentError("act: theta not monotone into [k]");
    u[t] = x.word[theta[t]];
  }
  std::vector<int> delta;
  std::vector<int> sigma(m + 1);
  for (int t = 0; t <= m; ++t) {
    if (delta.empty() || delta.back() != u[t]) delta.push_back(u[t]);
    sigma[t] = static_cast<int>(delta.size()) - 1;
  }
  const Simplex y = restrict_cell(s, x.cell_dim, x.cell, std::move(delta));
  Simplex out;
  out.dim = static_cast<std::uint8_t>(m);
  out.cell_dim = y.cell_dim;
  out.cell = y.cell;
  for (int t = 0; t <= m; ++t) out.word[t] = y.word[sigma[t]];
  return out;
}

Simplex face(const SSet& s, const Simplex& x, int i) {
  if (x.dim == 0 || i < 0 || i > x.dim) throw ArgumentError("face index out of range");
  std::vector<int> theta;
  for (int t = 0; t <= x.dim; ++t)
    if (t != i) theta.push_back(t);
  return act(s, x, theta);
}

Simplex degeneracy(const Simplex& x, int i) {
  if (i < 0 || i > x.dim || x.dim + 1 > kMaxDim) throw ArgumentError("degeneracy index out of range");
  Simplex out = x;
  out.dim = static_cast<std::uint8_t>(x.dim + 1);
  for (int t = 0; t <= out.dim; ++t) out.word[t] = x.word[t <= i ? t : t - 1];
  return out;
}

std::vector<std::string> validate(const SSet& s, std::size_t max_violations) {
  std::vector<std::string> out;
  auto report = [&](std::string msg) {
    if (out.size() < max_violations) out.push_back(std::move(msg));
  };
  for (int k = 0; k <= s.dim_bound(); ++k)
    for (int c = 0; c < s.cell_count(k); ++c) {
      const auto& fs = s.cell_faces(k, c);
      if (k == 0) {
        if (!fs.empty()) report(face_label(k, c, s) + ": vertices have no faces");
        continue;
      }
      if (static_cast<int>(fs.size()) != k + 1) {
        report(face_label(k, c, s) + ": expected " + std::to_string(k + 1) + " faces");
        continue;
      }
      for (int i = 0; i <= k; ++i)
        if (!well_formed(s, fs[i], k - 1)) report(face_label(k, c, s) + ": face " + std::to_string(i) + " is malformed");
    }
  if (!out.empty()) return out;
  for (int k = 2; k <= s.dim_bound(); ++k)
    for (int c = 0; c < s.cell_count(k); ++c) {
      const auto& fs = s.cell_faces(k, c);
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (face(s, fs[j], i) != face(s, fs[i], j - 1))
            report(face_label(k, c, s) + ": d" + std::to_string(i) + " d" + std::to_string(j) + " != d" +
                   std::to_string(j - 1) + " d" + std::to_string(i));
    }
  return out;
}

namespace {

// Monotone surjections [k] ->> [j].
std::vector<std::vector<int>> surjection_words(int k, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(k + 1, 0);
  std::function<void(int, int)> rec = [&](int t, int v) {
    if (t > k) {
      if (v == j) out.push_back(w);
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      const int nv = v + step;
      if (nv > j || j - nv > k - t) continue;
      w[t] = nv;
      rec(t + 1, nv);
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace

std::vector<Simplex> materialize(const SSet& s, int k) {
  if (k < 0 || k > s.dim_bound()) throw BoundError("materialize: dimension " + std::to_string(k) + " out of range", k);
  std::vector<Simplex> out;
  for (int j = 0; j <= k; ++j)
    for (const auto& w : surjection_words(k, j))
      for (int c = 0; c < s.cell_count(j); ++c) out.push_back(Simplex::make(w, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const SSet& s, const Simplex& x) {
  const std::string& name = s.cell_name(x.cell_dim, x.cell);
  if (!x.degenerate()) return name;
  std::ostringstream os;
  os << "s[";
  for (int t = 0; t <= x.dim; ++t) os << (t ? "," : "") << int(x.word[t]);
  os << "](" << name << ")";
  return os.str();
}

int Monoid::identity() const {
  const int n = static_cast<int>(elements.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) return e;
  }
  return -1;
}

void check_monoid(const Monoid& m) {
  const int n = static_cast<int>(m.elements.size());
  if (n == 0) throw InputError("monoid has no elements");
  if (static_cast<int>(m.table.size()) != n) throw InputError("monoid table has wrong row count");
  for (const auto& row : m.table) {
    if (static_cast<int>(row.size()) != n) throw InputError("monoid table has wrong column count");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("monoid table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.table[m.table[a][b]][c] != m.table[a][m.table[b][c]])
          throw InputError("monoid table is not associative at (" + m.elements[a] + "," + m.elements[b] + "," +
                           m.elements[c] + ")");
  if (m.identity() < 0) throw InputError("monoid table has no identity");
}

void check_category(const Category& c) {
  const int no = static_cast<int>(c.objects.size()), nm = static_cast<int>(c.morphisms.size());
  if (static_cast<int>(c.identities.size()) != no) throw InputError("category needs one identity per object");
  for (const auto& f : c.morphisms)
    if (f.src < 0 || f.src >= no || f.tgt < 0 || f.tgt >= no) throw InputError("morphism " + f.name + " has bad endpoints");
  for (int x = 0; x < no; ++x) {
    const int id = c.identities[x];
    if (id < 0 || id >= nm || c.morphisms[id].src != x || c.morphisms[id].tgt != x)
      throw InputError("identity of object " + c.objects[x] + " is not an endomorphism");
  }
  if (static_cast<int>(c.compose.size()) != nm) throw InputError("composition table has wrong size");
  for (int f = 0; f < nm; ++f) {
    if (static_cast<int>(c.compose[f].size()) != nm) throw InputError("composition table has wrong size");
    for (int g = 0; g < nm; ++g) {
      const bool composable = c.morphisms[f].tgt == c.morphisms[g].src;
      const int h = c.compose[f][g];
      if (composable != (h >= 0)) throw InputError("composition table defined exactly on composable pairs is required");
      if (!composable) continue;
      if (h >= nm || c.morphisms[h].src != c.morphisms[f].src || c.morphisms[h].tgt != c.morphisms[g].tgt)
        throw InputError("composite of " + c.morphisms[f].name + " and " + c.morphisms[g].name + " has bad endpoints");
    }
  }
  for (int f = 0; f < nm; ++f) {
    if (c.compose[c.identities[c.morphisms[f].src]][f] != f || c.compose[f][c.identities[c.morphisms[f].tgt]] != f)
      throw InputError("identity law fails for " + c.morphisms[f].name);
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.compose[f][g] < 0) continue;
      for (int h = 0; h < nm; ++h) {
        if (c.compose[g][h] < 0) continue;
        if (c.compose[c.compose[f][g]][h] != c.compose[f][c.compose[g][h]])
          throw InputError("composition is not associative at (" + c.morphisms[f].name + "," + c.morphisms[g].name +
                           "," + c.morphisms[h].name + ")");
      }
    }
}

Category category_of_monoid(const Monoid& m) {
  check_monoid(m);
  Category c;
  c.objects = {"*"};
  for (const auto& e : m.elements) c.morphisms.push_back({e, 0, 0});
  c.identities = {m.identity()};
  c.compose = m.table;
  return c;
}

SSet point_sset(int dim_bound) {
  SSet s(dim_bound);
  s.add_cell_unchecked(0, "*", {});
  return s;
}

SSet nerve_category(const Category& c, int dim_bound) {
  check_category(c);
  SSet s(dim_bound);
  for (const auto& o : c.objects) s.add_cell_unchecked(0, o, {});
  const int nm = static_cast<int>(c.morphisms.size());
  std::vector<bool> is_id(nm, false);
  for (int id : c.identities) is_id[id] = true;
  std::vector<std::map<std::vector<int>, int>> index(dim_bound + 1);

  // Normal form of an arbitrary chain g_1..g_r (r >= 1) of composable morphisms.
  auto normalize = [&](const std::vector<int>& chain) {
    std::vector<int> word(chain.size() + 1, 0), nondeg;
    for (std::size_t q = 0; q < chain.size(); ++q) {
      if (!is_id[chain[q]]) nondeg.push_back(chain[q]);
      word[q + 1] = static_cast<int>(nondeg.size());
    }
    if (nondeg.empty()) return Simplex::make(word, c.morphisms[chain[0]].src);
    return Simplex::make(word, index[nondeg.size()].at(nondeg));
  };

  std::vector<std::vector<int>> layer;
  for (int f = 0; f < nm; ++f)
    if (!is_id[f]) layer.push_back({f});
  for (int k = 1; k <= dim_bound && !layer.empty(); ++k) {
    for (const auto& chain : layer) {
      std::vector<Simplex> faces;
      if (k == 1) {
        faces = {Simplex::nondegenerate(0, c.morphisms[chain[0]].tgt), Simplex::nondegenerate(0, c.morphisms[chain[0]].src)};
      } else {
        for (int i = 0; i <= k; ++i) {
          std::vector<int> f;
          if (i == 0) {
            f.assign(chain.begin() + 1, chain.end());
          } else if (i == k) {
            f.assign(chain.begin(), chain.end() - 1);
          } else {
            f.assign(chain.begin(), chain.begin() + i - 1);
            f.push_back(c.compose[chain[i - 1]][chain[i]]);
            f.insert(f.end(), chain.begin() + i + 1, chain.end());
          }
          faces.push_back(normalize(f));
        }
      }
      std::string name;
      for (std::size_t q = 0; q < chain.size(); ++q) name += (q ? "|" : "") + c.morphisms[chain[q]].name;
      index[k][chain] = s.add_cell_unchecked(k, name, std::move(faces));
    }
    std::vector<std::vector<int>> next;
    for (const auto& chain : layer)
      for (int f = 0; f < nm; ++f)
        if (!is_id[f] && c.morphisms[f].src == c.morphisms[chain.back()].tgt) {
          next.push_back(chain);
          next.back().push_back(f);
        }
    layer = std::move(next);
  }
  return s;
}

SSet nerve_monoid(const Monoid& m, int dim_bound) { return nerve_category(category_of_monoid(m), dim_bound); }

SSet attach_cell(const SSet& s, int k, const std::vector<Simplex>& boundary, std::string name) {
  if (k < 0) throw InputError("attach_cell: negative dimension");
  if (k > s.dim_bound()) throw BoundError("attach_cell: dimension exceeds dim_bound", k);
  if (static_cast<int>(boundary.size()) != (k == 0 ? 0 : k + 1)) throw InputError("attach_cell: wrong number of faces");
  for (const auto& b : boundary)
    if (!well_formed(s, b, k - 1)) throw InputError("attach_cell: malformed boundary simplex");
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < j && k >= 2; ++i)
      if (face(s, boundary[j], i) != face(s, boundary[i], j - 1))
        throw InputError("attach_cell: boundary violates d" + std::to_string(i) + " d" + std::to_string(j));
  if (name.empty()) name = "c" + std::to_string(k) + "_" + std::to_string(s.cell_count(k));
  if (s.find_cell(k, name) >= 0) throw InputError("attach_cell: duplicate cell name " + name);
  SSet out = s;
  out.add_cell_unchecked(k, std::move(name), boundary);
  return out;
}

std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; s; ++v, s >>= 1)
    if (s & 1) out.push_back(v);
  return out;
}

VertexSet vertex_range(int lo, int hi) {
  VertexSet s = 0;
  for (int v = lo; v <= hi; ++v) s |= VertexSet{1} << v;
  return s;
}

namespace {

bool generator_order(VertexSet a, VertexSet b) {
  const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
  if (pa != pb) return pa > pb;
  return vertex_list(a) < vertex_list(b);
}

bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// Positions of the vertices of `sub` inside the vertex list of `super`.
std::vector<int> positions(VertexSet sub, VertexSet super) {
  std::vector<int> out;
  int pos = 0;
  for (int v = 0; super >> v; ++v) {
    if (!((super >> v) & 1)) continue;
    if ((sub >> v) & 1) out.push_back(pos);
    ++pos;
  }
  return out;
}

}  // namespace

VertexComplex::VertexComplex(int ambient, std::vector<VertexSet> generators) : ambient_(ambient) {
  if (ambient < 0 || ambient > 30) throw ArgumentError("vertex complex ambient out of range");
  const VertexSet all = vertex_range(0, ambient);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (VertexSet g : generators) {
    if (!subset_of(g, all)) throw ArgumentError("generator outside the ambient simplex");
    if (g == 0) continue;
    bool maximal = true;
    for (VertexSet h : generators)
      if (h != g && subset_of(g, h)) maximal = false;
    if (maximal) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end(), generator_order);
}

VertexComplex VertexComplex::full(int m) { return VertexComplex(m, {vertex_range(0, m)}); }

bool VertexComplex::contains(VertexSet f) const {
  if (f == 0) return true;
  return std::any_of(generators_.begin(), generators_.end(), [f](VertexSet g) { return subset_of(f, g); });
}

int VertexComplex::max_generator_size() const {
  int m = 0;
  for (VertexSet g : generators_) m = std::max(m, __builtin_popcount(g));
  return m;
}

std::string VertexComplex::to_string() const {
  std::ostringstream os;
  os << "D" << ambient_ << "{";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    os << (i ? "," : "") << "{";
    auto vs = vertex_list(generators_[i]);
    for (std::size_t j = 0; j < vs.size(); ++j) os << (j ? "," : "") << vs[j];
    os << "}";
  }
  os << "}";
  return os.str();
}

VertexComplex complex_union(const VertexComplex& a, const VertexComplex& b) {
  if (a.ambient() != b.ambient()) throw ArgumentError("complexes live in different simplices");
  std::vector<VertexSet> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return VertexComplex(a.ambient(), std::move(g));
}

VertexComplex complex_intersection(const VertexComplex& a, const VertexComplex& b) {
  if (a.ambient() != b.ambient()) throw ArgumentError("complexes live in different simplices");
  std::vector<VertexSet> g;
  for (VertexSet x : a.generators())
    for (VertexSet y : b.generators()) g.push_back(x & y);
  return VertexComplex(a.ambient(), std::move(g));
}

std::size_t HomSet::index_of(const HomElement& h) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), h);
  if (it == elements.end() || *it != h) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - elements.begin());
}

HomSet hom(const VertexComplex& k, const SSet& s) {
  const auto& gens = k.generators();
  const int need = k.max_generator_size() - 1;
  if (need > s.dim_bound()) throw BoundError("hom: complex " + k.to_string() + " exceeds dim_bound", need);
  std::vector<HomElement> partial{HomElement{}};
  for (std::size_t t = 0; t < gens.size() && !partial.empty(); ++t) {
    // Maximal overlaps with earlier generators; smaller overlaps are implied.
    std::vector<std::pair<std::size_t, VertexSet>> overlaps;
    for (std::size_t u = 0; u < t; ++u) {
      const VertexSet f = gens[u] & gens[t];
      if (f) overlaps.push_back({u, f});
    }
    std::vector<std::pair<std::size_t, VertexSet>> kept;
    for (const auto& [u, f] : overlaps) {
      bool dominated = false;
      for (const auto& [u2, f2] : kept)
        if (subset_of(f, f2)) dominated = true;
      if (dominated) continue;
      std::erase_if(kept, [&](const auto& p) { return subset_of(p.second, f); });
      kept.push_back({u, f});
    }
    std::vector<std::vector<int>> theta_new, theta_old;
    for (const auto& [u, f] : kept) {
      theta_new.push_back(positions(f, gens[t]));
      theta_old.push_back(positions(f, gens[u]));
    }
    const auto candidates = materialize(s, __builtin_popcount(gens[t]) - 1);
    std::unordered_map<HomElement, std::vector<std::size_t>, HomElementHash> buckets;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      HomElement key;
      for (const auto& th : theta_new) key.push_back(act(s, candidates[c], th));
      buckets[key].push_back(c);
    }
    std::vector<HomElement> next;
    for (const auto& p : partial) {
      HomElement key;
      for (std::size_t q = 0; q < kept.size(); ++q) key.push_back(act(s, p[kept[q].first], theta_old[q]));
      auto it = buckets.find(key);
      if (it == buckets.end()) continue;
      for (std::size_t c : it->second) {
        next.push_back(p);
        next.back().push_back(candidates[c]);
      }
    }
    partial = std::move(next);
  }
  std::sort(partial.begin(), partial.end());
  return HomSet{k, std::move(partial)};
}

Simplex value_on(const SSet& s, const VertexComplex& k, const HomElement& h, VertexSet f) {
  const auto& gens = k.generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (subset_of(f, gens[g])) return act(s, h[g], positions(f, gens[g]));
  throw ContractError("value_on: face not in complex");
}

bool carries(const VertexMap& g, const VertexComplex& k_w, const VertexComplex& k_v) {
  if (static_cast<int>(g.size()) != k_w.ambient() + 1) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0 || g[i] > k_v.ambient() || (i && g[i] < g[i - 1])) return false;
  for (VertexSet j : k_w.generators()) {
    VertexSet img = 0;
    for (int v : vertex_list(j)) img |= VertexSet{1} << g[v];
    if (!k_v.contains(img)) return false;
  }
  return true;
}

HomElement restrict(const SSet& s, const VertexMap& g, const VertexComplex& k_w, const VertexComplex& k_v,
                    const HomElement& h) {
  if (!carries(g, k_w, k_v)) throw ContractError("restrict: vertex map does not carry " + k_w.to_string() + " into " + k_v.to_string());
  const auto& vgens = k_v.generators();
  HomElement out;
  out.reserve(k_w.generators().size());
  for (VertexSet j : k_w.generators()) {
    const auto verts = vertex_list(j);
    VertexSet img = 0;
    for (int v : verts) img |= VertexSet{1} << g[v];
    std::size_t gi = 0;
    while (!subset_of(img, vgens[gi])) ++gi;
    const auto ivs = vertex_list(vgens[gi]);
    std::vector<int> theta;
    for (int v : verts) theta.push_back(static_cast<int>(std::find(ivs.begin(), ivs.end(), g[v]) - ivs.begin()));
    out.push_back(act(s, h[gi], theta));
  }
  return out;
}

}  // namespace hsegal
