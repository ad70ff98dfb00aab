#include "hsegal/hcomb.hpp"

#include "hsegal/errors.hpp"

namespace hsegal {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

VertexMap identity_vertices(int m) {
  VertexMap g(m + 1);
  for (int i = 0; i <= m; ++i) g[i] = i;
  return g;
}

VertexMap after(const VertexMap& outer, const VertexMap& inner) {
  VertexMap r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer.at(inner[i]);
  return r;
}

std::string map_text(const VertexMap& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace

Augmentation augmentation(const OrdObj& x) {
  if (x.size < 0 || x.size > kMaxDim) throw ArgumentError("augmentation: size out of range");
  return {x.size, x.size + 1};
}

VertexSet interval_extension(const OrdObj& x, const std::vector<int>& elements, int empty_at) {
  if (elements.empty()) {
    if (empty_at < 0 || empty_at > x.size) throw ArgumentError("interval_extension: empty interval out of range");
    return VertexSet{1} << empty_at;
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= x.size) throw ArgumentError("interval_extension: element out of range");
    if (i && elements[i] != elements[i - 1] + 1) throw ArgumentError("interval_extension: not an interval");
  }
  return vertex_range(elements.front(), elements.back() + 1);
}

VertexComplex h_comb(const OrdMap& alpha) {
  const OrdObj x = alpha.src;
  if (x.size == 0 && alpha.tgt.size == 0) return VertexComplex(0, {1});
  std::vector<VertexSet> gens;
  int below = 0;
  for (int y = 0; y < alpha.tgt.size; ++y) {
    std::vector<int> fiber;
    for (int i = 0; i < x.size; ++i)
      if (alpha.values[i] == y) fiber.push_back(i);
    gens.push_back(interval_extension(x, fiber, below));
    below += static_cast<int>(fiber.size());
  }
  return VertexComplex(x.size, std::move(gens));
}

VertexMap case1_map(const OrdMap& f, const OrdMap& g) {
  const VertexComplex a = h_comb(f), b = h_comb(compose(g, f));
  VertexMap id = identity_vertices(f.src.size);
  if (!carries(id, a, b)) throw ContractError("case1_map: " + a.to_string() + " not inside " + b.to_string());
  return id;
}

VertexMap case2_map(const OrdMap& f, const OrdMap& g) {
  const VertexMap m = cut_pullback(f);
  const VertexComplex a = h_comb(g), b = h_comb(compose(g, f));
  if (!carries(m, a, b)) throw ContractError("case2_map: cut pullback does not carry " + a.to_string());
  return m;
}

std::size_t position_count(int dim) { return power3(dim); }

std::size_t position_index(const Position& p) {
  std::size_t r = 0;
  for (Pos d : p) r = r * 3 + static_cast<std::size_t>(d);
  return r;
}

Position position_at(int dim, std::size_t index) {
  Position p(dim);
  for (int i = dim - 1; i >= 0; --i) {
    p[i] = static_cast<Pos>(index % 3);
    index /= 3;
  }
  return p;
}

std::string position_label(const Position& p) {
  std::string s;
  for (Pos d : p) s += d == Pos::Minus ? '-' : d == Pos::Zero ? '0' : '+';
  return s;
}

HCombCube::HCombCube(int dim, std::vector<VertexComplex> positions, std::vector<VertexMap> minus,
                     std::vector<VertexMap> plus)
    : dim_(dim), positions_(std::move(positions)), minus_(std::move(minus)), plus_(std::move(plus)) {
  if (positions_.size() != position_count(dim) || minus_.size() != positions_.size() * dim ||
      plus_.size() != minus_.size())
    throw ArgumentError("HCombCube: wrong table sizes");
}

const VertexMap& HCombCube::arrow(std::size_t v, int dir, Pos to) const {
  if (dir < 1 || dir > dim_ || to == Pos::Zero) throw ArgumentError("HCombCube::arrow: bad direction");
  if (position_at(dim_, v)[dir - 1] != Pos::Zero) throw ArgumentError("HCombCube::arrow: coordinate is not 0");
  return (to == Pos::Minus ? minus_ : plus_).at(v * dim_ + dir - 1);
}

std::size_t HCombCube::flipped(std::size_t v, int dir, Pos to) const {
  const std::size_t w = digit_weight(dim_, dir);
  return to == Pos::Minus ? v - w : v + w;
}

std::optional<std::string> HCombCube::violation() const {
  for (std::size_t v = 0; v < size(); ++v) {
    const Position p = position_at(dim_, v);
    for (int i = 1; i <= dim_; ++i) {
      if (p[i - 1] != Pos::Zero) continue;
      for (Pos a : {Pos::Minus, Pos::Plus}) {
        const std::size_t w = flipped(v, i, a);
        if (!carries(arrow(v, i, a), position(w), position(v)))
          return "arrow " + position_label(p) + " -> " + position_label(position_at(dim_, w)) + " does not carry";
        for (int j = i + 1; j <= dim_; ++j) {
          if (p[j - 1] != Pos::Zero) continue;
          for (Pos b : {Pos::Minus, Pos::Plus}) {
            const std::size_t vj = flipped(v, j, b), u = flipped(w, j, b);
            // u -> w -> v against u -> vj -> v
            const VertexMap one = after(arrow(v, i, a), arrow(w, j, b));
            const VertexMap two = after(arrow(v, j, b), arrow(vj, i, a));
            if (one != two)
              return "square at " + position_label(p) + " to " + position_label(position_at(dim_, u)) + ": " +
                     map_text(one) + " vs " + map_text(two);
          }
        }
      }
    }
  }
  return std::nullopt;
}

HCombCube corr_cube(const PlusCube& c) {
  if (auto bad = c.commutativity_violation()) throw InputError("corr_cube: cube does not commute: " + *bad);
  const int n = c.dim();
  const std::size_t count = position_count(n);
  std::vector<OrdMap> f(count);
  std::vector<VertexComplex> pos(count);
  std::vector<CubeVertex> src(count), tgt(count);
  for (std::size_t v = 0; v < count; ++v) {
    const Position p = position_at(n, v);
    for (int i = 1; i <= n; ++i) {
      if (p[i - 1] == Pos::Plus) src[v] |= direction_bit(n, i);
      if (p[i - 1] != Pos::Minus) tgt[v] |= direction_bit(n, i);
    }
    f[v] = c.composite(src[v], tgt[v]);
    pos[v] = h_comb(f[v]);
  }
  std::vector<VertexMap> minus(count * n), plus(count * n);
  for (std::size_t v = 0; v < count; ++v) {
    const Position p = position_at(n, v);
    for (int i = 1; i <= n; ++i) {
      if (p[i - 1] != Pos::Zero) continue;
      minus[v * n + i - 1] = identity_vertices(c.vertex(src[v]).size);
      plus[v * n + i - 1] = cut_pullback(c.edge(src[v], i));
    }
  }
  HCombCube h(n, std::move(pos), std::move(minus), std::move(plus));
  if (auto bad = h.violation()) throw ContractError("corr_cube: " + *bad);
  return h;
}

EvaluatedCube evaluate(const HCombCube& h, const SSet& s) {
  const int n = h.dim();
  EvaluatedCube e;
  e.dim = n;
  e.sets.reserve(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) e.sets.push_back(hom(h.position(v), s));
  e.minus.assign(h.size() * n, {});
  e.plus.assign(h.size() * n, {});
  for (std::size_t v = 0; v < h.size(); ++v) {
    const Position p = position_at(n, v);
    for (int i = 1; i <= n; ++i) {
      if (p[i - 1] != Pos::Zero) continue;
      for (Pos a : {Pos::Minus, Pos::Plus}) {
        const std::size_t w = h.flipped(v, i, a);
        auto& fn = (a == Pos::Minus ? e.minus : e.plus)[v * n + i - 1];
        fn.reserve(e.sets[v].elements.size());
        for (const auto& x : e.sets[v].elements) {
          const std::size_t k = e.sets[w].index_of(restrict(s, h.arrow(v, i, a), h.position(w), h.position(v), x));
          if (k == kNone) throw ContractError("evaluate: restriction leaves the hom set");
          fn.push_back(k);
        }
      }
    }
  }
  // Functoriality: restricting along a composite square agrees with the two
  // composed restrictions.
  for (std::size_t v = 0; v < h.size(); ++v) {
    const Position p = position_at(n, v);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (p[i - 1] != Pos::Zero || p[j - 1] != Pos::Zero) continue;
        for (Pos a : {Pos::Minus, Pos::Plus})
          for (Pos b : {Pos::Minus, Pos::Plus}) {
            const std::size_t vi = h.flipped(v, i, a), vj = h.flipped(v, j, b), u = h.flipped(vi, j, b);
            const auto& fi = (a == Pos::Minus ? e.minus : e.plus);
            const auto& fj = (b == Pos::Minus ? e.minus : e.plus);
            const VertexMap direct = after(h.arrow(v, i, a), h.arrow(vi, j, b));
            for (std::size_t x = 0; x < e.sets[v].elements.size(); ++x) {
              const std::size_t one = fj[vi * n + j - 1][fi[v * n + i - 1][x]];
              const std::size_t two = fi[vj * n + i - 1][fj[v * n + j - 1][x]];
              const std::size_t three =
                  e.sets[u].index_of(restrict(s, direct, h.position(u), h.position(v), e.sets[v].elements[x]));
              if (one != two || one != three)
                throw ContractError("evaluate: restriction not functorial at " + position_label(p));
            }
          }
      }
  }
  return e;
}

ProductLawReport check_product_law(const PlusCube& c1, const PlusCube& c2, const SSet& s) {
  if (s.cell_count(0) != 1) throw PreconditionError("check_product_law: S_0 must be a single point");
  const int n = c1.dim();
  if (c2.dim() != n) throw ArgumentError("check_product_law: cube dimensions differ");
  const HCombCube hu = corr_cube(ordered_union(c1, c2)), h1 = corr_cube(c1), h2 = corr_cube(c2);
  const EvaluatedCube eu = evaluate(hu, s), e1 = evaluate(h1, s), e2 = evaluate(h2, s);
  ProductLawReport r;
  // projections along the block inclusions of ambient simplices
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> proj(hu.size());
  for (std::size_t v = 0; v < hu.size(); ++v) {
    const int a1 = h1.position(v).ambient(), a2 = h2.position(v).ambient();
    VertexMap i1(a1 + 1), i2(a2 + 1);
    for (int k = 0; k <= a1; ++k) i1[k] = k;
    for (int k = 0; k <= a2; ++k) i2[k] = a1 + k;
    const std::string at = position_label(position_at(n, v));
    if (eu.sets[v].elements.size() != e1.sets[v].elements.size() * e2.sets[v].elements.size()) {
      r.failure = "cardinality mismatch at " + at;
      return r;
    }
    std::vector<char> hit(eu.sets[v].elements.size(), 0);
    for (const auto& x : eu.sets[v].elements) {
      const std::size_t p1 = e1.sets[v].index_of(restrict(s, i1, h1.position(v), hu.position(v), x));
      const std::size_t p2 = e2.sets[v].index_of(restrict(s, i2, h2.position(v), hu.position(v), x));
      if (p1 == kNone || p2 == kNone) throw ContractError("check_product_law: projection leaves the hom set");
      const std::size_t code = p1 * e2.sets[v].elements.size() + p2;
      if (hit[code]) {
        r.failure = "projection not injective at " + at;
        return r;
      }
      hit[code] = 1;
      proj[v].push_back({p1, p2});
    }
  }
  for (std::size_t v = 0; v < hu.size(); ++v) {
    const Position p = position_at(n, v);
    for (int i = 1; i <= n; ++i) {
      if (p[i - 1] != Pos::Zero) continue;
      for (Pos a : {Pos::Minus, Pos::Plus}) {
        const std::size_t w = hu.flipped(v, i, a), k = v * n + i - 1;
        const auto& fu = (a == Pos::Minus ? eu.minus : eu.plus)[k];
        const auto& f1 = (a == Pos::Minus ? e1.minus : e1.plus)[k];
        const auto& f2 = (a == Pos::Minus ? e2.minus : e2.plus)[k];
        for (std::size_t x = 0; x < fu.size(); ++x) {
          const auto [p1, p2] = proj[v][x];
          if (proj[w][fu[x]] != std::pair{f1[p1], f2[p2]}) {
            r.failure = "arrows not compatible at " + position_label(p) + " direction " + std::to_string(i);
            return r;
          }
        }
      }
    }
  }
  r.ok = true;
  return r;
}

}  // namespace hsegal
