#include "hsegal/corrlim.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hsegal/errors.hpp"

namespace hsegal {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

struct VecHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::size_t x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

CorrPoset CorrPoset::cube(int n) { return grid(std::vector<int>(n, 1)); }

CorrPoset CorrPoset::grid(std::vector<int> dims) {
  CorrPoset p;
  p.dims_ = std::move(dims);
  p.elements_.push_back({});
  for (int n : p.dims_) {
    if (n < 0) throw ArgumentError("CorrPoset::grid: negative size");
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& e : p.elements_)
      for (int m = 0; m <= n; ++m)
        for (int l = 0; m + l <= n; ++l) {
          next.push_back(e);
          next.back().push_back({m, l});
        }
    p.elements_ = std::move(next);
  }
  std::sort(p.elements_.begin(), p.elements_.end());
  return p;
}

std::size_t CorrPoset::index_of(const std::vector<std::pair<int, int>>& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) throw ArgumentError("CorrPoset::index_of: not an element");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool CorrPoset::leq(std::size_t a, std::size_t b) const {
  const auto &x = element(a), &y = element(b);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i].first < x[i].first || y[i].first + y[i].second > x[i].first + x[i].second) return false;
  return true;
}

std::string CorrPoset::label(std::size_t i) const {
  std::string s;
  for (const auto& [m, l] : element(i)) s += "(" + std::to_string(m) + "," + std::to_string(l) + ")";
  return s;
}

std::pair<int, int> interval_of(Pos p) {
  switch (p) {
    case Pos::Minus: return {0, 0};
    case Pos::Plus: return {1, 0};
    default: return {0, 1};
  }
}

bool position_leq(const Position& e, const Position& d) {
  if (e.size() != d.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != Pos::Zero && d[i] != e[i]) return false;
  return true;
}

std::size_t FinCube::apply(CubeVertex from, CubeVertex to, std::size_t x) const {
  for (int i = 1; i <= dim; ++i) {
    const CubeVertex b = direction_bit(dim, i);
    if ((to & b) && !(from & b)) {
      x = edge(from, i).at(x);
      from |= b;
    }
  }
  return x;
}

std::optional<std::string> FinCube::commutativity_violation() const {
  const CubeVertex all = sink();
  for (CubeVertex v = 0; v <= all; ++v)
    for (int i = 1; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j) {
        const CubeVertex bi = direction_bit(dim, i), bj = direction_bit(dim, j);
        if ((v & bi) || (v & bj)) continue;
        for (std::size_t x = 0; x < sizes[v]; ++x)
          if (edge(v | bi, j).at(edge(v, i).at(x)) != edge(v | bj, i).at(edge(v, j).at(x)))
            return "square at vertex " + vertex_label(dim, v) + " in directions " + std::to_string(i) + "," +
                   std::to_string(j);
      }
  return std::nullopt;
}

FinCube fin_face(const FinCube& c, int dir, Side side) {
  FinCube f;
  f.dim = c.dim - 1;
  const std::size_t nv = std::size_t{1} << f.dim;
  f.sizes.resize(nv);
  f.edges.resize(nv * f.dim);
  auto lift = [&](CubeVertex u) {
    // insert the fixed coordinate for direction dir
    CubeVertex v = 0;
    for (int k = 1, fk = 1; k <= c.dim; ++k) {
      if (k == dir) {
        if (side == Side::Plus) v |= direction_bit(c.dim, k);
        continue;
      }
      if (u & direction_bit(f.dim, fk)) v |= direction_bit(c.dim, k);
      ++fk;
    }
    return v;
  };
  for (CubeVertex u = 0; u < nv; ++u) {
    f.sizes[u] = c.sizes[lift(u)];
    for (int k = 1; k <= f.dim; ++k)
      if (!(u & direction_bit(f.dim, k))) f.edges[u * f.dim + k - 1] = c.edge(lift(u), k < dir ? k : k + 1);
  }
  return f;
}

std::vector<std::vector<std::size_t>> finset_limit(const FinDiagram& d) {
  const std::size_t n = d.sizes.size();
  std::vector<std::vector<const FinDiagram::Arrow*>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& a : d.arrows) {
    if (a.from >= n || a.to >= n || a.fn.size() != d.sizes[a.from])
      throw ArgumentError("finset_limit: malformed arrow");
    out[a.from].push_back(&a);
    ++indeg[a.to];
  }
  // Values downstream of x at object m; empty if two paths disagree.
  auto closure = [&](std::size_t m, std::size_t x) {
    std::vector<std::size_t> val(n, kUnset);
    val[m] = x;
    std::vector<std::size_t> stack{m};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto* a : out[u]) {
        const std::size_t y = a->fn[val[u]];
        if (val[a->to] == kUnset) {
          val[a->to] = y;
          stack.push_back(a->to);
        } else if (val[a->to] != y) {
          return std::vector<std::size_t>{};
        }
      }
    }
    return val;
  };
  std::vector<std::vector<std::size_t>> partial{std::vector<std::size_t>(n, kUnset)};
  std::vector<char> known(n, 0);
  for (std::size_t m = 0; m < n && !partial.empty(); ++m) {
    if (indeg[m]) continue;
    std::vector<std::vector<std::size_t>> cands;
    for (std::size_t x = 0; x < d.sizes[m]; ++x)
      if (auto c = closure(m, x); !c.empty()) cands.push_back(std::move(c));
    std::vector<std::size_t> keys, reach;
    if (!cands.empty())
      for (std::size_t u = 0; u < n; ++u)
        if (cands.front()[u] != kUnset) {
          reach.push_back(u);
          if (known[u]) keys.push_back(u);
        }
    std::unordered_map<std::vector<std::size_t>, std::vector<std::size_t>, VecHash> table;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      std::vector<std::size_t> key;
      for (std::size_t u : keys) key.push_back(cands[c][u]);
      table[key].push_back(c);
    }
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : partial) {
      std::vector<std::size_t> key;
      for (std::size_t u : keys) key.push_back(p[u]);
      auto it = table.find(key);
      if (it == table.end()) continue;
      for (std::size_t c : it->second) {
        next.push_back(p);
        for (std::size_t u : reach) next.back()[u] = cands[c][u];
      }
    }
    partial = std::move(next);
    for (std::size_t u : reach) known[u] = 1;
  }
  if (n == 0) return partial;
  std::sort(partial.begin(), partial.end());
  return partial;
}

FinDiagram punctured(const FinCube& c) {
  FinDiagram d;
  const CubeVertex all = c.sink();
  for (CubeVertex v = 1; v <= all; ++v) d.sizes.push_back(c.sizes[v]);
  for (CubeVertex v = 1; v <= all; ++v)
    for (int i = 1; i <= c.dim; ++i)
      if (!(v & direction_bit(c.dim, i))) d.arrows.push_back({v - 1, (v | direction_bit(c.dim, i)) - 1, c.edge(v, i)});
  return d;
}

std::string to_string(Witness w) {
  switch (w) {
    case Witness::NotInjective: return "not_injective";
    case Witness::NotSurjective: return "not_surjective";
    default: return "none";
  }
}

PullbackReport is_pullback_cube(const FinCube& c) {
  if (auto bad = c.commutativity_violation()) throw InputError("is_pullback_cube: " + *bad);
  const auto limit = finset_limit(punctured(c));
  PullbackReport r;
  r.source_size = c.sizes[0];
  r.limit_size = limit.size();
  std::map<std::vector<std::size_t>, std::size_t> image;
  for (std::size_t x = 0; x < c.sizes[0]; ++x) {
    std::vector<std::size_t> fam;
    for (CubeVertex v = 1; v <= c.sink(); ++v) fam.push_back(c.apply(0, v, x));
    auto [it, fresh] = image.emplace(fam, x);
    if (!fresh) {
      r.witness = Witness::NotInjective;
      r.elements = {it->second, x};
      return r;
    }
  }
  for (const auto& fam : limit)
    if (!image.count(fam)) {
      r.witness = Witness::NotSurjective;
      r.elements = fam;
      return r;
    }
  r.pullback = true;
  return r;
}

std::optional<bool> pasting_check(const FinCube& c, int dir) {
  if (dir < 1 || dir > c.dim) throw ArgumentError("pasting_check: direction out of range");
  if (!is_pullback_cube(fin_face(c, dir, Side::Plus)).pullback) return std::nullopt;
  return is_pullback_cube(c).pullback == is_pullback_cube(fin_face(c, dir, Side::Minus)).pullback;
}

SpanComposite compose_spans(const Span& s1, const Span& s2) {
  if (s1.right != s2.left) throw ArgumentError("compose_spans: middle objects differ");
  SpanComposite r;
  r.span.left = s1.left;
  r.span.right = s2.right;
  for (std::size_t x = 0; x < s1.center; ++x)
    for (std::size_t y = 0; y < s2.center; ++y)
      if (s1.to_right.at(x) == s2.to_left.at(y)) {
        r.pairs.push_back({x, y});
        r.span.to_left.push_back(s1.to_left.at(x));
        r.span.to_right.push_back(s2.to_right.at(y));
      }
  r.span.center = r.pairs.size();
  return r;
}

std::optional<std::string> CorrDiagram::functoriality_violation() const {
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    const Position p = position_at(dim, v);
    for (int i = 1; i <= dim; ++i)
      for (int j = i + 1; j <= dim; ++j) {
        if (p[i - 1] != Pos::Zero || p[j - 1] != Pos::Zero) continue;
        for (Pos a : {Pos::Minus, Pos::Plus})
          for (Pos b : {Pos::Minus, Pos::Plus}) {
            const std::size_t wi = a == Pos::Minus ? v - digit_weight(dim, i) : v + digit_weight(dim, i);
            const std::size_t wj = b == Pos::Minus ? v - digit_weight(dim, j) : v + digit_weight(dim, j);
            for (std::size_t x = 0; x < sizes[v]; ++x)
              if (arrow(wi, j, b).at(arrow(v, i, a).at(x)) != arrow(wj, i, a).at(arrow(v, j, b).at(x)))
                return "square at " + position_label(p) + " in directions " + std::to_string(i) + "," +
                       std::to_string(j);
          }
      }
  }
  return std::nullopt;
}

CorrDiagram to_corr_diagram(const EvaluatedCube& e) {
  CorrDiagram c;
  c.dim = e.dim;
  for (const auto& h : e.sets) c.sizes.push_back(h.elements.size());
  c.minus = e.minus;
  c.plus = e.plus;
  return c;
}

namespace {

struct SubcubeLayout {
  std::vector<int> free;
  std::vector<std::size_t> at;  // position index per subcube vertex
};

SubcubeLayout layout(int dim, const Position& e, const Position& d) {
  if (!position_leq(e, d)) throw ArgumentError("subcube: " + position_label(e) + " is not below " + position_label(d));
  SubcubeLayout l;
  for (int i = 1; i <= dim; ++i)
    if (e[i - 1] == Pos::Zero && d[i - 1] != Pos::Zero) l.free.push_back(i);
  const int k = static_cast<int>(l.free.size());
  l.at.resize(std::size_t{1} << k);
  for (CubeVertex u = 0; u < l.at.size(); ++u) {
    Position p = e;
    for (int j = 1; j <= k; ++j)
      if (u & direction_bit(k, j)) p[l.free[j - 1] - 1] = d[l.free[j - 1] - 1];
    l.at[u] = position_index(p);
  }
  return l;
}

}  // namespace

FinCube evaluate_subcube(const HCombCube& h, const SSet& s, const Position& e, const Position& d) {
  const SubcubeLayout l = layout(h.dim(), e, d);
  FinCube f;
  f.dim = static_cast<int>(l.free.size());
  std::vector<HomSet> sets;
  for (std::size_t p : l.at) sets.push_back(hom(h.position(p), s));
  f.sizes.resize(l.at.size());
  f.edges.resize(l.at.size() * f.dim);
  for (CubeVertex u = 0; u < l.at.size(); ++u) {
    f.sizes[u] = sets[u].elements.size();
    for (int k = 1; k <= f.dim; ++k) {
      if (u & direction_bit(f.dim, k)) continue;
      const int dir = l.free[k - 1];
      const Pos to = d[dir - 1];
      const CubeVertex w = u | direction_bit(f.dim, k);
      const VertexMap& g = h.arrow(l.at[u], dir, to);
      Fn fn;
      fn.reserve(f.sizes[u]);
      for (const auto& x : sets[u].elements) {
        const std::size_t i = sets[w].index_of(restrict(s, g, h.position(l.at[w]), h.position(l.at[u]), x));
        if (i == static_cast<std::size_t>(-1)) throw ContractError("evaluate_subcube: restriction leaves the hom set");
        fn.push_back(i);
      }
      f.edges[u * f.dim + k - 1] = std::move(fn);
    }
  }
  return f;
}

FinCube subcube(const CorrDiagram& c, const Position& e, const Position& d) {
  const SubcubeLayout l = layout(c.dim, e, d);
  FinCube f;
  f.dim = static_cast<int>(l.free.size());
  f.sizes.resize(l.at.size());
  f.edges.resize(l.at.size() * f.dim);
  for (CubeVertex u = 0; u < l.at.size(); ++u) {
    f.sizes[u] = c.sizes.at(l.at[u]);
    for (int k = 1; k <= f.dim; ++k)
      if (!(u & direction_bit(f.dim, k))) f.edges[u * f.dim + k - 1] = c.arrow(l.at[u], l.free[k - 1], d[l.free[k - 1] - 1]);
  }
  return f;
}

Position alternating_upper(int n) {
  Position p(n);
  for (int i = 0; i < n; ++i) p[i] = i % 2 == 0 ? Pos::Plus : Pos::Minus;
  return p;
}

Position alternating_lower(int n) {
  Position p(n);
  for (int i = 0; i < n; ++i) p[i] = i % 2 == 0 ? Pos::Minus : Pos::Plus;
  return p;
}

InvertibilityReport is_invertible_cube(const CorrDiagram& c) {
  const Position center(c.dim, Pos::Zero);
  InvertibilityReport r;
  r.upper = is_pullback_cube(subcube(c, center, alternating_upper(c.dim)));
  r.lower = is_pullback_cube(subcube(c, center, alternating_lower(c.dim)));
  r.invertible = r.upper.pullback && r.lower.pullback;
  return r;
}

CorrDiagram compose_squares(const CorrDiagram& sq1, const CorrDiagram& sq2) {
  if (sq1.dim != 2 || sq2.dim != 2) throw ArgumentError("compose_squares: squares only");
  auto at = [](Pos x, Pos y) { return position_index({x, y}); };
  for (Pos y : {Pos::Minus, Pos::Zero, Pos::Plus})
    if (sq1.sizes[at(Pos::Plus, y)] != sq2.sizes[at(Pos::Minus, y)])
      throw ArgumentError("compose_squares: shared column sizes differ");
  for (Pos b : {Pos::Minus, Pos::Plus})
    if (sq1.arrow(at(Pos::Plus, Pos::Zero), 2, b) != sq2.arrow(at(Pos::Minus, Pos::Zero), 2, b))
      throw ArgumentError("compose_squares: shared column maps differ");
  CorrDiagram r;
  r.dim = 2;
  r.sizes.assign(9, 0);
  r.minus.assign(18, {});
  r.plus.assign(18, {});
  // middle column: fiber products over the shared column
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> mid(3);
  for (Pos y : {Pos::Minus, Pos::Zero, Pos::Plus}) {
    const Fn& f = sq1.arrow(at(Pos::Zero, y), 1, Pos::Plus);
    const Fn& g = sq2.arrow(at(Pos::Zero, y), 1, Pos::Minus);
    auto& m = mid[static_cast<int>(y)];
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (f[a] == g[b]) m.push_back({a, b});
    r.sizes[at(Pos::Zero, y)] = m.size();
    r.sizes[at(Pos::Minus, y)] = sq1.sizes[at(Pos::Minus, y)];
    r.sizes[at(Pos::Plus, y)] = sq2.sizes[at(Pos::Plus, y)];
  }
  auto slot = [](std::size_t v, int dir) { return v * 2 + dir - 1; };
  // direction 1 arrows out of the middle column
  for (Pos y : {Pos::Minus, Pos::Zero, Pos::Plus}) {
    const std::size_t v = at(Pos::Zero, y);
    for (const auto& [a, b] : mid[static_cast<int>(y)]) {
      r.minus[slot(v, 1)].push_back(sq1.arrow(v, 1, Pos::Minus)[a]);
      r.plus[slot(v, 1)].push_back(sq2.arrow(v, 1, Pos::Plus)[b]);
    }
  }
  // direction 2 arrows: outer columns copied, middle column componentwise
  const std::size_t left = at(Pos::Minus, Pos::Zero), right = at(Pos::Plus, Pos::Zero), c = at(Pos::Zero, Pos::Zero);
  for (Pos b : {Pos::Minus, Pos::Plus}) {
    auto& out = b == Pos::Minus ? r.minus : r.plus;
    out[slot(left, 2)] = sq1.arrow(left, 2, b);
    out[slot(right, 2)] = sq2.arrow(right, 2, b);
    const auto& target = mid[static_cast<int>(b)];
    for (const auto& [x, y] : mid[1]) {
      const std::pair<std::size_t, std::size_t> img{sq1.arrow(c, 2, b)[x], sq2.arrow(c, 2, b)[y]};
      auto it = std::lower_bound(target.begin(), target.end(), img);
      if (it == target.end() || *it != img) throw ContractError("compose_squares: square does not commute");
      out[slot(c, 2)].push_back(static_cast<std::size_t>(it - target.begin()));
    }
  }
  return r;
}

std::optional<bool> invertible_composition_check(const CorrDiagram& sq1, const CorrDiagram& sq2) {
  if (!is_invertible_square(sq1).invertible || !is_invertible_square(sq2).invertible) return std::nullopt;
  return is_invertible_square(compose_squares(sq1, sq2)).invertible;
}

}  // namespace hsegal
