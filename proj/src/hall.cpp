#include "hsegal/hall.hpp"

#include <algorithm>

#include "hsegal/errors.hpp"
#include "hsegal/hcomb.hpp"

namespace hsegal {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Quad = std::array<std::size_t, 4>;

// left: sum_e m_ab^e m_ec^x; right: sum_f m_bc^f m_af^x, keyed by (a, b, c, x).
std::map<Quad, BigInt> bracket(const HallTable& t, bool left) {
  std::map<std::size_t, std::vector<std::pair<std::array<std::size_t, 3>, std::uint64_t>>> by_first, by_second;
  for (const auto& [k, v] : t.constants) {
    by_first[k[0]].push_back({k, v});
    by_second[k[1]].push_back({k, v});
  }
  std::map<Quad, BigInt> out;
  for (const auto& [k, v] : t.constants) {
    const std::size_t mid = k[2];
    const auto& next = left ? by_first : by_second;
    auto it = next.find(mid);
    if (it == next.end()) continue;
    for (const auto& [k2, v2] : it->second) {
      const Quad q = left ? Quad{k[0], k[1], k2[1], k2[2]} : Quad{k2[0], k[0], k[1], k2[2]};
      out[q] += BigInt(v) * v2;
    }
  }
  return out;
}

}  // namespace

std::uint64_t HallTable::at(std::size_t a, std::size_t b, std::size_t c) const {
  auto it = constants.find({a, b, c});
  return it == constants.end() ? 0 : it->second;
}

std::size_t HallTable::index_of(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  return it == basis.end() ? npos : static_cast<std::size_t>(it - basis.begin());
}

bool same_table(const HallTable& x, const HallTable& y) {
  if (x.basis.size() != y.basis.size() || x.constants.size() != y.constants.size()) return false;
  std::vector<std::size_t> to_y(x.basis.size());
  for (std::size_t i = 0; i < x.basis.size(); ++i) {
    to_y[i] = y.index_of(x.basis[i]);
    if (to_y[i] == npos) return false;
  }
  for (const auto& [k, v] : x.constants)
    if (y.at(to_y[k[0]], to_y[k[1]], to_y[k[2]]) != v) return false;
  return true;
}

HallTable structure_constants(const SSet& s) {
  if (s.cell_count(0) != 1) throw PreconditionError("structure_constants: S_0 is not a point");
  if (s.dim_bound() < 3) throw BoundError("structure_constants: dim_bound too small", 3);
  const std::vector<Simplex> edges = materialize(s, 1);
  HallTable t;
  for (const auto& e : edges) t.basis.push_back(describe(s, e));
  auto edge_index = [&](const Simplex& x) {
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), x) - edges.begin());
  };

  // The span S_1 x S_1 <- S_2 -> S_1 at the A_1 cube: position 0 is the spine,
  // 1 the triangle, 2 the long edge.
  const EvaluatedCube span = evaluate(corr_cube(associator_cube(1)), s);
  for (std::size_t x = 0; x < span.sets[1].elements.size(); ++x) {
    const HomElement& ab = span.sets[0].elements[span.minus[1][x]];
    const HomElement& c = span.sets[2].elements[span.plus[1][x]];
    ++t.constants[{edge_index(ab[0]), edge_index(ab[1]), edge_index(c[0])}];
  }

  std::map<std::array<std::size_t, 3>, std::uint64_t> direct;
  for (const auto& sigma : materialize(s, 2))
    ++direct[{edge_index(face(s, sigma, 2)), edge_index(face(s, sigma, 0)), edge_index(face(s, sigma, 1))}];
  if (direct != t.constants) throw ContractError("structure_constants: span counts disagree with face counts");
  return t;
}

HallTable monoid_algebra_oracle(const Monoid& m) {
  check_monoid(m);
  const int unit = m.identity();
  HallTable t;
  // nerve order: the degenerate edge first, then the other elements in order
  std::vector<int> order{unit};
  for (int a = 0; a < static_cast<int>(m.elements.size()); ++a)
    if (a != unit) order.push_back(a);
  std::vector<std::size_t> pos(m.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = i;
    t.basis.push_back(order[i] == unit ? "s[0,0](*)" : m.elements[order[i]]);
  }
  for (std::size_t a = 0; a < m.elements.size(); ++a)
    for (std::size_t b = 0; b < m.elements.size(); ++b) t.constants[{pos[a], pos[b], pos[m.table[a][b]]}] = 1;
  return t;
}

AssociativityReport check_associativity(const HallTable& t) {
  const auto lhs = bracket(t, true), rhs = bracket(t, false);
  AssociativityReport r;
  auto fail = [&](const Quad& q, const BigInt& l, const BigInt& rr) {
    if (r.witness && r.witness->abcx < q) return;
    r.ok = false;
    r.witness = AssociativityWitness{q, l, rr};
  };
  for (const auto& [q, v] : lhs) {
    auto it = rhs.find(q);
    if (it == rhs.end() || it->second != v) fail(q, v, it == rhs.end() ? BigInt(0) : it->second);
  }
  for (const auto& [q, v] : rhs)
    if (!lhs.count(q)) fail(q, 0, v);
  return r;
}

}  // namespace hsegal
