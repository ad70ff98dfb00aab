#pragma once

// Finite simplicial sets in Eilenberg-Zilber normal form, nerves, vertex
// subcomplexes of standard simplices, and hom(K, S).

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hsegal {

constexpr int kMaxDim = 15;

// A possibly degenerate simplex: surjection word [dim] ->> [cell_dim] applied to
// a nondegenerate cell. Unused word slots stay zero so defaulted comparison is
// structural equality.
struct Simplex {
  std::uint8_t dim = 0;
  std::uint8_t cell_dim = 0;
  std::int32_t cell = 0;
  std::array<std::uint8_t, kMaxDim + 1> word{};

  static Simplex nondegenerate(int dim, int cell);
  static Simplex make(const std::vector<int>& word, int cell);
  std::vector<int> word_vector() const;
  bool degenerate() const { return dim != cell_dim; }
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

class SSet {
 public:
  explicit SSet(int dim_bound = 0);

  int dim_bound() const { return dim_bound_; }
  int cell_count(int k) const;
  const std::string& cell_name(int k, int c) const { return names_.at(k).at(c); }
  // d_i of the nondegenerate k-cell c.
  const Simplex& cell_face(int k, int c, int i) const { return faces_.at(k).at(c).at(i); }
  const std::vector<Simplex>& cell_faces(int k, int c) const { return faces_.at(k).at(c); }
  // Index of the named k-cell, or -1.
  int find_cell(int k, const std::string& name) const;

  // Appends a cell without checks; builders and parsers validate afterwards.
  int add_cell_unchecked(int k, std::string name, std::vector<Simplex> faces);

 private:
  int dim_bound_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
};

// Simplicial identities and referential integrity; empty means ok.
std::vector<std::string> validate(const SSet& s, std::size_t max_violations = 8);

// x o theta for monotone theta: [j] -> [x.dim], given as j+1 values.
Simplex act(const SSet& s, const Simplex& x, const std::vector<int>& theta);
Simplex face(const SSet& s, const Simplex& x, int i);
Simplex degeneracy(const Simplex& x, int i);
// Every simplex of dimension k, sorted.
std::vector<Simplex> materialize(const SSet& s, int k);
std::string describe(const SSet& s, const Simplex& x);

struct Monoid {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[a][b] = ab
  int identity() const;                 // -1 if none
};
// Throws InputError unless the table is total, associative and unital.
void check_monoid(const Monoid& m);

struct Category {
  struct Morphism {
    std::string name;
    int src = 0;
    int tgt = 0;
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;          // per object
  std::vector<std::vector<int>> compose;  // compose[f][g] = "f then g", -1 if not composable
};
void check_category(const Category& c);
Category category_of_monoid(const Monoid& m);

SSet point_sset(int dim_bound);
SSet nerve_monoid(const Monoid& m, int dim_bound);
SSet nerve_category(const Category& c, int dim_bound);
SSet attach_cell(const SSet& s, int k, const std::vector<Simplex>& boundary, std::string name = "");

// Subcomplex of Delta_m; generators are vertex bitmasks forming an antichain,
// kept in canonical order: descending size, then lexicographic vertex lists.
using VertexSet = std::uint32_t;
std::vector<int> vertex_list(VertexSet s);
VertexSet vertex_range(int lo, int hi);  // {lo..hi}

class VertexComplex {
 public:
  VertexComplex() = default;
  VertexComplex(int ambient, std::vector<VertexSet> generators);
  static VertexComplex full(int m);

  int ambient() const { return ambient_; }
  const std::vector<VertexSet>& generators() const { return generators_; }
  bool contains(VertexSet face) const;
  int max_generator_size() const;
  std::string to_string() const;
  friend bool operator==(const VertexComplex&, const VertexComplex&) = default;

 private:
  int ambient_ = 0;
  std::vector<VertexSet> generators_;
};
VertexComplex complex_union(const VertexComplex& a, const VertexComplex& b);
VertexComplex complex_intersection(const VertexComplex& a, const VertexComplex& b);

// One simplex per generator, in generator order.
using HomElement = std::vector<Simplex>;

struct HomElementHash {
  std::size_t operator()(const HomElement& h) const noexcept;
};

struct HomSet {
  VertexComplex complex;
  std::vector<HomElement> elements;  // sorted
  std::size_t index_of(const HomElement& h) const;  // npos if absent
};

HomSet hom(const VertexComplex& k, const SSet& s);
// Value of h on an arbitrary face of its complex.
Simplex value_on(const SSet& s, const VertexComplex& k, const HomElement& h, VertexSet face);
// Monotone vertex map g from {0..k_w.ambient} to {0..k_v.ambient}.
using VertexMap = std::vector<int>;
bool carries(const VertexMap& g, const VertexComplex& k_w, const VertexComplex& k_v);
HomElement restrict(const SSet& s, const VertexMap& g, const VertexComplex& k_w, const VertexComplex& k_v,
                    const HomElement& h);

}  // namespace hsegal
