#pragma once

// The augmentation of ordinals into standard simplices, H_comb of monotone maps
// and the cube of correspondences built from a commutative cube in Delta_+.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hsegal/ordcube.hpp"
#include "hsegal/sset.hpp"

namespace hsegal {

// A(<n>) = Delta_n; vertex k is the cut sending the first k elements to 0.
struct Augmentation {
  int ambient = 0;
  int cuts = 1;
};
Augmentation augmentation(const OrdObj& x);

// Vertices {a, .., b+1} of Delta_{|X|} for the interval I = [a..b]. `elements`
// must be contiguous and ascending; an empty interval sits at `empty_at`.
VertexSet interval_extension(const OrdObj& x, const std::vector<int>& elements, int empty_at = 0);

// Generated by the interval extensions of the fibers of alpha. The identity of
// <0> has no fibers; it is assigned Delta_0 so that <0> behaves as a unit.
VertexComplex h_comb(const OrdMap& alpha);

// h_comb(f) inside h_comb(g o f) via the identity of the ambient simplex.
VertexMap case1_map(const OrdMap& f, const OrdMap& g);
// Cut pullback along f: ambient of h_comb(g) to ambient of h_comb(g o f).
VertexMap case2_map(const OrdMap& f, const OrdMap& g);

// Positions are words in {-,0,+}^n; digit - = 0, 0 = 1, + = 2, direction 1 the
// most significant digit.
enum class Pos : int { Minus = 0, Zero = 1, Plus = 2 };
using Position = std::vector<Pos>;
std::size_t position_count(int dim);
std::size_t position_index(const Position& p);
Position position_at(int dim, std::size_t index);
std::string position_label(const Position& p);
inline std::size_t power3(int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}
// Digit weight of direction dir (1-based).
inline std::size_t digit_weight(int dim, int dir) { return power3(dim - dir); }

class HCombCube {
 public:
  HCombCube() = default;
  HCombCube(int dim, std::vector<VertexComplex> positions, std::vector<VertexMap> minus, std::vector<VertexMap> plus);

  int dim() const { return dim_; }
  std::size_t size() const { return positions_.size(); }
  const VertexComplex& position(std::size_t index) const { return positions_.at(index); }
  // Arrow from position v (coordinate dir is 0) to v with dir flipped to `to`,
  // stored in the simplicial-set direction: ambient of the flipped position to
  // ambient of v.
  const VertexMap& arrow(std::size_t v, int dir, Pos to) const;
  std::size_t flipped(std::size_t v, int dir, Pos to) const;

  // First square whose composites differ, or any arrow that fails to carry.
  std::optional<std::string> violation() const;

 private:
  int dim_ = 0;
  std::vector<VertexComplex> positions_;
  std::vector<VertexMap> minus_, plus_;  // [v * dim + dir - 1]
};

// Position v holds h_comb of the composite from (e_i = [v_i = +]) to
// (e_i = [v_i != -]). Throws InputError if C does not commute.
HCombCube corr_cube(const PlusCube& c);

struct EvaluatedCube {
  int dim = 0;
  std::vector<HomSet> sets;
  // Restriction functions: sets[v] index -> sets[flipped] index.
  std::vector<std::vector<std::size_t>> minus, plus;
};

// Throws BoundError when an ambient simplex exceeds the dimension bound, and
// ContractError if restriction is not functorial on some square.
EvaluatedCube evaluate(const HCombCube& h, const SSet& s);

struct ProductLawReport {
  bool ok = false;
  std::string failure;
};
// evaluate(corr_cube(C1 + C2), S) against the product of the separate
// evaluations. Throws PreconditionError unless S_0 is a point.
ProductLawReport check_product_law(const PlusCube& c1, const PlusCube& c2, const SSet& s);

}  // namespace hsegal
