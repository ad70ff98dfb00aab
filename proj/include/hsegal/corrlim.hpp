#pragma once

// Correspondence posets, limits of finite-set diagrams, pullback cubes and
// invertibility of cubes of correspondences in finite sets.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsegal/hcomb.hpp"

namespace hsegal {

using Fn = std::vector<std::size_t>;

// Elements are tuples of intervals [m, m+l] of {0..n_i}; e <= d iff every
// interval of d lies inside the matching interval of e. The cube poset is the
// grid [1,..,1] with - = [0,0], + = [1,1], 0 = [0,1].
class CorrPoset {
 public:
  static CorrPoset cube(int n);
  static CorrPoset grid(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::pair<int, int>>& element(std::size_t i) const { return elements_.at(i); }
  std::size_t index_of(const std::vector<std::pair<int, int>>& e) const;
  bool leq(std::size_t a, std::size_t b) const;
  std::string label(std::size_t i) const;

 private:
  std::vector<int> dims_;
  std::vector<std::vector<std::pair<int, int>>> elements_;  // sorted
};

std::pair<int, int> interval_of(Pos p);
bool position_leq(const Position& e, const Position& d);

// Commutative n-cube of finite sets {0..size-1}; same vertex and edge layout as
// PlusCube.
struct FinCube {
  int dim = 0;
  std::vector<std::size_t> sizes;
  std::vector<Fn> edges;  // [v * dim + dir - 1]

  CubeVertex sink() const { return (CubeVertex{1} << dim) - 1; }
  const Fn& edge(CubeVertex v, int dir) const { return edges.at(v * dim + dir - 1); }
  std::size_t apply(CubeVertex from, CubeVertex to, std::size_t x) const;
  std::optional<std::string> commutativity_violation() const;
};

FinCube fin_face(const FinCube& c, int dir, Side side);

// Finite diagram over a poset, presented by generating arrows.
struct FinDiagram {
  struct Arrow {
    std::size_t from = 0, to = 0;
    Fn fn;
  };
  std::vector<std::size_t> sizes;
  std::vector<Arrow> arrows;
};

// Matching families (x_v) with f(x_from) = x_to on every arrow, sorted.
std::vector<std::vector<std::size_t>> finset_limit(const FinDiagram& d);

// The cube minus its source; object k is vertex k + 1.
FinDiagram punctured(const FinCube& c);

enum class Witness { None, NotInjective, NotSurjective };

struct PullbackReport {
  bool pullback = false;
  Witness witness = Witness::None;
  // NotInjective: two source elements with the same image. NotSurjective: a
  // matching family over the punctured cube (vertex 1 first) missed by the source.
  std::vector<std::size_t> elements;
  std::size_t source_size = 0, limit_size = 0;
};
std::string to_string(Witness w);

// Throws InputError if the cube does not commute.
PullbackReport is_pullback_cube(const FinCube& c);

// If the + face in direction dir is a pullback, whether "whole cube pullback"
// and "- face pullback" agree; nullopt when the precondition fails.
std::optional<bool> pasting_check(const FinCube& c, int dir);

struct Span {
  std::size_t left = 0, center = 0, right = 0;
  Fn to_left, to_right;
};
struct SpanComposite {
  Span span;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // center elements
};
SpanComposite compose_spans(const Span& s1, const Span& s2);

// A functor from the cube correspondence poset to finite sets; arrows flip a 0
// coordinate to - or +.
struct CorrDiagram {
  int dim = 0;
  std::vector<std::size_t> sizes;  // by position index
  std::vector<Fn> minus, plus;     // [v * dim + dir - 1]

  const Fn& arrow(std::size_t v, int dir, Pos to) const {
    return (to == Pos::Minus ? minus : plus).at(v * dim + dir - 1);
  }
  std::optional<std::string> functoriality_violation() const;
};
CorrDiagram to_corr_diagram(const EvaluatedCube& e);

// Sub-cube from e to d (e <= d): free directions have e_i = 0 and d_i != 0.
FinCube subcube(const CorrDiagram& c, const Position& e, const Position& d);

// subcube(to_corr_diagram(evaluate(h, s)), e, d) without evaluating positions
// outside the subcube.
FinCube evaluate_subcube(const HCombCube& h, const SSet& s, const Position& e, const Position& d);

// (+,-,+,..) and (-,+,-,..).
Position alternating_upper(int n);
Position alternating_lower(int n);

struct InvertibilityReport {
  bool invertible = false;
  PullbackReport upper, lower;  // subcubes from the center to u and l
};
InvertibilityReport is_invertible_cube(const CorrDiagram& c);
inline InvertibilityReport is_invertible_square(const CorrDiagram& c) { return is_invertible_cube(c); }

// Glues two squares along sq1's + column and sq2's - column (direction 1).
// Throws ArgumentError if those columns differ.
CorrDiagram compose_squares(const CorrDiagram& sq1, const CorrDiagram& sq2);
// nullopt if either factor is not invertible, else whether the composite is.
std::optional<bool> invertible_composition_check(const CorrDiagram& sq1, const CorrDiagram& sq2);

}  // namespace hsegal
