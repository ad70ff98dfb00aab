#pragma once

// Finite ordinals <n> = {0,..,n-1}, monotone maps, and commutative cubes of them.
//
// Cube vertices are bitmasks over n directions; direction 1 is the most
// significant bit, so vertex masks read left to right as (e_1, ..., e_n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsegal {

struct OrdObj {
  int size = 0;
  friend bool operator==(const OrdObj&, const OrdObj&) = default;
};

struct OrdMap {
  OrdObj src;
  OrdObj tgt;
  std::vector<int> values;
  friend bool operator==(const OrdMap&, const OrdMap&) = default;
};

// Validates monotonicity and range.
OrdMap make_map(int src, int tgt, std::vector<int> values);
OrdMap identity_map(int n);
// g o f
OrdMap compose(const OrdMap& g, const OrdMap& f);
// Blockwise map <a>+<b> -> <a'>+<b'>, first block below the second.
OrdMap ordered_union(const OrdMap& f, const OrdMap& g);
bool is_surjective(const OrdMap& f);
bool is_identity(const OrdMap& f);
std::string to_string(const OrdMap& f);

// p^m_i : <m> -> <m-1>, 1 <= i <= m-1. The proof in the literature numbers
// elements from 1 and merges i, i+1; here elements are 0-indexed, so i-1 and i
// merge to i-1.
OrdMap surjection(int m, int i);
// The unique map <m> -> <1>.
OrdMap terminal_map(int m);

// Augmentation on maps: vertex k of Delta_{|Y|} is the cut sending the first k
// elements of Y to 0; pulling back along f: X -> Y gives the cut of X counting
// #{x : f(x) < k}. Result has |Y|+1 entries with values in 0..|X|.
std::vector<int> cut_pullback(const OrdMap& f);

using CubeVertex = std::uint32_t;

inline CubeVertex direction_bit(int dim, int dir) { return CubeVertex{1} << (dim - dir); }
inline int depth(CubeVertex v) { return __builtin_popcount(v); }

class PlusCube {
 public:
  PlusCube() = default;
  // edges[v * dim + (dir - 1)] is read only when direction dir is 0 at v.
  PlusCube(int dim, std::vector<OrdObj> vertices, std::vector<OrdMap> edges);

  int dim() const { return dim_; }
  CubeVertex sink() const { return (CubeVertex{1} << dim_) - 1; }
  const OrdObj& vertex(CubeVertex v) const { return vertices_.at(v); }
  const OrdMap& edge(CubeVertex v, int dir) const;
  bool has_edge(CubeVertex v, int dir) const { return (v & direction_bit(dim_, dir)) == 0; }

  // Composite from `from` to `to` (from <= to), flipping directions in
  // ascending order.
  OrdMap composite(CubeVertex from, CubeVertex to) const;
  // First square whose two paths disagree, as text; nullopt if the cube commutes.
  std::optional<std::string> commutativity_violation() const;

  friend bool operator==(const PlusCube&, const PlusCube&);

 private:
  int dim_ = 0;
  std::vector<OrdObj> vertices_;
  std::vector<OrdMap> edges_;
};

std::string vertex_label(int dim, CubeVertex v);

PlusCube associator_cube(int n);
PlusCube constant_cube(int dim, OrdObj x);
// Vertexwise ordered union; both cubes must have the same dimension.
PlusCube ordered_union(const PlusCube& a, const PlusCube& b);
// Cube of dimension `dim` depending only on the listed directions (ascending,
// one per direction of c); identity edges elsewhere.
PlusCube degenerate_extension(const PlusCube& c, int dim, const std::vector<int>& directions);

enum class Side { Minus, Plus };
PlusCube cube_face(const PlusCube& c, int dir, Side side);
std::vector<int> degenerate_directions(const PlusCube& c);

// Composites along all monotone source-to-sink paths.
std::vector<OrdMap> path_composites(const PlusCube& c);

struct UniquenessReport {
  bool unique = false;
  // Commutative labelings by surjections using every surjection <j> -> <j-1>
  // at the source vertex.
  std::size_t labelings = 0;
  // Labelings examined in total.
  std::size_t examined = 0;
  // Orbits of valid labelings under permutation of directions.
  std::size_t orbits = 0;
};
UniquenessReport verify_unique_associator(int n);

struct FacePart {
  int assoc_dim = 0;               // A_k, k = 0 is the point <1>
  std::vector<int> directions;     // face directions (1-based) it varies in
  PlusCube cube;                   // the degenerate extension to the face
};

struct FaceDecomposition {
  int dir = 0;
  Side side = Side::Minus;
  bool is_lower_associator = false;  // + faces: the face is A_{n-1}
  std::vector<FacePart> parts;       // - faces: ordered union of the parts
};

struct BoundaryReport {
  bool ok = false;
  std::vector<FaceDecomposition> faces;
  std::string failure;
};
BoundaryReport boundary_decomposition(int n);

// F_n as vertex maps between ordinals [|J|+1]. Subsets are bitmasks over
// directions with the cube's bit convention.
std::vector<int> fundamental_map(int n, CubeVertex I, CubeVertex J);

struct FactorizationReport {
  bool ok = false;
  std::size_t pairs_checked = 0;
  std::string failure;
};
FactorizationReport check_fundamental_factorization(int n);

}  // namespace hsegal
