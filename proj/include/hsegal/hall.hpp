#pragma once

// Counting Hall algebra of a finite simplicial set with one vertex.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsegal/sset.hpp"

namespace hsegal {

using BigInt = boost::multiprecision::cpp_int;

struct HallTable {
  std::vector<std::string> basis;  // labels, in basis order
  // (a, b, c) -> m_ab^c, nonzero entries only
  std::map<std::array<std::size_t, 3>, std::uint64_t> constants;

  std::uint64_t at(std::size_t a, std::size_t b, std::size_t c) const;
  std::size_t index_of(const std::string& label) const;  // npos if absent
};

// Same basis labels (in any order) and the same constants under that matching.
bool same_table(const HallTable& x, const HallTable& y);

// Basis is materialize(S, 1), labelled by describe(). Constants are read off
// the evaluated A_1 span and cross-checked against the direct face count.
HallTable structure_constants(const SSet& s);

// m_ab^c = [c = ab], labelled the way the nerve labels its edges.
HallTable monoid_algebra_oracle(const Monoid& m);

struct AssociativityWitness {
  std::array<std::size_t, 4> abcx{};
  BigInt lhs, rhs;  // sum_e m_ab^e m_ec^x, sum_f m_bc^f m_af^x
};

struct AssociativityReport {
  bool ok = true;
  std::optional<AssociativityWitness> witness;  // least failing (a, b, c, x)
};

AssociativityReport check_associativity(const HallTable& t);

}  // namespace hsegal
