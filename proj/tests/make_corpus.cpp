// Writes the bundled corpus: inputs and their expected-verdict sidecars.
// Usage: make_corpus OUT_DIR

#include <fstream>
#include <iostream>

#include "fixtures.hpp"
#include "hsegal/io.hpp"

using namespace hsegal;
using namespace fixtures;

namespace {

struct SegalExpect {
  int d, n_max;
  bool lower, upper, cubes;
};

struct Entry {
  std::string name;
  Json input;
  int dim_bound;
  std::vector<SegalExpect> segal;
  Json lax_degree;  // null when not recorded
  Json hall;        // {"associative": b} or null when S_0 is not a point
};

Json expected(const Entry& e) {
  Json segal = Json::array();
  for (const auto& s : e.segal) {
    const bool ok = s.lower && s.upper && s.cubes;
    segal.push_back({{"d", s.d},
                     {"nmax", s.n_max},
                     {"lower", s.lower},
                     {"upper", s.upper},
                     {"cubes", s.cubes},
                     {"exit_code", ok ? 0 : 1}});
  }
  Json hall = e.hall;
  if (!hall.is_null()) hall["exit_code"] = hall["associative"].get<bool>() ? 0 : 1;
  return {{"input", e.name + ".json"}, {"dim_bound", e.dim_bound}, {"segal", segal}, {"lax_degree", e.lax_degree},
          {"hall", hall}};
}

Json assoc(bool b) { return {{"associative", b}}; }

// One key per line, and arrays one compact element per line.
std::string layout(const Json& j) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : j.items()) {
    out += "  " + Json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value.front().is_structured()) {
      out += "[\n";
      for (std::size_t k = 0; k < value.size(); ++k) out += "    " + value[k].dump() + (k + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++i < j.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus OUT_DIR\n";
    return 2;
  }
  const std::string out = argv[1];
  const std::vector<SegalExpect> pass{{2, 5, true, true, true}, {3, 5, true, true, true}};
  const std::vector<Entry> entries{
      {"trivial", to_json(trivial_monoid()), 6, pass, 1, assoc(true)},
      {"z2", to_json(cyclic_group(2)), 6, pass, 1, assoc(true)},
      {"z3", to_json(cyclic_group(3)), 6, pass, 1, assoc(true)},
      {"absorbing", to_json(absorbing_monoid()), 6, pass, 1, assoc(true)},
      {"poset3", to_json(chain_poset(3)), 6, pass, 1, Json()},
      {"dup2", to_json(duplicate_triangle_mutant(6)), 6, {{2, 5, false, false, false}, {3, 5, false, false, false}}, 3,
       assoc(false)},
      {"dup3", to_json(duplicate_tetrahedron_mutant(6)), 6, {{2, 5, false, false, false}, {3, 5, false, false, false}}, 4,
       assoc(true)},
      {"free_edge_z2", to_json(free_edge_mutant(cyclic_group(2), 6)), 6,
       {{2, 5, false, false, false}, {3, 5, true, true, true}}, 2, assoc(false)},
      {"free_edge_point", to_json(free_edge_mutant(trivial_monoid(), 6)), 6, pass, 1, assoc(true)},
      {"lower3", to_json(lower3_mutant(6)), 6, {{2, 5, false, false, false}, {3, 5, true, false, false}}, 3,
       assoc(false)},
      {"lower2", to_json(lower2_mutant()), 3, {{2, 2, true, false, false}}, Json(), assoc(true)},
  };
  for (const auto& e : entries) {
    std::ofstream(out + "/" + e.name + ".json") << layout(e.input);
    std::ofstream(out + "/" + e.name + ".expected.json") << layout(expected(e));
  }
  return 0;
}
