#include "hsegal/io.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "hsegal/errors.hpp"

namespace hsegal {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x, what));
  return out;
}

int lookup(const std::map<std::string, int>& index, const std::string& name, const char* what) {
  auto it = index.find(name);
  if (it == index.end()) throw InputError(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

std::map<std::string, int> index_names(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], static_cast<int>(i)).second)
      throw InputError(std::string("duplicate ") + what + " '" + names[i] + "'");
  return index;
}

}  // namespace

Json to_json(const SSet& s) {
  Json cells = Json::array();
  for (int k = 0; k <= s.dim_bound(); ++k)
    for (int c = 0; c < s.cell_count(k); ++c) {
      Json faces = Json::array();
      for (const Simplex& f : s.cell_faces(k, c)) faces.push_back(Json::array({f.word_vector(), s.cell_name(f.cell_dim, f.cell)}));
      cells.push_back({{"id", s.cell_name(k, c)}, {"dim", k}, {"faces", faces}});
    }
  return {{"kind", "simplicial_set"}, {"dim_bound", s.dim_bound()}, {"cells", cells}};
}

Json to_json(const Monoid& m) {
  Json table = Json::array();
  for (const auto& row : m.table) {
    Json r = Json::array();
    for (int x : row) r.push_back(m.elements[x]);
    table.push_back(r);
  }
  return {{"kind", "monoid"}, {"elements", m.elements}, {"table", table}};
}

Json to_json(const Category& c) {
  Json morphisms = Json::array(), identities = Json::object(), compose = Json::array();
  for (const auto& f : c.morphisms) morphisms.push_back({{"id", f.name}, {"src", c.objects[f.src]}, {"tgt", c.objects[f.tgt]}});
  for (std::size_t x = 0; x < c.objects.size(); ++x) identities[c.objects[x]] = c.morphisms[c.identities[x]].name;
  for (std::size_t f = 0; f < c.compose.size(); ++f)
    for (std::size_t g = 0; g < c.compose[f].size(); ++g)
      if (c.compose[f][g] >= 0)
        compose.push_back({c.morphisms[f].name, c.morphisms[g].name, c.morphisms[c.compose[f][g]].name});
  return {{"kind", "category"}, {"objects", c.objects}, {"morphisms", morphisms}, {"identities", identities},
          {"compose", compose}};
}

SSet sset_from_json(const Json& j) {
  const Json& db = field(j, "dim_bound");
  if (!db.is_number_integer() || db.get<int>() < 0 || db.get<int>() > kMaxDim)
    throw InputError("dim_bound must be an integer in [0, 15]");
  const int dim_bound = db.get<int>();
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw InputError("cells must be an array");

  // names first so faces may refer to any cell of lower dimension
  std::vector<std::map<std::string, int>> ids(dim_bound + 1);
  std::vector<std::vector<const Json*>> by_dim(dim_bound + 1);
  for (const auto& cell : cells) {
    const Json& d = field(cell, "dim");
    if (!d.is_number_integer() || d.get<int>() < 0 || d.get<int>() > dim_bound)
      throw InputError("cell dim must be an integer in [0, dim_bound]");
    const int k = d.get<int>();
    const std::string id = str(field(cell, "id"), "cell id");
    if (!ids[k].emplace(id, static_cast<int>(by_dim[k].size())).second)
      throw InputError("duplicate cell id '" + id + "' in dimension " + std::to_string(k));
    by_dim[k].push_back(&cell);
  }

  SSet s(dim_bound);
  for (int k = 0; k <= dim_bound; ++k)
    for (const Json* cell : by_dim[k]) {
      const std::string id = (*cell)["id"].get<std::string>();
      const Json& faces = field(*cell, "faces");
      if (!faces.is_array() || static_cast<int>(faces.size()) != (k == 0 ? 0 : k + 1))
        throw InputError("cell '" + id + "' needs " + std::to_string(k == 0 ? 0 : k + 1) + " faces");
      std::vector<Simplex> out;
      for (const auto& f : faces) {
        if (!f.is_array() || f.size() != 2 || !f[0].is_array()) throw InputError("face of '" + id + "' must be [word, id]");
        std::vector<int> word;
        for (const auto& w : f[0]) {
          if (!w.is_number_integer()) throw InputError("face word of '" + id + "' must hold integers");
          word.push_back(w.get<int>());
        }
        if (static_cast<int>(word.size()) != k) throw InputError("face word of '" + id + "' has the wrong length");
        Simplex x;
        try {
          x = Simplex::make(word, 0);
        } catch (const ArgumentError& e) {
          throw InputError("face of '" + id + "': " + e.what());
        }
        x.cell = lookup(ids[x.cell_dim], str(f[1], "face cell id"), "cell");
        out.push_back(x);
      }
      s.add_cell_unchecked(k, id, std::move(out));
    }
  const auto problems = validate(s);
  if (!problems.empty()) throw InputError("invalid simplicial set: " + problems.front());
  return s;
}

Monoid monoid_from_json(const Json& j) {
  Monoid m;
  m.elements = strings(field(j, "elements"), "monoid element");
  const auto index = index_names(m.elements, "monoid element");
  const Json& table = field(j, "table");
  if (!table.is_array()) throw InputError("monoid table must be an array");
  for (const auto& row : table) {
    std::vector<int> r;
    for (const auto& name : strings(row, "monoid table entry")) r.push_back(lookup(index, name, "monoid element"));
    m.table.push_back(r);
  }
  check_monoid(m);
  return m;
}

Category category_from_json(const Json& j) {
  Category c;
  c.objects = strings(field(j, "objects"), "object");
  const auto objects = index_names(c.objects, "object");
  const Json& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) throw InputError("morphisms must be an array");
  std::vector<std::string> names;
  for (const auto& f : morphisms) {
    c.morphisms.push_back({str(field(f, "id"), "morphism id"), lookup(objects, str(field(f, "src"), "src"), "object"),
                           lookup(objects, str(field(f, "tgt"), "tgt"), "object")});
    names.push_back(c.morphisms.back().name);
  }
  const auto index = index_names(names, "morphism");
  const Json& ids = field(j, "identities");
  if (!ids.is_object()) throw InputError("identities must map objects to morphisms");
  for (const auto& o : c.objects) {
    if (!ids.contains(o)) throw InputError("no identity for object '" + o + "'");
    c.identities.push_back(lookup(index, str(ids.at(o), "identity"), "morphism"));
  }
  const int nm = static_cast<int>(c.morphisms.size());
  c.compose.assign(nm, std::vector<int>(nm, -1));
  const Json& compose = field(j, "compose");
  if (!compose.is_array()) throw InputError("compose must be an array of triples");
  for (const auto& t : compose) {
    const auto v = strings(t, "composition triple");
    if (v.size() != 3) throw InputError("composition entries are [f, g, f then g]");
    int& slot = c.compose[lookup(index, v[0], "morphism")][lookup(index, v[1], "morphism")];
    if (slot >= 0) throw InputError("composite of " + v[0] + " and " + v[1] + " given twice");
    slot = lookup(index, v[2], "morphism");
  }
  check_category(c);
  return c;
}

std::string Input::kind() const {
  switch (value.index()) {
    case 0: return "simplicial_set";
    case 1: return "monoid";
    default: return "category";
  }
}

SSet Input::simplicial_set(int dim_bound) const {
  if (const auto* s = std::get_if<SSet>(&value)) return *s;
  if (const auto* m = std::get_if<Monoid>(&value)) return nerve_monoid(*m, dim_bound);
  return nerve_category(std::get<Category>(value), dim_bound);
}

Input parse_input(const std::string& text, const std::string& path) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  const std::string kind = str(field(j, "kind"), "kind");
  Input in{path, sha256_hex(text), Monoid{}};
  if (kind == "simplicial_set") in.value = sset_from_json(j);
  else if (kind == "monoid") in.value = monoid_from_json(j);
  else if (kind == "category") in.value = category_from_json(j);
  else throw InputError("unknown kind '" + kind + "'");
  return in;
}

Input load_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_input(buf.str(), path);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw ContractError("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace hsegal
