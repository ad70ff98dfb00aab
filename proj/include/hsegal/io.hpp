#pragma once

// JSON input formats and input digests.
//
//   {"kind": "simplicial_set", "dim_bound": 6,
//    "cells": [{"id": "*", "dim": 0, "faces": []},
//              {"id": "g", "dim": 1, "faces": [[[0], "*"], [[0], "*"]]}, ...]}
//   {"kind": "monoid", "elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]}
//   {"kind": "category", "objects": ["0", "1"],
//    "morphisms": [{"id": "f", "src": "0", "tgt": "1"}, ...],
//    "identities": {"0": "id0", ...}, "compose": [["f", "g", "f;g"], ...]}
//
// A face [w, id] is the degeneracy word w applied to the cell `id` of
// dimension w.back(); ids are unique within a dimension. Category composition
// triples read "f then g equals h".

#include <string>
#include <variant>

#include "json.hpp"

#include "hsegal/sset.hpp"

namespace hsegal {

using Json = nlohmann::ordered_json;

Json to_json(const SSet& s);
Json to_json(const Monoid& m);
Json to_json(const Category& c);

// Throw InputError on malformed or invalid data.
SSet sset_from_json(const Json& j);
Monoid monoid_from_json(const Json& j);
Category category_from_json(const Json& j);

struct Input {
  std::string path;
  std::string sha256;  // of the raw file bytes
  std::variant<SSet, Monoid, Category> value;

  std::string kind() const;
  // The simplicial set itself, or the nerve truncated at dim_bound.
  SSet simplicial_set(int dim_bound) const;
};

Input parse_input(const std::string& text, const std::string& path = "");
Input load_input(const std::string& path);

std::string sha256_hex(const std::string& bytes);

}  // namespace hsegal
