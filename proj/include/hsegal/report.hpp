#pragma once

// Command reports and the commands behind the CLI. Machine output is an
// ordered JSON document with no timings, so equal invocations give equal bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsegal/io.hpp"

namespace hsegal {

enum class Verdict { Pass, Fail, Info };
std::string to_string(Verdict v);

struct CheckRecord {
  std::string name;
  Json parameters = Json::object();
  Verdict verdict = Verdict::Info;
  Json witness;  // null when there is nothing to show
  double millis = 0;
};

struct Report {
  std::string command;
  Json arguments = Json::object();
  Json inputs = Json::array();  // [{path, kind, sha256}]
  std::vector<CheckRecord> checks;
  Json data = Json::object();

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
};

std::string render_machine(const Report& r);
std::string render_human(const Report& r);

struct AssocCubeArgs {
  int n = 2;
  bool check_unique = false;
  bool boundary = false;
};
Report cmd_assoc_cube(const AssocCubeArgs& a);

struct HcombArgs {
  int src = 0, tgt = 0;
  std::vector<int> values;
  std::optional<int> assoc;  // list the positions of corr_cube(A_n) instead
};
Report cmd_hcomb(const HcombArgs& a);

struct SegalArgs {
  std::string input;
  int d = 2;
  int n_max = 5;  // cube level; triangulations run up to Delta_{n_max + 1}
  std::string method = "both";  // triangulation | cubes | both
  std::string mode = "full";    // full | reduced
  std::optional<int> dim_bound;  // nerve truncation for monoid/category inputs
};
Report cmd_segal_check(const SegalArgs& a);

struct HallArgs {
  std::string input;
  std::optional<std::string> oracle;
};
Report cmd_hall(const HallArgs& a);

constexpr std::uint64_t kDefaultSeed = 20240917;

struct GaleArgs {
  int n = 3, d = 2;
  bool geometry = false;
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
};
Report cmd_gale(const GaleArgs& a);

}  // namespace hsegal
