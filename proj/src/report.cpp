#include "hsegal/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "hsegal/cyclic.hpp"
#include "hsegal/errors.hpp"
#include "hsegal/hall.hpp"
#include "hsegal/hcomb.hpp"
#include "hsegal/ordcube.hpp"
#include "hsegal/segal.hpp"

namespace hsegal {

namespace {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

Json vertex_sets(const std::vector<VertexSet>& v) {
  Json out = Json::array();
  for (VertexSet s : v) out.push_back(vertex_list(s));
  return out;
}

Json input_record(const Input& in) { return {{"path", in.path}, {"kind", in.kind()}, {"sha256", in.sha256}}; }

Json adapt_witness(const TriangulationRow& row) {
  return {{"n", row.n},
          {"d", row.d},
          {"triangulation", to_string(row.kind)},
          {"failure", to_string(row.result.witness)},
          {"element", row.result.witness_element},
          {"simplices", row.result.simplices},
          {"restricted", row.result.restricted}};
}

// NotInjective witnesses are simplices of Delta_{n+1}; name them.
Json pullback_witness(const SSet& s, int n, const char* subcube, const PullbackReport& p) {
  Json w = {{"subcube", subcube},
            {"failure", to_string(p.witness)},
            {"source_size", p.source_size},
            {"limit_size", p.limit_size}};
  if (p.witness == Witness::NotInjective) {
    const HomSet top = hom(VertexComplex::full(n + 1), s);
    Json names = Json::array();
    for (std::size_t i : p.elements) names.push_back(describe(s, top.elements.at(i)[0]));
    w["elements"] = names;
  } else {
    w["family"] = p.elements;
  }
  return w;
}

std::string compact(const Json& j) { return j.dump(); }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "info";
  }
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.verdict == Verdict::Fail; });
}

std::string render_machine(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"parameters", c.parameters}, {"verdict", to_string(c.verdict)}, {"witness", c.witness}});
  const Json doc = {{"command", r.command}, {"arguments", r.arguments}, {"inputs", r.inputs},
                    {"checks", checks},     {"data", r.data},           {"verdict", r.passed() ? "pass" : "fail"}};
  return doc.dump(2) + "\n";
}

std::string render_human(const Report& r) {
  std::ostringstream os;
  os << r.command << " " << compact(r.arguments) << "\n";
  for (const auto& in : r.inputs)
    os << "  input " << in["path"].get<std::string>() << " (" << in["kind"].get<std::string>() << ") sha256 "
       << in["sha256"].get<std::string>() << "\n";
  for (const auto& [key, value] : r.data.items()) os << "  " << key << ": " << compact(value) << "\n";
  for (const auto& c : r.checks) {
    std::string tag = to_string(c.verdict);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << "  [" << tag << "] " << c.name;
    if (!c.parameters.empty()) os << " " << compact(c.parameters);
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.millis);
    os << "  (" << ms << " ms)\n";
    if (!c.witness.is_null()) os << "         witness: " << compact(c.witness) << "\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Report cmd_assoc_cube(const AssocCubeArgs& a) {
  if (a.n < 1 || a.n > 8) throw ArgumentError("assoc-cube: --n must be in [1, 8]");
  if (a.check_unique && a.n > 3) throw ArgumentError("assoc-cube: --check-unique needs n <= 3");
  if (a.boundary && a.n > 4) throw ArgumentError("assoc-cube: --boundary needs n <= 4");
  Report r;
  r.command = "assoc-cube";
  r.arguments = {{"n", a.n}, {"check_unique", a.check_unique}, {"boundary", a.boundary}};

  const PlusCube c = associator_cube(a.n);
  Json vertices = Json::array(), edges = Json::array();
  for (CubeVertex v = 0; v <= c.sink(); ++v) {
    vertices.push_back({{"vertex", vertex_label(a.n, v)}, {"size", c.vertex(v).size}});
    for (int dir = 1; dir <= a.n; ++dir)
      if (c.has_edge(v, dir))
        edges.push_back({{"from", vertex_label(a.n, v)},
                         {"to", vertex_label(a.n, v | direction_bit(a.n, dir))},
                         {"direction", dir},
                         {"map", c.edge(v, dir).values}});
  }
  r.data["vertices"] = vertices;
  r.data["edges"] = edges;

  {
    Stopwatch t;
    const auto bad = c.commutativity_violation();
    r.checks.push_back({"commutes", {}, verdict_of(!bad), bad ? Json(*bad) : Json(), t.millis()});
  }
  {
    Stopwatch t;
    const auto paths = path_composites(c);
    std::size_t factorial = 1;
    for (int k = 2; k <= a.n; ++k) factorial *= k;
    std::set<std::vector<int>> distinct;
    for (const auto& p : paths) distinct.insert(p.values);
    const bool ok = paths.size() == factorial && distinct.size() == 1;
    r.checks.push_back({"path_count", {{"expected", factorial}}, verdict_of(ok),
                        ok ? Json() : Json{{"paths", paths.size()}, {"distinct_composites", distinct.size()}}, t.millis()});
  }
  if (a.check_unique) {
    Stopwatch t;
    const UniquenessReport u = verify_unique_associator(a.n);
    r.data["uniqueness"] = {{"labelings", u.labelings}, {"examined", u.examined}, {"orbits", u.orbits}};
    r.checks.push_back({"unique_up_to_direction_permutation", {}, verdict_of(u.unique), Json(), t.millis()});
  }
  if (a.boundary) {
    Stopwatch t;
    const BoundaryReport b = boundary_decomposition(a.n);
    Json faces = Json::array();
    for (const auto& f : b.faces) {
      Json parts = Json::array();
      for (const auto& p : f.parts) parts.push_back({{"associator", p.assoc_dim}, {"directions", p.directions}});
      faces.push_back({{"direction", f.dir},
                       {"side", f.side == Side::Minus ? "-" : "+"},
                       {"lower_associator", f.is_lower_associator},
                       {"parts", parts}});
    }
    r.data["boundary"] = faces;
    r.checks.push_back({"boundary_decomposition", {}, verdict_of(b.ok), b.ok ? Json() : Json(b.failure), t.millis()});
  }
  return r;
}

Report cmd_hcomb(const HcombArgs& a) {
  Report r;
  r.command = "hcomb";
  if (a.assoc) {
    const int n = *a.assoc;
    if (n < 1 || n > 4) throw ArgumentError("hcomb: --assoc must be in [1, 4]");
    r.arguments = {{"assoc", n}};
    Stopwatch t;
    const HCombCube h = corr_cube(associator_cube(n));
    Json positions = Json::array();
    for (std::size_t v = 0; v < h.size(); ++v)
      positions.push_back({{"position", position_label(position_at(n, v))},
                           {"ambient", h.position(v).ambient()},
                           {"generators", vertex_sets(h.position(v).generators())}});
    r.data["positions"] = positions;
    const auto bad = h.violation();
    r.checks.push_back({"functorial", {}, verdict_of(!bad), bad ? Json(*bad) : Json(), t.millis()});
    return r;
  }
  r.arguments = {{"src", a.src}, {"tgt", a.tgt}, {"values", a.values}};
  const OrdMap f = make_map(a.src, a.tgt, a.values);
  const VertexComplex k = h_comb(f);
  r.data["map"] = to_string(f);
  r.data["ambient"] = k.ambient();
  r.data["generators"] = vertex_sets(k.generators());
  return r;
}

Report cmd_segal_check(const SegalArgs& a) {
  if (a.method != "triangulation" && a.method != "cubes" && a.method != "both")
    throw ArgumentError("segal-check: --method must be triangulation, cubes or both");
  if (a.mode != "full" && a.mode != "reduced") throw ArgumentError("segal-check: --mode must be full or reduced");
  if (a.d < 1 || a.d > a.n_max) throw ArgumentError("segal-check: need 1 <= d <= nmax (empty range)");
  const Input in = load_input(a.input);
  const SSet s = in.simplicial_set(a.dim_bound.value_or(a.n_max + 1));
  if (a.n_max + 1 > s.dim_bound()) throw BoundError("segal-check: nmax + 1 exceeds dim_bound", a.n_max + 1);

  Report r;
  r.command = "segal-check";
  r.arguments = {{"input", a.input}, {"d", a.d}, {"nmax", a.n_max}, {"method", a.method}, {"mode", a.mode},
                 {"dim_bound", s.dim_bound()}};
  r.inputs.push_back(input_record(in));

  const bool tri = a.method != "cubes", cubes = a.method != "triangulation", both = a.method == "both";
  const SegalMode mode = a.mode == "full" ? SegalMode::Full : SegalMode::Reduced;
  auto run_tri = [&](SegalMode m) {
    Stopwatch t;
    TriangulationVerdict v = check_dsegal_triangulations(s, a.d, a.n_max + 1, m);
    return std::pair{v, t.millis()};
  };
  auto record_tri = [&](const TriangulationVerdict& v, double ms) {
    const std::string m = v.mode == SegalMode::Full ? "full" : "reduced";
    for (TriKind k : {TriKind::Lower, TriKind::Upper}) {
      Json witness;
      for (const auto& row : v.rows)
        if (row.kind == k && !row.result.adapted) {
          witness = adapt_witness(row);
          break;
        }
      r.checks.push_back({"triangulation_" + to_string(k),
                          {{"d", a.d}, {"n_max", v.n_max}, {"mode", m}},
                          verdict_of(k == TriKind::Lower ? v.lower : v.upper), witness, ms / 2});
    }
  };

  std::optional<TriangulationVerdict> chosen, reduced;
  if (tri) {
    auto [v, ms] = run_tri(mode);
    record_tri(v, ms);
    if (mode == SegalMode::Reduced) reduced = v;
    chosen = std::move(v);
  }
  std::optional<CubeVerdict> cv;
  if (cubes) {
    Stopwatch t;
    cv = check_dsegal_cubes(s, a.d, a.n_max);
    const double ms = t.millis() / std::max<std::size_t>(cv->rows.size(), 1);
    for (const CubeRow& row : cv->rows) {
      Json witness;
      if (!row.upper.pullback) witness = pullback_witness(s, row.n, "u", row.upper);
      else if (!row.lower.pullback) witness = pullback_witness(s, row.n, "l", row.lower);
      r.checks.push_back({"cube_H" + std::to_string(row.n),
                          {{"n", row.n}, {"u", row.upper.pullback}, {"l", row.lower.pullback}},
                          verdict_of(row.invertible()), witness, ms});
    }
  }
  if (both) {
    if (!reduced) {
      auto [v, ms] = run_tri(SegalMode::Reduced);
      reduced = v;
      Json w;
      if (v.ok() != chosen->ok()) w = {{"full", chosen->ok()}, {"reduced", v.ok()}};
      r.checks.push_back({"full_reduced_agree", {{"d", a.d}}, verdict_of(w.is_null()), w, ms});
    } else {
      auto [v, ms] = run_tri(SegalMode::Full);
      Json w;
      if (v.ok() != reduced->ok()) w = {{"full", v.ok()}, {"reduced", reduced->ok()}};
      r.checks.push_back({"full_reduced_agree", {{"d", a.d}}, verdict_of(w.is_null()), w, ms});
    }
    // H_n against L[n+1,n] and U[n+1,n]
    Json levels = Json::array(), w;
    for (const CubeRow& row : cv->rows) {
      bool t = true;
      for (const auto& tr : reduced->rows)
        if (tr.n == row.n + 1) t = t && tr.result.adapted;
      levels.push_back({{"n", row.n}, {"cube", row.invertible()}, {"triangulations", t}});
      if (t != row.invertible() && w.is_null()) w = levels.back();
    }
    r.data["levels"] = levels;
    r.checks.push_back({"routes_agree", {{"d", a.d}, {"n_max", a.n_max}}, verdict_of(w.is_null()), w, 0});

    Stopwatch t;
    const LowerUpperDiagnostic lu = lower_upper_diagnostic(s, a.d);
    r.data["lower_upper"] = {{"d", lu.d},
                             {"L", lu.tri_lower},
                             {"U", lu.tri_upper},
                             {"cube_l", lu.cube_l},
                             {"cube_u", lu.cube_u},
                             {"direct_pairing", lu.direct_matches},
                             {"swapped_pairing", lu.swapped_matches}};
    r.checks.push_back({"lower_upper_diagnostic", {{"d", a.d}}, Verdict::Info, Json(), t.millis()});
    if (a.n_max >= 2) {
      Stopwatch tl;
      const LaxDegreeReport lax = lax_degree(s, a.n_max);
      r.data["lax"] = {{"n_max", lax.n_max},
                       {"invertible_from_2", lax.invertible},
                       {"segal_d", lax.segal_d ? Json(*lax.segal_d) : Json()},
                       {"lax_degree", lax.lax_degree() ? Json(*lax.lax_degree()) : Json()}};
      r.checks.push_back({"lax_degree", {{"n_max", a.n_max}}, Verdict::Info, Json(), tl.millis()});
    }
  }
  return r;
}

Report cmd_hall(const HallArgs& a) {
  const Input in = load_input(a.input);
  Report r;
  r.command = "hall";
  r.arguments = {{"input", a.input}, {"oracle", a.oracle ? Json(*a.oracle) : Json()}};
  r.inputs.push_back(input_record(in));
  const SSet s = in.simplicial_set(3);

  Stopwatch t;
  const HallTable table = structure_constants(s);
  // monoid inputs show the identity under its own name
  std::vector<std::string> shown = table.basis;
  if (const auto* m = std::get_if<Monoid>(&in.value))
    for (auto& label : shown)
      if (label == "s[0,0](*)") label = m->elements[m->identity()];
  r.data["basis"] = shown;
  Json constants = Json::array();
  for (const auto& [k, v] : table.constants) constants.push_back({shown[k[0]], shown[k[1]], shown[k[2]], v});
  r.data["constants"] = constants;

  const AssociativityReport assoc = check_associativity(table);
  Json w;
  if (assoc.witness) {
    const auto& q = assoc.witness->abcx;
    w = {{"a", shown[q[0]]}, {"b", shown[q[1]]}, {"c", shown[q[2]]}, {"x", shown[q[3]]},
         {"lhs", assoc.witness->lhs.str()}, {"rhs", assoc.witness->rhs.str()}};
  }
  r.checks.push_back({"associativity", {}, verdict_of(assoc.ok), w, t.millis()});

  if (a.oracle) {
    const Input o = load_input(*a.oracle);
    r.inputs.push_back(input_record(o));
    const auto* m = std::get_if<Monoid>(&o.value);
    if (!m) throw InputError("hall: --oracle must be a monoid file");
    Stopwatch to;
    const bool same = same_table(table, monoid_algebra_oracle(*m));
    r.checks.push_back({"monoid_algebra_oracle", {}, verdict_of(same), Json(), to.millis()});
  }
  return r;
}

Report cmd_gale(const GaleArgs& a) {
  if (a.d < 1 || a.d > a.n || a.n > kMaxDim) throw ArgumentError("gale: need 1 <= d <= n <= 15");
  if (a.geometry && a.n > 10) throw ArgumentError("gale: --geometry needs n <= 10");
  Report r;
  r.command = "gale";
  r.arguments = {{"n", a.n}, {"d", a.d}, {"geometry", a.geometry}};
  if (a.geometry) {
    r.arguments["samples"] = a.samples;
    r.arguments["seed"] = a.seed;
  }
  r.data["lower"] = vertex_sets(gale_triangulation(a.n, a.d, TriKind::Lower).simplices);
  r.data["upper"] = vertex_sets(gale_triangulation(a.n, a.d, TriKind::Upper).simplices);
  if (!a.geometry) return r;

  {
    Stopwatch t;
    const bool ok = cross_check_gale(a.n, a.d);
    r.checks.push_back({"envelope_matches_evenness", {{"n", a.n}, {"d", a.d}}, verdict_of(ok), Json(), t.millis()});
  }
  Stopwatch t;
  const Certificate c = certify_triangulation(a.n, a.d, Sides::Both, a.samples, a.seed);
  r.data["certificate"] = {{"lower_volume", to_string(c.lower_volume)},
                           {"upper_volume", to_string(c.upper_volume)},
                           {"samples", c.samples},
                           {"seed", a.seed}};
  Json w;
  if (!c.ok) {
    Json point = Json::array();
    for (const auto& q : c.witness_point) point.push_back(to_string(q));
    w = {{"failure", c.failure}, {"side", to_string(c.failing_side)}, {"point", point},
         {"simplices", vertex_sets(c.witness_simplices)}};
  }
  r.checks.push_back({"certificate", {{"samples", a.samples}, {"seed", a.seed}}, verdict_of(c.ok), w, t.millis()});
  return r;
}

}  // namespace hsegal
