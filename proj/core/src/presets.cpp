#include "flatkern/presets.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace flatkern {

namespace {

QuadraticNumber q(long a, long b = 0, long d = 2) { return {Rational(a), Rational(b), b == 0 && d == 0 ? 0 : d}; }

std::vector<std::vector<int>> as_rows(std::initializer_list<std::vector<int>> l) { return {l}; }

// saddle connections x1 y1 x2 y2 x3 y3 x4 y4 are S0 S2 ... S14
Metric prym_base_metric(const QuadraticNumber& p, const QuadraticNumber& qq, const QuadraticNumber& r,
                        const QuadraticNumber& s) {
  return {{0, p}, {2, qq}, {4, p}, {6, qq}, {8, r}, {10, s}, {12, r}, {14, s}};
}

Metric unit_metric(const Prediagram& p) {
  Metric l;
  for (int s : saddle_connections(p)) l[s] = QuadraticNumber::one(0);
  return l;
}

// all ones when balanced, otherwise the symmetric simplex witness
Metric unit_rational(const Prediagram& p, const Matching& m, const std::optional<Perm>& rho) {
  SeparatrixDiagram dg{p, m, unit_metric(p), 0};
  if (validate(dg).ok()) return dg.lengths;
  auto w = rho ? metric_feasible(p, m, *rho) : metric_feasible(p, m);
  if (!w) throw InvariantError("preset has no rational metric");
  return *w;
}

Perm pick_involution(const Surface& s, const Perm& want_pi) {
  for (const auto& inv : find_prym_involutions(s))
    if (inv.pi == want_pi) return inv.rho;
  throw InvariantError("no involution with the documented cylinder permutation");
}

PresetEntry from_model(const std::string& id, const std::string& desc, const CylinderModel& model,
                       const QVector& golden, const std::string& locus, std::optional<Perm> pi) {
  auto built = build_from_cylinders(model, golden, 2);
  PresetEntry e;
  e.id = id;
  e.description = desc;
  e.cylinders = built.cylinders;
  e.locus = locus;
  e.metrics["golden-irrational"] = {2, built.diagram.lengths};
  if (pi) e.involution = pick_involution(Surface::with_defaults(built.diagram, built.cylinders), *pi);
  e.diagram = built.diagram;
  e.diagram.d = 0;
  e.diagram.lengths = unit_rational(e.diagram.pre, e.diagram.matching, e.involution);
  e.metrics["unit-rational"] = {0, e.diagram.lengths};
  e.stratum = stratum_signature(e.diagram.pre);
  return e;
}

struct SurfaceSpec {
  std::string tuple;
  std::string order;  // letters of cylinders 1..m
  QuadraticNumber p, q, r, s;
  std::vector<int> k_prym;
  std::vector<std::vector<int>> pair;
  const char* pair_key;
};

const std::vector<SurfaceSpec>& surface_specs() {
  static const std::vector<SurfaceSpec> specs{
      {"fabced", "bcdefa", q(2, -1), q(0, 1), q(1), q(1), {1, 0, -1, -1, 0, 1},
       {{1, 0, 0, 0, -1, 1}, {0, 1, -1, -1, 0, 0}}, "transverse"},
      {"faecdb", "cedfab", q(1), q(0, 1), q(1), q(0, 1), {1, -1, 0, 1, -2, -1},
       {{1, -1, 0, 0, -1, 0}, {0, 0, 1, -1, 0, 1}}, "transverse"},
      {"cdefab", "bfedca", q(1), q(0, 1), q(1), q(0, 1), {1, 0, 1, 1, -2, 1},
       {{1, 0, 0, 0, -1, 1}, {0, 1, -1, -1, 0, 0}}, "transverse"},
      {"cafbed", "facbde", q(0, 1), q(2), q(1), q(1), {0, 1, -1, 0, 1, 1},
       {{1, 0, 0, 0, -1, -1}, {0, 1, -1, 1, 0, 0}}, "transverse"},
      {"cfeadb", "dfcabe", q(1, 1), q(0, 1), q(1), q(0, 1), {1, 0, -1, 0, 1, 1},
       {{1, 0, 0, -1, 0, 1}, {0, 1, 0, -1, -1, 1}, {0, 0, 1, -1, -1, 0}}, "closure"},
  };
  return specs;
}

}  // namespace

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids{"genus2",         "prym22odd",      "prym211",
                                            "prym1111-base",  "prym1111-s1",    "prym1111-s2",
                                            "prym1111-s3",    "prym1111-s4",    "prym1111-s5"};
  return ids;
}

Prediagram prym_base_prediagram() {
  Prediagram p;
  p.n_ends = 16;
  p.sigma.resize(16);
  p.tau.resize(16);
  p.positive.resize(16);
  for (int v = 0; v < 4; ++v) {
    int b = 4 * v;
    // 0 -> 3 -> 2 -> 1 -> 0 around each vertex
    p.sigma[b + 0] = b + 3;
    p.sigma[b + 3] = b + 2;
    p.sigma[b + 2] = b + 1;
    p.sigma[b + 1] = b + 0;
    p.tau[b + 0] = b + 1;
    p.tau[b + 1] = b + 0;
    p.tau[b + 2] = b + 3;
    p.tau[b + 3] = b + 2;
    bool even = v % 2 == 0;
    p.positive[b + 0] = p.positive[b + 2] = even;
    p.positive[b + 1] = p.positive[b + 3] = !even;
  }
  return p;
}

Perm prym_base_involution() {
  Perm r(16);
  for (int v = 0; v < 4; ++v)
    for (int k = 0; k < 4; ++k) r[4 * v + k] = 4 * (v ^ 1) + k;
  return r;
}

BuiltDiagram hyperelliptic_fixture() {
  // p1 p2 p3 q1 q2 q3
  CylinderModel m{{{0}, {3, 4}, {1, 2}, {5}}, {{3}, {0, 1}, {4, 5}, {2}}, 6};
  return build_from_cylinders(m, {q(1), q(0, 1), q(1), q(1), q(0, 1), q(1)}, 2);
}

PresetEntry build_preset(const std::string& id) {
  if (id == "genus2") {
    // A B C D
    CylinderModel m{{{0}, {3, 2}, {1}}, {{2}, {1, 0}, {3}}, 4};
    auto e = from_model(id, "three-cylinder stable decomposition in H(1,1)", m, {q(1), q(0, 1), q(1), q(0, 1)}, "full",
                        Perm{0, 1, 2});
    e.fixed_counts = FixedCounts{0, 0, 3};
    e.certificates["k_full"] = as_rows({{1, -1, 1}});
    return e;
  }
  if (id == "prym22odd") {
    // s1 s2 s3 s4 sA sB
    CylinderModel m{{{0}, {4, 1, 5}, {2}, {3}}, {{1}, {2, 0, 3}, {4}, {5}}, 6};
    auto e = from_model(id, "four-cylinder model in the Prym locus of H(2,2)odd", m,
                        {q(1), q(1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)}, "prym", Perm{0, 1, 3, 2});
    e.fixed_counts = FixedCounts{0, 0, 2};
    e.certificates["k_prym"] = as_rows({{1, -1, 1, 1}});
    return e;
  }
  if (id == "prym211") {
    // s1 .. s7
    CylinderModel m{{{0}, {1, 2}, {3}, {4, 5}, {6}}, {{1}, {0, 3}, {4}, {2, 6}, {5}}, 7};
    auto e = from_model(id, "five-cylinder model in the Prym locus of H(2,1,1)", m,
                        {q(1), q(1), q(0, 1), q(0, 1), q(0, 1), q(1), q(1)}, "prym", Perm{4, 3, 2, 1, 0});
    e.fixed_counts = fixed_point_count(e.surface(), *e.involution);
    e.certificates["k_prym"] = as_rows({{1, -1, 2, -1, 1}});
    e.certificates["closure"] = as_rows({{1, -1, 1, 0, 0}, {0, 0, 1, -1, 1}});
    return e;
  }
  if (id == "prym1111-base") {
    PresetEntry e;
    e.id = id;
    e.description = "prediagram of the Prym locus of H(1,1,1,1) with its designated involution";
    e.diagram.pre = prym_base_prediagram();
    e.locus = "prym";
    e.involution = prym_base_involution();
    e.stratum = stratum_signature(e.diagram.pre);
    return e;
  }
  for (int k = 1; k <= 5; ++k) {
    if (id != "prym1111-s" + std::to_string(k)) continue;
    const auto& sp = surface_specs()[k - 1];
    PresetEntry e;
    e.id = id;
    e.description = "Prym(1,1,1,1) surface " + std::to_string(k) + ", matching (" + sp.tuple + ")";
    e.diagram.pre = prym_base_prediagram();
    e.diagram.matching = matching_from_tuple(e.diagram.pre, sp.tuple);
    e.locus = "prym";
    e.involution = prym_base_involution();
    e.matching_tuple = sp.tuple;
    std::vector<int> pos;
    for (const auto& c : cylinder_components(e.diagram.pre))
      if (c.positive) pos.push_back(c.id);
    for (char ch : sp.order) e.cylinders.push_back(pos.at(ch - 'a'));
    e.metrics["golden-irrational"] = {2, prym_base_metric(sp.p, sp.q, sp.r, sp.s)};
    e.diagram.lengths = unit_rational(e.diagram.pre, e.diagram.matching, e.involution);
    e.metrics["unit-rational"] = {0, e.diagram.lengths};
    e.stratum = stratum_signature(e.diagram.pre);
    e.fixed_counts = FixedCounts{0, 0, 2};
    e.certificates["k_prym"] = as_rows({sp.k_prym});
    e.certificates[sp.pair_key] = sp.pair;
    return e;
  }
  throw UnknownPreset("unknown preset '" + id + "'");
}

Surface PresetEntry::surface(const std::string& metric) const {
  if (!has_matching()) throw InvariantError("preset " + id + " is a bare prediagram");
  auto it = metrics.find(metric);
  if (it == metrics.end()) throw UnknownPreset("preset " + id + " has no metric '" + metric + "'");
  SeparatrixDiagram dg = diagram;
  dg.d = it->second.d;
  dg.lengths = it->second.lengths;
  return Surface::with_defaults(dg, cylinders);
}

json to_json(const PresetEntry& p) {
  json j;
  j["schema"] = kSchema;
  j["id"] = p.id;
  j["description"] = p.description;
  j["diagram"] = to_json(p.diagram);
  std::vector<std::string> cyl;
  for (int c : p.cylinders) cyl.push_back(component_name(c));
  j["cylinders"] = cyl;
  j["locus"] = p.locus;
  j["involution"] = p.involution ? json(*p.involution) : json(nullptr);
  json ms = json::object();
  for (const auto& [k, v] : p.metrics) ms[k] = {{"d", v.d}, {"lengths", metric_to_json(v.lengths)}};
  j["metrics"] = ms;
  j["stratum"] = to_json(p.stratum);
  j["fixed_counts"] = p.fixed_counts ? to_json(*p.fixed_counts) : json(nullptr);
  j["matching_tuple"] = p.matching_tuple.empty() ? json(nullptr) : json(p.matching_tuple);
  json c = json::object();
  for (const auto& [k, v] : p.certificates) c[k] = v;
  j["certificates"] = c;
  return j;
}

PresetEntry preset_from_json(const json& j) {
  try {
    PresetEntry p;
    p.id = j.at("id").get<std::string>();
    p.description = j.value("description", "");
    p.diagram = diagram_from_json(j.at("diagram"));
    for (const auto& c : j.at("cylinders")) p.cylinders.push_back(parse_component_id(c.get<std::string>()));
    p.locus = j.value("locus", "full");
    if (j.contains("involution") && !j.at("involution").is_null()) p.involution = j.at("involution").get<Perm>();
    for (auto it = j.at("metrics").begin(); it != j.at("metrics").end(); ++it) {
      long d = it.value().at("d").get<long>();
      p.metrics[it.key()] = {d, metric_from_json(it.value().at("lengths"), d)};
    }
    const auto& st = j.at("stratum");
    p.stratum = {st.at("kappa").get<std::vector<int>>(), st.at("genus").get<int>(),
                 st.at("n_saddle_connections").get<int>()};
    if (j.contains("fixed_counts") && !j.at("fixed_counts").is_null()) {
      auto f = j.at("fixed_counts").get<std::vector<int>>();
      if (f.size() != 3) throw ParseError("fixed_counts must have three entries");
      p.fixed_counts = FixedCounts{f[0], f[1], f[2]};
    }
    if (j.contains("matching_tuple") && !j.at("matching_tuple").is_null())
      p.matching_tuple = j.at("matching_tuple").get<std::string>();
    if (j.contains("certificates"))
      for (auto it = j.at("certificates").begin(); it != j.at("certificates").end(); ++it)
        p.certificates[it.key()] = it.value().get<std::vector<std::vector<int>>>();
    return p;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad preset JSON: ") + e.what());
  }
}

std::filesystem::path preset_directory() {
  if (const char* env = std::getenv("FLATKERN_PRESETS"); env && *env) return env;
  std::filesystem::path build = FLATKERN_PRESET_BUILD_DIR;
  if (std::filesystem::exists(build)) return build;
  return FLATKERN_PRESET_INSTALL_DIR;
}

PresetEntry load_preset(const std::string& id) {
  bool known = false;
  for (const auto& k : preset_ids()) known = known || k == id;
  if (!known) throw UnknownPreset("unknown preset '" + id + "'");
  auto path = preset_directory() / (id + ".json");
  std::ifstream in(path);
  if (!in) throw UnknownPreset("preset file missing: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return preset_from_json(j);
}

}  // namespace flatkern
