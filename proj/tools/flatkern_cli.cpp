// flatkern: batch front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 invariant violation in the input, 2 parse/usage error.

#include "flatkern/presets.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace flatkern;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

bool is_preset_id(const std::string& s) {
  for (const auto& id : preset_ids())
    if (id == s) return true;
  return false;
}

// a preset, a preset file, or a bare diagram/surface file
struct Input {
  std::string name;
  PresetEntry preset;
  bool from_preset = false;
  std::optional<Surface> surface;  // bare diagram/surface files
};

Input load_input(const std::string& arg) {
  Input in;
  in.name = arg;
  if (is_preset_id(arg)) {
    in.preset = load_preset(arg);
    in.from_preset = true;
    return in;
  }
  json j = read_json_file(arg);
  if (j.contains("diagram")) {
    in.preset = preset_from_json(j);
    in.from_preset = true;
    return in;
  }
  in.surface = surface_from_json(j);
  in.preset.id = arg;
  in.preset.diagram = in.surface->diagram;
  in.preset.cylinders = in.surface->cylinders;
  in.preset.metrics["default"] = {in.surface->diagram.d, in.surface->diagram.lengths};
  return in;
}

Surface select_surface(const Input& in, const std::string& metric) {
  if (!in.preset.has_matching()) throw InvariantError(in.name + " has no matching");
  Surface s = in.surface ? *in.surface : in.preset.surface("unit-rational");
  if (metric.empty()) return s;
  NamedMetric nm;
  if (auto it = in.preset.metrics.find(metric); it != in.preset.metrics.end()) {
    nm = it->second;
  } else {
    if (!std::ifstream(metric)) throw UsageError("unknown metric '" + metric + "'");
    json j = read_json_file(metric);
    nm.d = j.value("d", 0L);
    nm.lengths = metric_from_json(j.at("lengths"), nm.d);
  }
  SeparatrixDiagram dg = s.diagram;
  dg.d = nm.d;
  dg.lengths = nm.lengths;
  auto out = Surface::with_defaults(dg, s.cylinders);
  // keep explicit heights of a surface file when the context matches
  if (in.surface && in.surface->diagram.d == nm.d) {
    out.heights = in.surface->heights;
    out.twists = in.surface->twists;
  }
  return out;
}

void require_valid_surface(const Surface& s) {
  auto r = validate(s);
  if (!r.ok()) throw InvariantError("invalid diagram: " + r.violations[0].kind);
}

json base_report(const std::string& verb, const std::string& input) {
  return {{"schema", kSchema}, {"verb", verb}, {"input", input}};
}

std::string qv_text(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string kappa_text(const std::vector<int>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

// ---- verbs ---------------------------------------------------------------

int run_check(const std::string& arg, const std::string& metric, bool summary) {
  Input in = load_input(arg);
  json r = base_report("check", arg);
  const auto& p = in.preset.diagram.pre;
  auto val = validate(p);
  bool ok = val.ok();
  json comps = {{"positive", json::array()}, {"negative", json::array()}};
  std::string text;
  if (ok) {
    for (const auto& c : cylinder_components(p)) comps[c.positive ? "positive" : "negative"].push_back(component_name(c.id));
    r["cylinder_components"] = comps;
    r["connected_components"] = connected_components(p).size();
    bool stable = is_stable(p);
    r["stable"] = stable;
    if (stable) {
      auto sig = stratum_signature(p);
      r["stratum"] = to_json(sig);
      json types = json::array();
      for (const auto& f : component_type(p).components) types.push_back(f);
      r["types"] = types;
      text += "stratum H" + kappa_text(sig.kappa) + ", genus " + std::to_string(sig.genus) + "\n";
    }
    if (in.preset.has_matching()) {
      Surface s = select_surface(in, metric);
      auto sv = validate(s);
      val.violations.insert(val.violations.end(), sv.violations.begin(), sv.violations.end());
      r["connected_surface"] = is_connected_surface(p, s.diagram.matching);
      r["matching_tuple"] = cylinder_components(p).size() <= 52 ? json(matching_tuple(p, s.diagram.matching)) : json(nullptr);
      if (sv.ok()) {
        r["circumferences"] = vector_to_json(s.circumferences());
        r["d"] = s.diagram.d;
        text += "circumferences " + qv_text(s.circumferences()) + "\n";
      }
      if (in.preset.involution && sv.ok() && stable) {
        auto chk = check_involution(s, *in.preset.involution);
        r["involution"] = {{"structural", chk.structural},
                           {"transports_matching", chk.transports_matching},
                           {"preserves_metric", chk.preserves_metric},
                           {"formula", chk.formula}};
        if (!chk.ok()) val.violations.push_back({"involution-invalid", {}});
      }
    }
  }
  r["validation"] = to_json(val);
  ok = val.ok();
  if (summary) {
    std::cout << arg << ": " << (ok ? "valid" : "INVALID") << "\n" << text;
    for (const auto& v : val.violations) std::cout << "  violation " << v.kind << "\n";
  } else {
    std::cout << dump_canonical(r);
  }
  return ok ? 0 : 1;
}

int run_enumerate(const std::string& base_arg, int fixed, const std::string& kind, bool all_involutions, bool summary) {
  Input in = load_input(base_arg);
  SearchSpec spec;
  spec.base = in.preset.diagram.pre;
  require_valid(spec.base);
  if (!is_stable(spec.base)) throw InvariantError("base prediagram is not stable");
  if (!all_involutions) spec.involution = in.preset.involution;
  spec.required_fixed_cylinders = fixed;
  if (kind == "first") spec.kind_filter = Kind::First;
  else if (kind == "second") spec.kind_filter = Kind::Second;
  else if (!kind.empty()) throw UsageError("--kind must be first or second");
  auto res = enumerate_matchings(spec);
  json r = base_report("enumerate", base_arg);
  r["fixed_cylinders"] = fixed;
  r["kind_filter"] = kind.empty() ? json(nullptr) : json(kind);
  r["involution"] = spec.involution ? json("designated") : json("all");
  r["classification"] = to_json(res, spec.base);
  if (summary) {
    std::cout << res.candidates << " candidates, " << res.survivors.size() << " classes\n";
    for (const auto& s : res.survivors) std::cout << "  (" << s.tuple << ") " << kind_name(s.kind) << " kind\n";
    for (const auto& [k, v] : res.reason_counts()) std::cout << "  rejected " << k << ": " << v << "\n";
  } else {
    std::cout << dump_canonical(r);
  }
  return 0;
}

int run_prym_scan(const std::string& arg, const std::string& metric, bool summary) {
  Input in = load_input(arg);
  Surface s = select_surface(in, metric);
  require_valid_surface(s);
  if (!is_stable(s.diagram.pre)) throw InvariantError("not-stable");
  if (!is_connected_surface(s.diagram.pre, s.diagram.matching)) throw InvariantError("disconnected");
  auto invs = find_prym_involutions(s);
  json r = base_report("prym-scan", arg);
  json list = json::array();
  std::vector<int> parity;
  for (const auto& inv : invs) {
    list.push_back(involution_report(s, inv));
    parity.push_back(inv.fixed.rho_m);
  }
  r["involutions"] = list;
  r["fixed_cylinder_counts"] = parity;
  r["genus"] = stratum_signature(s.diagram.pre).genus;
  if (summary) {
    std::cout << invs.size() << " involution(s)\n";
    for (const auto& inv : invs)
      std::cout << "  pi " << cycle_notation(inv.pi) << " fixed (" << inv.fixed.rho0 << "," << inv.fixed.tau_rho << ","
                << inv.fixed.rho_m << ")" << (inv.conjugate_of >= 0 ? " conjugate of #" + std::to_string(inv.conjugate_of) : "")
                << "\n";
  } else {
    std::cout << dump_canonical(r);
  }
  return 0;
}

std::vector<Rational> to_rationals(const std::vector<int>& k) { return {k.begin(), k.end()}; }

int run_property_p(const std::string& arg, const std::string& metric, const std::string& locus, bool summary) {
  Input in = load_input(arg);
  Surface s = select_surface(in, metric);
  require_valid_surface(s);
  if (!is_stable(s.diagram.pre)) throw InvariantError("not-stable");
  if (!is_connected_surface(s.diagram.pre, s.diagram.matching)) throw InvariantError("disconnected");
  std::string kind = locus.empty() ? in.preset.locus : locus;
  TwistModel model;
  json model_json;
  if (kind == "full") {
    model = make_twist_model(s, LocusKind::Full);
    model_json["locus"] = "full";
  } else if (kind == "prym") {
    Perm rho;
    if (in.preset.involution) {
      rho = *in.preset.involution;
      if (!check_involution(s, rho).ok()) throw InvariantError("designated involution does not fit this metric");
    } else {
      auto invs = find_prym_involutions(s);
      if (invs.empty()) throw InvariantError("no Prym involution");
      rho = invs[0].rho;
    }
    auto pi = cylinder_permutation(s, rho);
    model = make_twist_model(s, LocusKind::Prym, pi);
    model_json["locus"] = "prym";
    model_json["pi"] = cycle_notation(pi);
  } else if (kind.rfind("explicit:", 0) == 0) {
    json j = read_json_file(kind.substr(9));
    std::vector<QVector> basis;
    for (const auto& v : j.at("basis")) basis.push_back(vector_from_json(v, s.diagram.d));
    model = make_twist_model(s, LocusKind::Explicit, {}, basis);
    model_json["locus"] = "explicit";
  } else {
    throw UsageError("--locus must be full, prym or explicit:<path>");
  }
  model_json["m"] = model.m;
  model_json["d"] = model.d;
  model_json["circumferences"] = vector_to_json(model.circumferences);
  auto field = field_ratio_generators(model.circumferences);
  model_json["ratio_span_dimension"] = field.dimension;

  json r = base_report("property-p", arg);
  r["model"] = model_json;
  json kf = json::array(), kk = json::array();
  for (const auto& v : model.k_full) kf.push_back(vector_to_json(v));
  for (const auto& v : model.k) kk.push_back(vector_to_json(v));
  r["k_full_basis"] = kf;
  r["k_basis"] = kk;
  auto verdict = has_property_p(model);
  json mins = json::array();
  for (const auto& u : verdict.minimal) mins.push_back(to_json(u));
  r["minimal_deformations"] = mins;
  r["property_p"] = {{"holds", verdict.holds},
                     {"reason", verdict.reason},
                     {"max_degree", verdict.max_degree},
                     {"witness", verdict.witness ? to_json(*verdict.witness) : json(nullptr)}};

  // documented certificates, re-derived
  auto c = model.circumferences;
  json certs = json::object();
  for (const auto& [key, rows] : in.preset.certificates) {
    std::vector<QVector> vs;
    bool sized = true;
    for (const auto& row : rows) {
      if (int(row.size()) != model.m) sized = false;
      else vs.push_back(inverse_circumference_vector(to_rationals(row), c));
    }
    if (!sized) continue;
    json entry;
    if (key == "k_full" || key == "k_prym") {
      const auto& space = key == "k_full" ? model.k_full : model.k;
      json items = json::array();
      for (const auto& v : vs) {
        bool in_k = in_span(v, space, model.d);
        items.push_back({{"vector", vector_to_json(v)},
                         {"in_space", in_k},
                         {"minimal", in_k && is_minimal(v, space, model.d)},
                         {"degree", degree(v)}});
      }
      entry = items;
    } else if (key == "transverse") {
      try {
        auto rb = rank_lower_bound(vs, model.k_full, model.d, model.m);
        entry = {{"degrees", rb.degrees}, {"rank_lower_bound", rb.sum_of_degrees}, {"inequality", "rank >= sum of degrees"}};
      } catch (const RankInputError& e) {
        entry = {{"error", e.what()}};
      }
    } else if (key == "closure") {
      auto rb = closure_certificate(vs, model.k_full, model.d, model.m);
      bool members = true;
      for (const auto& v : vs) members = members && in_span(v, model.k_full, model.d);
      entry = {{"degrees", rb.degrees},
               {"in_k_full", members},
               {"dim_k_full", rb.dim_k_full},
               {"dim_closure", rb.dim_closure},
               {"rank_lower_bound", rb.closure_bound},
               {"inequality", "k + " + std::to_string(rb.dim_k_full) + " >= " + std::to_string(rb.dim_closure)}};
    }
    certs[key] = entry;
  }
  r["certificates"] = certs;
  if (summary) {
    std::cout << "dim K_full " << model.k_full.size() << ", dim K " << model.k.size() << "\n";
    std::cout << "property P: " << (verdict.holds ? "holds" : "fails") << " (" << verdict.reason << ")\n";
    if (verdict.witness) std::cout << "  witness " << qv_text(verdict.witness->u) << " degree " << verdict.witness->degree << "\n";
  } else {
    std::cout << dump_canonical(r);
  }
  return 0;
}

int run_homology(const std::string& arg, const std::string& metric, bool summary) {
  Input in = load_input(arg);
  Surface s = select_surface(in, metric);
  require_valid_surface(s);
  json r = base_report("homology", arg);
  r["homology"] = homology_report(s);
  if (summary) {
    auto b = r["homology"]["betti"];
    std::cout << "betti " << b[0] << " " << b[1] << " " << b[2] << ", genus " << r["homology"]["genus"] << "\n";
  } else {
    std::cout << dump_canonical(r);
  }
  return 0;
}

int run_presets(bool summary) {
  json r = base_report("presets", "");
  json list = json::array();
  for (const auto& id : preset_ids()) {
    auto p = load_preset(id);
    json e{{"id", id},
           {"description", p.description},
           {"locus", p.locus},
           {"stratum", to_json(p.stratum)},
           {"cylinders", p.cylinders.size()}};
    std::vector<std::string> ms;
    for (const auto& [k, v] : p.metrics) ms.push_back(k);
    e["metrics"] = ms;
    list.push_back(e);
    if (summary) std::cout << id << "  " << p.description << "\n";
  }
  r["presets"] = list;
  r["directory"] = preset_directory().string();
  if (!summary) std::cout << dump_canonical(r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatkern: separatrix diagrams, Prym involutions and twist spaces"};
  app.require_subcommand(1, 1);
  bool summary = false;
  app.add_flag("--summary", summary, "human-readable output");
  app.add_flag("--json", "JSON output (default)");

  std::string input, metric, locus, base, kind;
  int fixed = 2;
  bool all_inv = false;

  auto* check = app.add_subcommand("check", "validate a diagram and report its stratum");
  check->add_option("input", input, "preset id or JSON path")->required();
  check->add_option("--metric", metric, "metric id or JSON path");

  auto* enumerate = app.add_subcommand("enumerate", "classify matchings on a base prediagram");
  enumerate->add_option("--base", base, "preset id or JSON path")->required();
  enumerate->add_option("--fixed-cylinders", fixed, "exact number of fixed cylinders");
  enumerate->add_option("--kind", kind, "first or second");
  enumerate->add_flag("--all-involutions", all_inv, "ignore the designated involution");

  auto* scan = app.add_subcommand("prym-scan", "find combinatorial Prym involutions");
  scan->add_option("input", input)->required();
  scan->add_option("--metric", metric);

  auto* prop = app.add_subcommand("property-p", "twist spaces, minimal deformations and property P");
  prop->add_option("input", input)->required();
  prop->add_option("--metric", metric);
  prop->add_option("--locus", locus, "full, prym or explicit:<path>");

  auto* hom = app.add_subcommand("homology", "CW complex and homology of the glued surface");
  hom->add_option("input", input)->required();
  hom->add_option("--metric", metric);

  auto* pre = app.add_subcommand("presets", "list bundled presets");

  for (auto* sc : {check, enumerate, scan, prop, hom, pre}) {
    sc->add_flag("--summary", summary, "human-readable output");
    sc->add_flag("--json", "JSON output (default)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(input, metric, summary);
    if (enumerate->parsed()) return run_enumerate(base, fixed, kind, all_inv, summary);
    if (scan->parsed()) return run_prym_scan(input, metric, summary);
    if (prop->parsed()) return run_property_p(input, metric, locus, summary);
    if (hom->parsed()) return run_homology(input, metric, summary);
    if (pre->parsed()) return run_presets(summary);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownPreset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const TypeError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const ContextError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
