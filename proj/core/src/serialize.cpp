#include "flatkern/serialize.hpp"

#include <algorithm>

namespace flatkern {

json to_json(const QuadraticNumber& x) {
  return json{{"a", rational_to_string(x.a())}, {"b", rational_to_string(x.b())}, {"d", x.d()}};
}

QuadraticNumber quadratic_from_json(const json& j, std::optional<long> expect_d) {
  try {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d"))
      throw ParseError("quadratic number needs a, b, d");
    long d = j.at("d").get<long>();
    if (expect_d && *expect_d != d) throw ParseError("quadratic number outside the diagram context");
    return QuadraticNumber(rational_from_string(j.at("a").get<std::string>()),
                           rational_from_string(j.at("b").get<std::string>()), d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad quadratic number: ") + e.what());
  }
}

int parse_component_id(const std::string& s) {
  if (s.size() < 2 || s[0] != 'C' || !std::all_of(s.begin() + 1, s.end(), ::isdigit))
    throw ParseError("bad component id '" + s + "'");
  return std::stoi(s.substr(1));
}

int parse_saddle_id(const std::string& s) {
  if (s.size() < 2 || s[0] != 'S' || !std::all_of(s.begin() + 1, s.end(), ::isdigit))
    throw ParseError("bad saddle connection id '" + s + "'");
  return std::stoi(s.substr(1));
}

json to_json(const Prediagram& p) {
  json j;
  j["n_ends"] = p.n_ends;
  j["sigma"] = perm_cycles(p.sigma);
  json tau = json::array();
  for (int e = 0; e < p.n_ends; ++e)
    if (e < p.tau[e]) tau.push_back({e, p.tau[e]});
  j["tau"] = tau;
  std::vector<int> pos;
  for (int e = 0; e < p.n_ends; ++e)
    if (p.positive[e]) pos.push_back(e);
  j["positive"] = pos;
  return j;
}

json metric_to_json(const Metric& l) {
  json j = json::object();
  for (const auto& [s, v] : l) j[saddle_name(s)] = to_json(v);
  return j;
}

Metric metric_from_json(const json& j, long d) {
  if (!j.is_object()) throw ParseError("lengths must be an object");
  Metric l;
  for (auto it = j.begin(); it != j.end(); ++it) l[parse_saddle_id(it.key())] = quadratic_from_json(it.value(), d);
  return l;
}

json to_json(const SeparatrixDiagram& dg) {
  json j = to_json(dg.pre);
  json m = json::object();
  for (auto [a, b] : dg.matching) m[component_name(a)] = component_name(b);
  j["matching"] = m;
  j["lengths"] = metric_to_json(dg.lengths);
  j["d"] = dg.d;
  return j;
}

SeparatrixDiagram diagram_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("diagram must be an object");
    SeparatrixDiagram dg;
    auto& p = dg.pre;
    p.n_ends = j.at("n_ends").get<int>();
    if (p.n_ends < 0 || p.n_ends > 100000) throw ParseError("n_ends out of range");
    p.sigma.assign(p.n_ends, -1);
    p.tau.assign(p.n_ends, -1);
    p.positive.assign(p.n_ends, false);
    for (const auto& cyc : j.at("sigma")) {
      auto c = cyc.get<std::vector<int>>();
      if (c.empty()) throw ParseError("empty sigma cycle");
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        if (a < 0 || a >= p.n_ends || b < 0 || b >= p.n_ends || p.sigma[a] >= 0)
          throw ParseError("sigma cycles do not form a permutation");
        p.sigma[a] = b;
      }
    }
    for (const auto& pr : j.at("tau")) {
      auto c = pr.get<std::vector<int>>();
      if (c.size() != 2) throw ParseError("tau entries must be pairs");
      for (int x : c)
        if (x < 0 || x >= p.n_ends) throw ParseError("tau label out of range");
      if (p.tau[c[0]] >= 0 || p.tau[c[1]] >= 0) throw ParseError("tau pairs overlap");
      p.tau[c[0]] = c[1];
      p.tau[c[1]] = c[0];
    }
    for (int e : j.at("positive").get<std::vector<int>>()) {
      if (e < 0 || e >= p.n_ends) throw ParseError("positive label out of range");
      p.positive[e] = true;
    }
    for (int e = 0; e < p.n_ends; ++e)
      if (p.sigma[e] < 0 || p.tau[e] < 0) throw ParseError("sigma and tau must be total");
    dg.d = j.value("d", 0L);
    if (j.contains("matching"))
      for (auto it = j.at("matching").begin(); it != j.at("matching").end(); ++it)
        dg.matching[parse_component_id(it.key())] = parse_component_id(it.value().get<std::string>());
    if (j.contains("lengths")) dg.lengths = metric_from_json(j.at("lengths"), dg.d);
    return dg;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  }
}

json to_json(const Surface& s) {
  json j = to_json(s.diagram);
  json h = json::object(), t = json::object();
  for (const auto& [c, v] : s.heights) h[component_name(c)] = to_json(v);
  for (const auto& [c, v] : s.twists) t[component_name(c)] = to_json(v);
  j["heights"] = h;
  j["twists"] = t;
  return j;
}

Surface surface_from_json(const json& j) {
  auto s = Surface::with_defaults(diagram_from_json(j));
  try {
    if (j.contains("heights"))
      for (auto it = j.at("heights").begin(); it != j.at("heights").end(); ++it)
        s.heights[parse_component_id(it.key())] = quadratic_from_json(it.value(), s.diagram.d);
    if (j.contains("twists"))
      for (auto it = j.at("twists").begin(); it != j.at("twists").end(); ++it)
        s.twists[parse_component_id(it.key())] = quadratic_from_json(it.value(), s.diagram.d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad surface JSON: ") + e.what());
  }
  return s;
}

json vector_to_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

QVector vector_from_json(const json& j, long d) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  QVector v;
  for (const auto& x : j) v.push_back(quadratic_from_json(x, d));
  return v;
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"ends", x.ends}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json to_json(const StratumSignature& s) {
  return {{"kappa", s.kappa}, {"genus", s.genus}, {"n_saddle_connections", s.n_saddle_connections}};
}

json to_json(const FixedCounts& f) { return json::array({f.rho0, f.tau_rho, f.rho_m}); }

json involution_report(const Surface& s, const PrymInvolution& inv) {
  int g = stratum_signature(s.diagram.pre).genus;
  json j;
  j["rho"] = inv.rho;
  j["rho0"] = cycle_notation(inv.rho0);
  j["pi"] = cycle_notation(inv.pi);
  j["fixed_counts"] = to_json(inv.fixed);
  j["formula"] = {{"lhs", inv.fixed.total()}, {"rhs", 10 - 2 * g}, {"holds", inv.fixed.total() == 10 - 2 * g}};
  j["conjugate_of"] = inv.conjugate_of < 0 ? json(nullptr) : json(inv.conjugate_of);
  return j;
}

json homology_report(const Surface& s) {
  auto cc = chain_complex(s);
  auto b = betti_numbers(cc);
  json core = json::object();
  for (int i = 0; i < s.m(); ++i) {
    std::vector<long> v;
    for (const auto& x : cc.core_classes[i]) v.push_back(x.get_num().get_si());
    core[component_name(s.cylinders[i])] = v;
  }
  auto sig = stratum_signature(s.diagram.pre);
  return {{"betti", {b.b0, b.b1, b.b2}},
          {"genus", sig.genus},
          {"one_cells", cc.one_cells},
          {"core_classes", core},
          {"n_vertices", cc.n_vertices},
          {"n_edges", cc.n_edges},
          {"n_faces", cc.n_faces}};
}

json to_json(const DeformationVector& v) {
  std::vector<int> sup;
  for (int i : v.support) sup.push_back(i + 1);
  return {{"vector", vector_to_json(v.u)}, {"support", sup}, {"degree", v.degree}};
}

json to_json(const ClassificationResult& r, const Prediagram& base) {
  json surv = json::array();
  for (const auto& s : r.survivors) {
    std::vector<std::string> fixed;
    for (int c : s.fixed_cylinders) fixed.push_back(component_letter(base, c));
    surv.push_back({{"matching", s.tuple},
                    {"kind", kind_name(s.kind)},
                    {"rho", s.rho},
                    {"fixed_cylinders", fixed},
                    {"class", s.members},
                    {"metric", metric_to_json(s.metric)}});
  }
  json rej = json::array();
  for (const auto& x : r.rejected) {
    json e{{"matching", x.tuple}, {"reason", x.reason}};
    if (!x.duplicate_of.empty()) e["duplicate_of"] = x.duplicate_of;
    rej.push_back(e);
  }
  json counts = json::object();
  for (const auto& [k, v] : r.reason_counts()) counts[k] = v;
  counts["survivors"] = r.survivors.size();
  counts["candidates"] = r.candidates;
  return {{"survivors", surv}, {"rejected", rej}, {"counts", counts}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace flatkern
