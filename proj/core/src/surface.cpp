#include "flatkern/surface.hpp"

#include <algorithm>
#include <numeric>

namespace flatkern {

StratumSignature stratum_signature(const Prediagram& p) {
  require_valid(p);
  if (!is_stable(p)) throw TypeError("not-stable");
  StratumSignature s;
  auto sing = singularities(p);
  for (const auto& o : sing) {
    if (o.size() % 2) throw TypeError("odd orbit size");
    s.kappa.push_back(int(o.size()) / 2 - 1);
  }
  std::sort(s.kappa.rbegin(), s.kappa.rend());
  s.n_saddle_connections = p.n_ends / 2;
  // |Sigma| - ns + cylinders... faces cancel against the cross curves; chi = |Sigma| - ns
  int chi = int(sing.size()) - s.n_saddle_connections;
  s.genus = (2 - chi) / 2;
  return s;
}

bool is_connected_surface(const Prediagram& p, const Matching& m) {
  auto comps = connected_components(p);
  std::vector<int> owner(p.n_ends);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int e : comps[i].ends) owner[e] = int(i);
  std::vector<int> parent(comps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : m) parent[find(owner[a])] = find(owner[b]);
  int roots = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) roots += find(int(i)) == int(i);
  return roots <= 1;
}

Surface Surface::with_defaults(SeparatrixDiagram dg, std::vector<int> cylinders) {
  Surface s;
  if (cylinders.empty())
    for (auto [a, b] : dg.matching) cylinders.push_back(a);
  for (int c : cylinders) {
    s.heights.emplace(c, QuadraticNumber::one(dg.d));
    s.twists.emplace(c, QuadraticNumber::zero(dg.d));
  }
  s.diagram = std::move(dg);
  s.cylinders = std::move(cylinders);
  return s;
}

QuadraticNumber Surface::circumference(int i) const {
  for (const auto& c : cylinder_components(diagram.pre))
    if (c.id == cylinders[i]) return component_length(diagram.pre, diagram.lengths, diagram.d, c);
  throw std::out_of_range("no cylinder " + component_name(cylinders[i]));
}

QVector Surface::circumferences() const {
  std::map<int, CylinderComponent> comps;
  for (auto& c : cylinder_components(diagram.pre)) comps[c.id] = c;
  QVector out;
  for (int id : cylinders) out.push_back(component_length(diagram.pre, diagram.lengths, diagram.d, comps.at(id)));
  return out;
}

ValidationReport validate(const Surface& s) {
  auto r = validate(s.diagram);
  auto bad = [&](std::string k, std::vector<int> e) { r.violations.push_back({std::move(k), std::move(e)}); };
  std::vector<int> sorted = s.cylinders;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> keys;
  for (auto [a, b] : s.diagram.matching) keys.push_back(a);
  if (sorted != keys) bad("cylinder-order-mismatch", {});
  for (int c : s.cylinders) {
    auto h = s.heights.find(c);
    if (h == s.heights.end() || h->second.d() != s.diagram.d || h->second.sign() <= 0) bad("height-nonpositive", {c});
    auto t = s.twists.find(c);
    if (t == s.twists.end() || t->second.d() != s.diagram.d) bad("twist-missing", {c});
  }
  return r;
}

ChainComplexData chain_complex(const Surface& s) {
  const auto& p = s.diagram.pre;
  require_valid(p);
  if (!is_stable(p)) throw TypeError("not-stable");
  if (!is_connected_surface(p, s.diagram.matching)) throw InvariantError("disconnected");
  auto sc = saddle_connections(p);
  auto vof = singularity_of(p);
  std::map<int, CylinderComponent> comps;
  for (auto& c : cylinder_components(p)) comps[c.id] = c;
  std::map<int, std::size_t> col;
  for (std::size_t i = 0; i < sc.size(); ++i) col[sc[i]] = i;

  ChainComplexData cc;
  cc.n_vertices = singularities(p).size();
  cc.n_faces = s.cylinders.size();
  cc.n_edges = sc.size() + cc.n_faces;
  for (int e : sc) cc.one_cells.push_back(saddle_name(e));
  for (int c : s.cylinders) cc.one_cells.push_back("cross:" + component_name(c));

  cc.boundary1.assign(cc.n_vertices, RVector(cc.n_edges, Rational(0)));
  cc.boundary2.assign(cc.n_edges, RVector(cc.n_faces, Rational(0)));
  // saddle connection oriented from its positive end to its negative end
  for (std::size_t i = 0; i < sc.size(); ++i) {
    int e = sc[i], plus = p.positive[e] ? e : p.tau[e];
    cc.boundary1[vof[p.tau[plus]]][i] += 1;
    cc.boundary1[vof[plus]][i] -= 1;
  }
  for (std::size_t j = 0; j < s.cylinders.size(); ++j) {
    const auto& bottom = comps.at(s.cylinders[j]);
    const auto& top = comps.at(s.diagram.matching.at(s.cylinders[j]));
    RVector b(cc.n_edges, Rational(0)), t(cc.n_edges, Rational(0));
    for (int e : bottom.edges) b[col[std::min(e, p.tau[e])]] += 1;
    for (int e : top.edges) t[col[std::min(e, p.tau[e])]] += 1;
    // cross curve from the start of the bottom to the start of the top
    std::size_t x = sc.size() + j;
    cc.boundary1[vof[top.edges[0]]][x] += 1;
    cc.boundary1[vof[bottom.edges[0]]][x] -= 1;
    for (std::size_t k = 0; k < cc.n_edges; ++k) cc.boundary2[k][j] = b[k] - t[k];
    cc.core_classes.push_back(std::move(b));
    cc.top_classes.push_back(std::move(t));
  }
  return cc;
}

Betti betti_numbers(const ChainComplexData& cc) {
  std::size_t r1 = rank(cc.boundary1, cc.n_edges);
  std::size_t r2 = rank(cc.boundary2, cc.n_faces);
  return {cc.n_vertices - r1, cc.n_edges - r1 - r2, cc.n_faces - r2};
}

std::vector<std::pair<std::string, Period>> periods(const Surface& s) {
  std::vector<std::pair<std::string, Period>> out;
  long d = s.diagram.d;
  for (int e : saddle_connections(s.diagram.pre))
    out.push_back({saddle_name(e), {s.diagram.lengths.at(e), QuadraticNumber::zero(d)}});
  for (int c : s.cylinders) out.push_back({"cross:" + component_name(c), {s.twists.at(c), s.heights.at(c)}});
  return out;
}

}  // namespace flatkern
