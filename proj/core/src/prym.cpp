#include "flatkern/prym.hpp"

#include <algorithm>

namespace flatkern {

SeparatrixDiagram reversed_diagram(const SeparatrixDiagram& dg) {
  SeparatrixDiagram r = dg;
  r.pre = reversal(dg.pre);
  r.matching.clear();
  for (auto [a, b] : dg.matching) r.matching[b] = a;
  return r;
}

bool is_structural_involution(const Prediagram& p, const Perm& rho) {
  if (int(rho.size()) != p.n_ends || !is_permutation(rho)) return false;
  for (int e = 0; e < p.n_ends; ++e) {
    if (rho[p.sigma[e]] != p.sigma[rho[e]]) return false;
    if (rho[p.tau[e]] != p.tau[rho[e]]) return false;
    if (p.positive[rho[e]] == p.positive[e]) return false;
    if (rho[rho[e]] != e) return false;
  }
  return true;
}

Perm singularity_permutation(const Prediagram& p, const Perm& rho) {
  auto v = singularity_of(p);
  auto sing = singularities(p);
  Perm r(sing.size());
  for (std::size_t i = 0; i < sing.size(); ++i) r[i] = v[rho[sing[i][0]]];
  return r;
}

Perm cylinder_permutation(const Surface& s, const Perm& rho) {
  const auto& p = s.diagram.pre;
  auto comp = component_of(p);
  std::map<int, int> index;
  for (int i = 0; i < s.m(); ++i) index[s.cylinders[i]] = i;
  Perm pi(s.m());
  for (int i = 0; i < s.m(); ++i) {
    int pos = s.cylinders[i];
    int neg = s.diagram.matching.at(pos);
    // rho sends the top (negative) to a positive component
    int img = comp[rho[neg]];
    auto it = index.find(img);
    if (it == index.end()) throw InvariantError("rho does not map cylinders to cylinders");
    pi[i] = it->second;
    // and the bottom to that cylinder's top
    if (s.diagram.matching.at(img) != comp[rho[pos]]) throw InvariantError("rho does not transport the matching");
  }
  return pi;
}

FixedCounts fixed_point_count(const Surface& s, const Perm& rho) {
  const auto& p = s.diagram.pre;
  if (!is_structural_involution(p, rho)) throw InvariantError("malformed rho");
  FixedCounts f;
  auto r0 = singularity_permutation(p, rho);
  for (std::size_t i = 0; i < r0.size(); ++i) f.rho0 += r0[i] == int(i);
  for (int e : saddle_connections(p)) f.tau_rho += rho[e] == p.tau[e];
  auto pi = cylinder_permutation(s, rho);
  for (std::size_t i = 0; i < pi.size(); ++i) f.rho_m += pi[i] == int(i);
  return f;
}

InvolutionCheck check_involution(const Surface& s, const Perm& rho, bool check_metric) {
  InvolutionCheck c;
  const auto& p = s.diagram.pre;
  c.structural = is_structural_involution(p, rho);
  if (!c.structural) return c;
  auto rev = reversed_diagram(s.diagram);
  c.transports_matching = transports(s.diagram, rev, rho, false);
  c.preserves_metric = !check_metric || transports(s.diagram, rev, rho, true);
  if (!c.transports_matching) return c;
  int g = stratum_signature(p).genus;
  c.formula = fixed_point_count(s, rho).total() == 10 - 2 * g;
  return c;
}

PrymInvolution describe_involution(const Surface& s, const Perm& rho) {
  PrymInvolution inv;
  inv.rho = rho;
  inv.rho0 = singularity_permutation(s.diagram.pre, rho);
  inv.pi = cylinder_permutation(s, rho);
  inv.fixed = fixed_point_count(s, rho);
  return inv;
}

std::vector<PrymInvolution> find_prym_involutions(const Surface& s) {
  const auto& p = s.diagram.pre;
  auto rev = reversed_diagram(s.diagram);
  std::vector<Perm> found;
  for (auto& rho : all_isomorphisms(p, rev.pre)) {
    if (!is_structural_involution(p, rho)) continue;
    if (!transports(s.diagram, rev, rho, true)) continue;
    if (!check_involution(s, rho).ok()) continue;
    found.push_back(rho);
  }
  std::sort(found.begin(), found.end());

  // conjugacy under automorphisms of the diagram
  std::vector<Perm> aut;
  for (auto& phi : automorphisms(p))
    if (transports(s.diagram, s.diagram, phi, true)) aut.push_back(phi);

  std::vector<PrymInvolution> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto inv = describe_involution(s, found[i]);
    for (std::size_t j = 0; j < i && inv.conjugate_of < 0; ++j)
      for (const auto& phi : aut)
        if (perm_compose(phi, perm_compose(found[j], perm_inverse(phi))) == found[i]) {
          inv.conjugate_of = out[j].conjugate_of >= 0 ? out[j].conjugate_of : int(j);
          break;
        }
    out.push_back(std::move(inv));
  }
  return out;
}

}  // namespace flatkern
