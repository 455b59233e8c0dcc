#include "flatkern/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace flatkern {

std::string kind_name(Kind k) { return k == Kind::First ? "first" : "second"; }

std::map<std::string, std::size_t> ClassificationResult::reason_counts() const {
  std::map<std::string, std::size_t> c;
  for (const auto& r : rejected) ++c[r.reason];
  return c;
}

const Rejection* ClassificationResult::find_rejection(const std::string& tuple) const {
  for (const auto& r : rejected)
    if (r.tuple == tuple) return &r;
  return nullptr;
}

namespace {

struct Context {
  const Prediagram& p;
  std::vector<int> comp;
  std::vector<int> pos, neg;
  int genus = 0;
};

// fixed cylinders of rho under m, or nullopt when rho does not transport m
std::optional<std::vector<int>> fixed_cylinders(const Context& cx, const Matching& m, const Perm& rho) {
  std::vector<int> fixed;
  for (auto [a, b] : m) {
    int img_top = cx.comp[rho[b]];  // positive
    auto it = m.find(img_top);
    if (it == m.end() || it->second != cx.comp[rho[a]]) return std::nullopt;
    if (cx.comp[rho[a]] == b) fixed.push_back(a);
  }
  return fixed;
}

int prediagram_fixed(const Prediagram& p, const Perm& rho) {
  int n = 0;
  auto r0 = singularity_permutation(p, rho);
  for (std::size_t i = 0; i < r0.size(); ++i) n += r0[i] == int(i);
  for (int e : saddle_connections(p)) n += rho[e] == p.tau[e];
  return n;
}

bool colex_less(std::vector<int> a, std::vector<int> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  return a < b;
}

}  // namespace

Kind classify_kind(const Prediagram& base, const Matching& m, const Perm& rho) {
  auto comps = cylinder_components(base);
  std::map<int, CylinderComponent> by_id;
  for (auto& c : comps) by_id[c.id] = c;
  auto comp = component_of(base);
  auto vof = singularity_of(base);
  auto r0 = singularity_permutation(base, rho);
  std::vector<std::set<int>> orbits;
  for (auto [a, b] : m) {
    if (comp[rho[a]] != b) continue;
    std::set<int> s;
    for (int e : by_id[a].edges) s.insert(vof[e]), s.insert(r0[vof[e]]);
    for (int e : by_id[b].edges) s.insert(vof[e]), s.insert(r0[vof[e]]);
    orbits.push_back(std::move(s));
  }
  if (orbits.size() != 2) throw std::invalid_argument("classify_kind needs exactly 2 fixed cylinders");
  return orbits[0] == orbits[1] ? Kind::First : Kind::Second;
}

ClassificationResult enumerate_matchings(const SearchSpec& spec) {
  const auto& p = spec.base;
  require_valid(p);
  Context cx{p, component_of(p), {}, {}, 0};
  for (const auto& c : cylinder_components(p)) (c.positive ? cx.pos : cx.neg).push_back(c.id);
  if (cx.pos.size() != cx.neg.size()) throw InvariantError("unbalanced cylinder components");
  cx.genus = stratum_signature(p).genus;
  int target = 10 - 2 * cx.genus;

  std::vector<Perm> rhos;
  if (spec.involution) {
    if (!is_structural_involution(p, *spec.involution)) throw InvariantError("designated involution is not structural");
    rhos.push_back(*spec.involution);
  } else {
    for (auto& r : all_isomorphisms(p, reversal(p)))
      if (is_structural_involution(p, r)) rhos.push_back(r);
    std::sort(rhos.begin(), rhos.end());
  }

  ClassificationResult res;
  struct Candidate {
    Matching m;
    std::string tuple;
    Perm rho;
    std::vector<int> fixed;
  };
  std::vector<Candidate> alive;

  std::vector<int> idx(cx.neg.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    ++res.candidates;
    Matching m;
    for (std::size_t i = 0; i < idx.size(); ++i) m[cx.pos[i]] = cx.neg[idx[i]];
    std::string tuple = matching_tuple(p, m);
    Candidate cand{m, tuple, {}, {}};
    std::string reason;
    for (Filter f : spec.order) {
      if (f == Filter::Involution) {
        bool any_transport = false;
        for (const auto& r : rhos) {
          auto fx = fixed_cylinders(cx, m, r);
          if (!fx) continue;
          any_transport = true;
          int total = prediagram_fixed(p, r) + 2 * int(fx->size());
          if (int(fx->size()) == spec.required_fixed_cylinders && total == target) {
            cand.rho = r;
            cand.fixed = *fx;
            break;
          }
        }
        if (!any_transport) reason = "no-involution";
        else if (cand.rho.empty()) reason = "extra-fixed-cylinder";
      } else if (f == Filter::Connectivity) {
        if (spec.require_connected && !is_connected_surface(p, m)) reason = "disconnected";
      } else if (f == Filter::Metric) {
        if (spec.require_metric && !metric_feasible(p, m)) reason = "metric-infeasible";
      }
      if (!reason.empty()) break;
    }
    if (!reason.empty()) res.rejected.push_back({m, tuple, reason, ""});
    else alive.push_back(std::move(cand));
  } while (std::next_permutation(idx.begin(), idx.end()));

  // symmetries used for dedup
  std::vector<Perm> group;
  for (auto& phi : automorphisms(p))
    if (!spec.involution || perm_compose(phi, *spec.involution) == perm_compose(*spec.involution, phi))
      group.push_back(phi);

  auto image = [&](const Perm& phi, const Matching& m) {
    Matching out;
    for (auto [a, b] : m) out[cx.comp[phi[a]]] = cx.comp[phi[b]];
    return out;
  };

  std::vector<int> cls(alive.size(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < alive.size(); ++i) {
    if (cls[i] >= 0) continue;
    int c = int(classes.size());
    classes.push_back({i});
    cls[i] = c;
    std::set<Matching> orbit;
    for (const auto& phi : group) orbit.insert(image(phi, alive[i].m));
    for (std::size_t j = i + 1; j < alive.size(); ++j)
      if (cls[j] < 0 && orbit.count(alive[j].m)) {
        cls[j] = c;
        classes[c].push_back(j);
      }
  }

  for (const auto& members : classes) {
    std::size_t best = members[0];
    for (std::size_t j : members) {
      const auto& a = alive[j];
      const auto& b = alive[best];
      if (colex_less(a.fixed, b.fixed) || (a.fixed == b.fixed && a.tuple < b.tuple)) best = j;
    }
    const auto& rep = alive[best];
    Survivor s;
    s.matching = rep.m;
    s.tuple = rep.tuple;
    s.rho = rep.rho;
    s.fixed_cylinders = rep.fixed;
    s.metric = *metric_feasible(p, rep.m, rep.rho);
    if (rep.fixed.size() == 2) s.kind = classify_kind(p, rep.m, rep.rho);
    for (std::size_t j : members) s.members.push_back(alive[j].tuple);
    std::sort(s.members.begin(), s.members.end());
    bool keep = !spec.kind_filter || rep.fixed.size() != 2 || *spec.kind_filter == s.kind;
    for (std::size_t j : members) {
      if (j == best && keep) continue;
      if (keep) res.rejected.push_back({alive[j].m, alive[j].tuple, "isomorphic-duplicate", rep.tuple});
      else res.rejected.push_back({alive[j].m, alive[j].tuple, "other-kind", ""});
    }
    if (keep) res.survivors.push_back(std::move(s));
  }
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const Survivor& a, const Survivor& b) { return a.tuple < b.tuple; });
  std::sort(res.rejected.begin(), res.rejected.end(),
            [](const Rejection& a, const Rejection& b) { return a.tuple < b.tuple; });
  return res;
}

std::vector<Perm> canonical_types(int n) {
  Perm f(n);
  std::iota(f.begin(), f.end(), 0);
  std::set<Perm> reps;
  do reps.insert(canonical_type(f));
  while (std::next_permutation(f.begin(), f.end()));
  return {reps.begin(), reps.end()};
}

namespace {

bool capable(const Prediagram& p) {
  std::vector<int> pos, neg;
  for (const auto& c : cylinder_components(p)) (c.positive ? pos : neg).push_back(c.id);
  if (pos.size() != neg.size()) return false;
  std::vector<int> idx(neg.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    Matching m;
    for (std::size_t i = 0; i < idx.size(); ++i) m[pos[i]] = neg[idx[i]];
    if (is_connected_surface(p, m) && metric_feasible(p, m)) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

bool type_less(const Perm& a, const Perm& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

}  // namespace

std::vector<StablePrediagram> enumerate_stable_prediagrams(const std::vector<int>& kappa) {
  int total = 0;
  for (int k : kappa) {
    if (k < 0) throw std::invalid_argument("negative singularity order");
    total += 2 * (k + 1);
  }
  if (total > 16) throw std::length_error("size cap exceeded: at most 16 edge ends");
  std::vector<int> sizes;
  for (int k : kappa) sizes.push_back(k + 1);
  std::sort(sizes.begin(), sizes.end());

  // multisets of types, one per star; equal sizes take non-decreasing reps
  std::vector<std::vector<Perm>> configs;
  std::vector<Perm> cur;
  std::map<int, std::vector<Perm>> reps;
  for (int n : sizes) reps[n] = canonical_types(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == sizes.size()) {
      configs.push_back(cur);
      return;
    }
    for (const auto& f : reps[sizes[i]]) {
      if (i > 0 && sizes[i - 1] == sizes[i] && f < cur.back()) continue;
      cur.push_back(f);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<StablePrediagram> out;
  std::set<std::vector<Perm>> seen;
  for (auto& cfg : configs) {
    auto key = cfg;
    std::sort(key.begin(), key.end(), type_less);
    std::vector<Perm> rev;
    for (const auto& f : cfg) rev.push_back(reversed_type(f));
    std::sort(rev.begin(), rev.end(), type_less);
    auto canon = std::min(key, rev);
    if (seen.count(canon)) continue;
    seen.insert(canon);
    Prediagram p;
    for (const auto& f : canon) p = p.n_ends == 0 ? star(f) : disjoint_union(p, star(f));
    if (!capable(p)) continue;
    out.push_back({p, canon});
  }
  return out;
}

}  // namespace flatkern
