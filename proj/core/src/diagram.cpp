#include "flatkern/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace flatkern {

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = int(i);
  return q;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= int(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<std::vector<int>> perm_cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int x = int(i); !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string cycle_notation(const Perm& p, int offset) {
  std::ostringstream os;
  for (const auto& c : perm_cycles(p)) {
    if (c.size() < 2) continue;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + offset;
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::string component_name(int id) { return "C" + std::to_string(id); }
std::string saddle_name(int id) { return "S" + std::to_string(id); }

ValidationReport validate(const Prediagram& p) {
  ValidationReport r;
  auto bad = [&](std::string k, std::vector<int> e) { r.violations.push_back({std::move(k), std::move(e)}); };
  int n = p.n_ends;
  if (n < 0 || int(p.sigma.size()) != n || int(p.tau.size()) != n || int(p.positive.size()) != n) {
    bad("size-mismatch", {});
    return r;
  }
  for (int e = 0; e < n; ++e)
    if (p.sigma[e] < 0 || p.sigma[e] >= n || p.tau[e] < 0 || p.tau[e] >= n) bad("label-out-of-range", {e});
  if (!r.ok()) return r;
  if (n % 2) bad("odd-n-ends", {});
  if (!is_permutation(p.sigma)) bad("sigma-not-permutation", {});
  if (!is_permutation(p.tau)) {
    bad("tau-not-permutation", {});
    return r;
  }
  for (int e = 0; e < n; ++e) {
    if (p.tau[e] == e) bad("tau-fixed-point", {e});
    else if (p.tau[p.tau[e]] != e) bad("tau-not-involution", {e});
  }
  for (int e = 0; e < n; ++e) {
    int f = p.tau[e];
    if (f == e || e > f) continue;
    if (p.positive[e] == p.positive[f]) bad("theta-not-section", {e, f});
  }
  if (is_permutation(p.sigma))
    for (int e = 0; e < n; ++e)
      if (p.positive[e] == p.positive[p.sigma[e]]) bad("not-alternating", {e, p.sigma[e]});
  return r;
}

void require_valid(const Prediagram& p) {
  auto r = validate(p);
  if (!r.ok()) throw InvariantError("invalid prediagram: " + r.violations[0].kind);
}

std::vector<CylinderComponent> cylinder_components(const Prediagram& p) {
  std::vector<CylinderComponent> out;
  std::vector<bool> seen(p.n_ends, false);
  for (int e = 0; e < p.n_ends; ++e) {
    if (seen[e]) continue;
    CylinderComponent c;
    c.id = e;
    c.positive = p.positive[e];
    for (int x = e; !seen[x]; x = p.sigma[p.tau[x]]) {
      seen[x] = true;
      c.edges.push_back(x);
      if (p.positive[x] != c.positive) throw InvariantError("cylinder component with mixed signs");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> component_of(const Prediagram& p) {
  std::vector<int> id(p.n_ends, -1);
  for (const auto& c : cylinder_components(p))
    for (int e : c.edges) id[e] = c.id;
  return id;
}

std::vector<int> saddle_connections(const Prediagram& p) {
  std::vector<int> s;
  for (int e = 0; e < p.n_ends; ++e)
    if (e < p.tau[e]) s.push_back(e);
  return s;
}

std::vector<std::vector<int>> singularities(const Prediagram& p) { return perm_cycles(p.sigma); }

std::vector<int> singularity_of(const Prediagram& p) {
  std::vector<int> v(p.n_ends);
  auto sing = singularities(p);
  for (std::size_t i = 0; i < sing.size(); ++i)
    for (int e : sing[i]) v[e] = int(i);
  return v;
}

std::vector<SubPrediagram> connected_components(const Prediagram& p) {
  std::vector<int> comp(p.n_ends, -1);
  std::vector<std::vector<int>> groups;
  for (int e = 0; e < p.n_ends; ++e) {
    if (comp[e] >= 0) continue;
    int g = int(groups.size());
    groups.emplace_back();
    std::vector<int> stack{e};
    comp[e] = g;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      groups[g].push_back(x);
      for (int y : {p.sigma[x], p.tau[x]})
        if (comp[y] < 0) {
          comp[y] = g;
          stack.push_back(y);
        }
    }
  }
  std::vector<SubPrediagram> out;
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    std::vector<int> local(p.n_ends, -1);
    for (std::size_t i = 0; i < g.size(); ++i) local[g[i]] = int(i);
    SubPrediagram s;
    s.ends = g;
    s.pre.n_ends = int(g.size());
    for (int x : g) {
      s.pre.sigma.push_back(local[p.sigma[x]]);
      s.pre.tau.push_back(local[p.tau[x]]);
      s.pre.positive.push_back(p.positive[x]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Prediagram disjoint_union(const Prediagram& a, const Prediagram& b) {
  Prediagram u = a;
  u.n_ends = a.n_ends + b.n_ends;
  for (int e = 0; e < b.n_ends; ++e) {
    u.sigma.push_back(b.sigma[e] + a.n_ends);
    u.tau.push_back(b.tau[e] + a.n_ends);
    u.positive.push_back(b.positive[e]);
  }
  return u;
}

Prediagram relabel(const Prediagram& p, const Perm& phi) {
  Prediagram q;
  q.n_ends = p.n_ends;
  q.sigma.assign(p.n_ends, 0);
  q.tau.assign(p.n_ends, 0);
  q.positive.assign(p.n_ends, false);
  for (int e = 0; e < p.n_ends; ++e) {
    q.sigma[phi[e]] = phi[p.sigma[e]];
    q.tau[phi[e]] = phi[p.tau[e]];
    q.positive[phi[e]] = p.positive[e];
  }
  return q;
}

bool is_stable(const Prediagram& p) {
  auto v = singularity_of(p);
  for (int e = 0; e < p.n_ends; ++e)
    if (v[e] != v[p.tau[e]]) return false;
  return true;
}

Perm canonical_type(const Perm& f) {
  int n = int(f.size());
  Perm best;
  for (int l = 0; l < n; ++l) {
    // c^l f c^-l
    Perm g(n);
    for (int k = 0; k < n; ++k) g[k] = (f[((k - l) % n + n) % n] + l) % n;
    if (best.empty() || g < best) best = std::move(g);
  }
  return best;
}

Prediagram star(const Perm& f) {
  int n = int(f.size());
  Prediagram p;
  p.n_ends = 2 * n;
  p.sigma.resize(2 * n);
  p.tau.resize(2 * n);
  p.positive.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    p.sigma[i] = (i + 1) % (2 * n);
    p.positive[i] = i % 2 == 0;
  }
  for (int k = 0; k < n; ++k) {
    p.tau[2 * k] = 2 * f[k] + 1;
    p.tau[2 * f[k] + 1] = 2 * k;
  }
  return p;
}

Perm star_permutation(const Prediagram& p, int x) {
  if (!p.positive[x]) throw TypeError("base edge must be positive");
  std::vector<int> pw{x};
  for (int y = p.sigma[x]; y != x; y = p.sigma[y]) pw.push_back(y);
  if (pw.size() % 2) throw TypeError("not-alternating");
  std::map<int, int> idx;
  for (std::size_t i = 0; i < pw.size(); ++i) {
    idx[pw[i]] = int(i);
    if (p.positive[pw[i]] != (i % 2 == 0)) throw TypeError("not-alternating");
  }
  int n = int(pw.size()) / 2;
  Perm f(n);
  for (int k = 0; k < n; ++k) {
    auto it = idx.find(p.tau[pw[2 * k]]);
    if (it == idx.end()) throw TypeError("not-stable");
    f[k] = (it->second - 1) / 2;
  }
  return f;
}

std::vector<Perm> DiagramType::multiset() const {
  auto m = components;
  std::sort(m.begin(), m.end(), [](const Perm& a, const Perm& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return m;
}

DiagramType component_type(const Prediagram& p) {
  if (!is_stable(p)) throw TypeError("not-stable");
  DiagramType t;
  for (const auto& orbit : singularities(p)) {
    int x = -1;
    for (int e : orbit)
      if (p.positive[e] && (x < 0 || e < x)) x = e;
    if (x < 0) throw TypeError("not-alternating");
    t.components.push_back(canonical_type(star_permutation(p, x)));
  }
  return t;
}

Perm reversed_type(const Perm& f) {
  int n = int(f.size());
  Perm fc(n);
  for (int k = 0; k < n; ++k) fc[k] = f[(k + 1) % n];
  return canonical_type(perm_inverse(fc));
}

Prediagram reversal(const Prediagram& p) {
  Prediagram q = p;
  q.positive.flip();
  return q;
}

namespace {

// extend phi from (r -> t) over the <sigma,tau> orbit of r
bool propagate(const Prediagram& a, const Prediagram& b, int r, int t, Perm& phi, std::vector<bool>& used,
               std::vector<int>& trail) {
  std::vector<std::pair<int, int>> stack{{r, t}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (phi[x] >= 0) {
      if (phi[x] != y) return false;
      continue;
    }
    if (used[y] || a.positive[x] != b.positive[y]) return false;
    phi[x] = y;
    used[y] = true;
    trail.push_back(x);
    stack.push_back({a.sigma[x], b.sigma[y]});
    stack.push_back({a.tau[x], b.tau[y]});
  }
  return true;
}

void search(const Prediagram& a, const Prediagram& b, const std::vector<int>& roots, std::size_t i, Perm& phi,
            std::vector<bool>& used, std::vector<Perm>& out, bool first_only) {
  if (first_only && !out.empty()) return;
  if (i == roots.size()) {
    out.push_back(phi);
    return;
  }
  int r = roots[i];
  for (int t = 0; t < b.n_ends; ++t) {
    if (used[t] || a.positive[r] != b.positive[t]) continue;
    std::vector<int> trail;
    if (propagate(a, b, r, t, phi, used, trail)) search(a, b, roots, i + 1, phi, used, out, first_only);
    for (int x : trail) {
      used[phi[x]] = false;
      phi[x] = -1;
    }
    if (first_only && !out.empty()) return;
  }
}

std::vector<Perm> isomorphisms(const Prediagram& a, const Prediagram& b, bool first_only) {
  std::vector<Perm> out;
  if (a.n_ends != b.n_ends) return out;
  std::vector<int> roots;
  for (const auto& c : connected_components(a)) roots.push_back(c.ends[0]);
  Perm phi(a.n_ends, -1);
  std::vector<bool> used(b.n_ends, false);
  search(a, b, roots, 0, phi, used, out, first_only);
  return out;
}

// base end of a stable star whose permutation is the canonical one
int canonical_base(const Prediagram& p, int x) {
  Perm target = canonical_type(star_permutation(p, x));
  int y = x;
  do {
    if (star_permutation(p, y) == target) return y;
    y = p.sigma[p.sigma[y]];
  } while (y != x);
  return -1;
}

}  // namespace

std::vector<Perm> all_isomorphisms(const Prediagram& a, const Prediagram& b) { return isomorphisms(a, b, false); }

std::optional<Perm> are_isomorphic(const Prediagram& a, const Prediagram& b) {
  if (a.n_ends != b.n_ends) return std::nullopt;
  bool connected = connected_components(a).size() == 1 && connected_components(b).size() == 1;
  if (connected && is_stable(a) && is_stable(b)) {
    // stable and connected: one star each, decided by type
    int xa = 0, xb = 0;
    while (!a.positive[xa]) ++xa;
    while (!b.positive[xb]) ++xb;
    if (canonical_type(star_permutation(a, xa)) != canonical_type(star_permutation(b, xb))) return std::nullopt;
    int ba = canonical_base(a, xa), bb = canonical_base(b, xb);
    Perm phi(a.n_ends);
    for (int i = 0, x = ba, y = bb; i < a.n_ends; ++i, x = a.sigma[x], y = b.sigma[y]) phi[x] = y;
    return phi;
  }
  auto v = isomorphisms(a, b, true);
  if (v.empty()) return std::nullopt;
  return v[0];
}

QuadraticNumber component_length(const Prediagram& p, const Metric& l, long d, const CylinderComponent& c) {
  QuadraticNumber s = QuadraticNumber::zero(d);
  for (int e : c.edges) s += l.at(std::min(e, p.tau[e]));
  return s;
}

bool matching_is_bijection(const Prediagram& p, const Matching& m) {
  std::set<int> pos, neg, hit;
  for (const auto& c : cylinder_components(p)) (c.positive ? pos : neg).insert(c.id);
  if (m.size() != pos.size()) return false;
  for (auto [a, b] : m) {
    if (!pos.count(a) || !neg.count(b) || hit.count(b)) return false;
    hit.insert(b);
  }
  return hit.size() == neg.size();
}

ValidationReport validate(const SeparatrixDiagram& dg) {
  auto r = validate(dg.pre);
  if (!r.ok()) return r;
  auto bad = [&](std::string k, std::vector<int> e) { r.violations.push_back({std::move(k), std::move(e)}); };
  if (!matching_is_bijection(dg.pre, dg.matching)) bad("matching-not-bijection", {});
  bool metric_ok = true;
  for (int s : saddle_connections(dg.pre)) {
    auto it = dg.lengths.find(s);
    if (it == dg.lengths.end()) {
      bad("metric-missing", {s});
      metric_ok = false;
    } else if (it->second.d() != dg.d) {
      bad("metric-context", {s});
      metric_ok = false;
    } else if (it->second.sign() <= 0) {
      bad("metric-nonpositive", {s});
    }
  }
  for (const auto& [s, v] : dg.lengths)
    if (s < 0 || s >= dg.pre.n_ends || dg.pre.tau[s] < s) bad("metric-unknown-saddle", {s});
  if (!r.ok() || !metric_ok) return r;
  std::map<int, CylinderComponent> comps;
  for (auto& c : cylinder_components(dg.pre)) comps[c.id] = c;
  for (auto [a, b] : dg.matching)
    if (!(component_length(dg.pre, dg.lengths, dg.d, comps[a]) == component_length(dg.pre, dg.lengths, dg.d, comps[b])))
      bad("metric-unbalanced", {a, b});
  return r;
}

bool transports(const SeparatrixDiagram& a, const SeparatrixDiagram& b, const Perm& phi, bool check_metric) {
  auto ca = component_of(a.pre), cb = component_of(b.pre);
  for (auto [pa, na] : a.matching) {
    auto it = b.matching.find(cb[phi[pa]]);
    if (it == b.matching.end() || it->second != cb[phi[na]]) return false;
  }
  if (!check_metric) return true;
  if (a.d != b.d) return false;
  for (int s : saddle_connections(a.pre)) {
    int t = std::min(phi[s], b.pre.tau[phi[s]]);
    auto ia = a.lengths.find(s);
    auto ib = b.lengths.find(t);
    if (ia == a.lengths.end() || ib == b.lengths.end() || !(ia->second == ib->second)) return false;
  }
  return true;
}

bool diagram_isomorphic(const SeparatrixDiagram& a, const SeparatrixDiagram& b) {
  for (const auto& phi : all_isomorphisms(a.pre, b.pre))
    if (transports(a, b, phi)) return true;
  return false;
}

RMatrix metric_system(const Prediagram& p, const Matching& m) {
  auto sc = saddle_connections(p);
  std::map<int, std::size_t> col;
  for (std::size_t i = 0; i < sc.size(); ++i) col[sc[i]] = i;
  std::map<int, CylinderComponent> comps;
  for (auto& c : cylinder_components(p)) comps[c.id] = c;
  RMatrix rows;
  for (auto [a, b] : m) {
    RVector r(sc.size(), Rational(0));
    for (int e : comps[a].edges) r[col[std::min(e, p.tau[e])]] += 1;
    for (int e : comps[b].edges) r[col[std::min(e, p.tau[e])]] -= 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::optional<Metric> solve_metric(const Prediagram& p, const RMatrix& sys) {
  auto sc = saddle_connections(p);
  auto x = positive_solution(sys, sc.size());
  if (!x) return std::nullopt;
  Metric l;
  for (std::size_t i = 0; i < sc.size(); ++i) l[sc[i]] = QuadraticNumber::rational((*x)[i]);
  return l;
}

}  // namespace

std::optional<Metric> metric_feasible(const Prediagram& p, const Matching& m) {
  if (!matching_is_bijection(p, m)) return std::nullopt;
  return solve_metric(p, metric_system(p, m));
}

std::optional<Metric> metric_feasible(const Prediagram& p, const Matching& m, const Perm& rho) {
  if (!matching_is_bijection(p, m)) return std::nullopt;
  auto sys = metric_system(p, m);
  auto sc = saddle_connections(p);
  std::map<int, std::size_t> col;
  for (std::size_t i = 0; i < sc.size(); ++i) col[sc[i]] = i;
  for (int s : sc) {
    int t = std::min(rho[s], p.tau[rho[s]]);
    if (t == s) continue;
    RVector r(sc.size(), Rational(0));
    r[col[s]] += 1;
    r[col[t]] -= 1;
    sys.push_back(std::move(r));
  }
  return solve_metric(p, sys);
}

BuiltDiagram build_from_cylinders(const CylinderModel& model, const std::vector<QuadraticNumber>& lengths, long d) {
  if (model.bottoms.size() != model.tops.size()) throw DimensionError("bottoms/tops size mismatch");
  if (int(lengths.size()) != model.n_saddles) throw DimensionError("one length per saddle connection");
  int n = 2 * model.n_saddles;
  Prediagram p;
  p.n_ends = n;
  p.sigma.assign(n, -1);
  p.tau.resize(n);
  p.positive.resize(n);
  for (int j = 0; j < model.n_saddles; ++j) {
    p.tau[2 * j] = 2 * j + 1;
    p.tau[2 * j + 1] = 2 * j;
    p.positive[2 * j] = true;
    p.positive[2 * j + 1] = false;
  }
  auto set = [&](int from, int to) {
    if (p.sigma[from] >= 0) throw InvariantError("saddle connection used twice on one side");
    p.sigma[from] = to;
  };
  for (std::size_t i = 0; i < model.bottoms.size(); ++i) {
    const auto& b = model.bottoms[i];
    const auto& t = model.tops[i];
    for (std::size_t k = 0; k < b.size(); ++k) set(2 * b[k] + 1, 2 * b[(k + 1) % b.size()]);
    for (std::size_t k = 0; k < t.size(); ++k) set(2 * t[k], 2 * t[(k + t.size() - 1) % t.size()] + 1);
  }
  for (int x : p.sigma)
    if (x < 0) throw InvariantError("saddle connection missing from a cylinder boundary");
  require_valid(p);
  auto comp = component_of(p);
  BuiltDiagram out;
  out.diagram.pre = p;
  out.diagram.d = d;
  for (std::size_t i = 0; i < model.bottoms.size(); ++i) {
    int pc = comp[2 * model.bottoms[i][0]];
    int nc = comp[2 * model.tops[i][0] + 1];
    out.diagram.matching[pc] = nc;
    out.cylinders.push_back(pc);
  }
  for (int j = 0; j < model.n_saddles; ++j) out.diagram.lengths[2 * j] = lengths[j];
  return out;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> signed_ids(const Prediagram& p) {
  std::vector<int> pos, neg;
  for (const auto& c : cylinder_components(p)) (c.positive ? pos : neg).push_back(c.id);
  return {pos, neg};
}

}  // namespace

std::string component_letter(const Prediagram& p, int comp_id) {
  auto [pos, neg] = signed_ids(p);
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] == comp_id) return std::string(1, char('a' + i));
  for (std::size_t i = 0; i < neg.size(); ++i)
    if (neg[i] == comp_id) return std::to_string(i + 1);
  throw std::out_of_range("no component " + component_name(comp_id));
}

std::string matching_tuple(const Prediagram& p, const Matching& m) {
  auto [pos, neg] = signed_ids(p);
  if (pos.size() > 26) throw std::out_of_range("too many components for tuple notation");
  std::map<int, char> letter;
  for (std::size_t i = 0; i < pos.size(); ++i) letter[pos[i]] = char('a' + i);
  std::map<int, int> inv;
  for (auto [a, b] : m) inv[b] = a;
  std::string s;
  for (int n : neg) s.push_back(letter.at(inv.at(n)));
  return s;
}

Matching matching_from_tuple(const Prediagram& p, const std::string& tuple) {
  auto [pos, neg] = signed_ids(p);
  if (tuple.size() != neg.size()) throw std::invalid_argument("tuple length must equal the number of cylinders");
  Matching m;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    int k = tuple[i] - 'a';
    if (k < 0 || k >= int(pos.size()) || m.count(pos[k])) throw std::invalid_argument("bad matching tuple " + tuple);
    m[pos[k]] = neg[i];
  }
  return m;
}

}  // namespace flatkern
