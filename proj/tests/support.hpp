#pragma once

// Independent oracles for the test suites. Nothing here calls the library's
// elimination, kernel or simplex code.

#include "flatkern/presets.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace oracle {

using flatkern::QuadraticNumber;
using flatkern::QVector;
using flatkern::Rational;
using flatkern::RMatrix;
using flatkern::RVector;

inline bool zero(const Rational& x) { return sgn(x) == 0; }
inline bool zero(const QuadraticNumber& x) { return x.is_zero(); }

// plain row reduction, returns the rank
template <class T>
std::size_t rank_of(std::vector<std::vector<T>> a) {
  std::size_t r = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      T f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// dim_Q span of a_i + b_i sqrt d = rank of the 2 x n rational matrix (a; b)
inline std::size_t qspan(const QVector& u) {
  RMatrix m(2);
  for (const auto& x : u) {
    m[0].push_back(x.a());
    m[1].push_back(x.b());
  }
  return rank_of(m);
}

inline int degree(const QVector& u) { return int(qspan(u)) - 1; }

inline QVector combine(const std::vector<QVector>& basis, const std::vector<long>& coef, long d) {
  QVector v(basis[0].size(), QuadraticNumber::zero(d));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += QuadraticNumber::rational(coef[k], d) * basis[k][i];
  return v;
}

// dim of {x in span(basis) : x_i = 0 outside mask}
inline std::size_t restricted_dim(const std::vector<QVector>& basis, unsigned mask, long d) {
  // coefficients alpha with sum alpha_k basis_k[i] = 0 for i outside mask;
  // the basis is independent so dim = k - rank(columns outside mask)
  std::vector<QVector> rows;
  std::size_t m = basis[0].size();
  for (std::size_t i = 0; i < m; ++i)
    if (!((mask >> i) & 1u)) {
      QVector r;
      for (const auto& b : basis) r.push_back(b[i]);
      rows.push_back(r);
    }
  (void)d;
  return basis.size() - (rows.empty() ? 0 : rank_of(rows));
}

// minimal supports by brute force over all 2^m subsets: S is a circuit when
// it carries a vector and no S minus one index does
inline std::vector<unsigned> minimal_supports(const std::vector<QVector>& basis, long d) {
  std::vector<unsigned> out;
  if (basis.empty()) return out;
  unsigned m = unsigned(basis[0].size());
  for (unsigned s = 1; s < (1u << m); ++s) {
    if (restricted_dim(basis, s, d) == 0) continue;
    bool minimal = true;
    for (unsigned i = 0; i < m && minimal; ++i)
      if ((s >> i) & 1u) minimal = restricted_dim(basis, s & ~(1u << i), d) == 0;
    if (minimal) out.push_back(s);
  }
  return out;
}

// {x : A x = 0, x >= 1} by vertex enumeration: the region is pointed, so it is
// non-empty iff some choice of tight constraints x_T = 1 pins a point with x >= 1
inline bool positive_feasible(const RMatrix& a, std::size_t n) {
  for (unsigned t = 0; t < (1u << n); ++t) {
    RMatrix sys = a;
    for (auto& row : sys) row.push_back(0);
    for (std::size_t i = 0; i < n; ++i)
      if ((t >> i) & 1u) {
        RVector row(n + 1, 0);
        row[i] = 1;
        row[n] = 1;
        sys.push_back(row);
      }
    // solve by elimination with pivots recorded
    std::vector<int> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < sys.size(); ++c) {
      std::size_t p = r;
      while (p < sys.size() && sgn(sys[p][c]) == 0) ++p;
      if (p == sys.size()) continue;
      std::swap(sys[p], sys[r]);
      for (std::size_t i = 0; i < sys.size(); ++i) {
        if (i == r || sgn(sys[i][c]) == 0) continue;
        Rational f = sys[i][c] / sys[r][c];
        for (std::size_t k = 0; k <= n; ++k) sys[i][k] -= f * sys[r][k];
      }
      piv.push_back(int(c));
      ++r;
    }
    if (piv.size() != n) continue;  // not a vertex
    bool consistent = true;
    for (std::size_t i = r; i < sys.size(); ++i) consistent = consistent && sgn(sys[i][n]) == 0;
    if (!consistent) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && sys[i][n] / sys[i][piv[i]] >= 1;
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle

namespace fixtures {

using namespace flatkern;

inline std::string source_dir() { return FLATKERN_SOURCE_DIR; }

inline Surface preset_surface(const std::string& id, const std::string& metric) {
  return load_preset(id).surface(metric);
}

inline Perm preset_pi(const std::string& id, const Surface& s) {
  auto p = load_preset(id);
  return cylinder_permutation(s, *p.involution);
}

inline std::vector<QVector> certificate(const std::string& id, const std::string& key, const Surface& s) {
  auto p = load_preset(id);
  auto c = s.circumferences();
  std::vector<QVector> out;
  for (const auto& row : p.certificates.at(key))
    out.push_back(inverse_circumference_vector(std::vector<Rational>(row.begin(), row.end()), c));
  return out;
}

// random stable connected diagram with a rational metric, built from random
// stars; returns nullopt when the drawn matching is unusable
inline std::optional<Surface> random_stable_surface(std::mt19937& rng) {
  std::uniform_int_distribution<int> nstars(1, 3), size(1, 3);
  Prediagram p;
  int k = nstars(rng);
  for (int i = 0; i < k; ++i) {
    Perm f(size(rng));
    std::iota(f.begin(), f.end(), 0);
    std::shuffle(f.begin(), f.end(), rng);
    p = i == 0 ? star(f) : disjoint_union(p, star(f));
  }
  Perm phi(p.n_ends);
  std::iota(phi.begin(), phi.end(), 0);
  std::shuffle(phi.begin(), phi.end(), rng);
  p = relabel(p, phi);
  std::vector<int> pos, neg;
  for (const auto& c : cylinder_components(p)) (c.positive ? pos : neg).push_back(c.id);
  if (pos.size() != neg.size()) return std::nullopt;
  std::shuffle(neg.begin(), neg.end(), rng);
  Matching m;
  for (std::size_t i = 0; i < pos.size(); ++i) m[pos[i]] = neg[i];
  if (!is_connected_surface(p, m)) return std::nullopt;
  auto l = metric_feasible(p, m);
  if (!l) return std::nullopt;
  SeparatrixDiagram dg{p, m, *l, 0};
  return Surface::with_defaults(dg);
}

}  // namespace fixtures
