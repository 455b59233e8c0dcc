#include "flatkern/twistspace.hpp"

#include <algorithm>

namespace flatkern {

std::vector<int> support(const QVector& u) {
  std::vector<int> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) s.push_back(int(i));
  return s;
}

int degree(const QVector& u) {
  if (support(u).empty()) throw std::domain_error("degree of the zero vector");
  return int(qspan_dimension(u)) - 1;
}

DeformationVector DeformationVector::make(QVector u) {
  DeformationVector v;
  v.support = flatkern::support(u);
  v.degree = flatkern::degree(u);
  v.u = std::move(u);
  return v;
}

bool are_transverse(const DeformationVector& a, const DeformationVector& b) {
  for (int i : a.support)
    if (std::binary_search(b.support.begin(), b.support.end(), i)) return false;
  return true;
}

QVector normalize_first(QVector u) {
  for (const auto& x : u)
    if (!x.is_zero()) {
      auto inv = x.inverse();
      for (auto& y : u) y *= inv;
      break;
    }
  return u;
}

std::vector<QVector> isoperiodic_twist_space(const Surface& s) {
  auto cc = chain_complex(s);
  long d = s.diagram.d;
  int m = s.m();
  auto c = s.circumferences();
  // unknowns (x_1..x_m, z_1..z_m): sum x_i c_i B_i - sum z_j dF_j = 0
  std::size_t rows = cc.n_edges;
  QMatrix a(rows, 2 * m, d);
  for (std::size_t k = 0; k < rows; ++k)
    for (int i = 0; i < m; ++i) {
      if (sgn(cc.core_classes[i][k]) != 0) a(k, i) = c[i] * QuadraticNumber::rational(cc.core_classes[i][k], d);
      if (sgn(cc.boundary2[k][i]) != 0) a(k, m + i) = QuadraticNumber::rational(-cc.boundary2[k][i], d);
    }
  std::vector<QVector> proj;
  for (auto& v : kernel_basis(a)) proj.emplace_back(v.begin(), v.begin() + m);
  // drop zero projections, re-echelonize
  std::vector<QVector> nz;
  for (auto& v : proj)
    if (!support(v).empty()) nz.push_back(v);
  return row_space_basis(nz, d);
}

std::vector<QVector> intersect_spaces(const std::vector<QVector>& a, const std::vector<QVector>& b, long d, int m) {
  if (a.empty() || b.empty()) return {};
  // sum alpha_i a_i - sum beta_j b_j = 0
  QMatrix sys(m, a.size() + b.size(), d);
  for (int k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < a.size(); ++i) sys(k, i) = a[i][k];
    for (std::size_t j = 0; j < b.size(); ++j) sys(k, a.size() + j) = -b[j][k];
  }
  std::vector<QVector> out;
  for (auto& coef : kernel_basis(sys)) {
    QVector v(m, QuadraticNumber::zero(d));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!coef[i].is_zero())
        for (int k = 0; k < m; ++k) v[k] += coef[i] * a[i][k];
    out.push_back(std::move(v));
  }
  return row_space_basis(out, d);
}

std::vector<QVector> prym_twist_space(const std::vector<QVector>& k_full, const Perm& pi, const QVector& c) {
  int m = int(c.size());
  long d = common_context(c);
  if (int(pi.size()) != m || !is_permutation(pi)) throw std::invalid_argument("pi is not a permutation of the cylinders");
  for (int i = 0; i < m; ++i)
    if (pi[pi[i]] != i) throw std::invalid_argument("pi is not an involution");
  for (int i = 0; i < m; ++i)
    if (!(c[pi[i]] == c[i])) throw std::invalid_argument("circumferences are not invariant under pi");
  if (k_full.empty()) return {};
  // x = sum alpha_k v_k with x_{pi(i)} - x_i = 0
  QMatrix sys(m, k_full.size(), d);
  for (int i = 0; i < m; ++i)
    for (std::size_t k = 0; k < k_full.size(); ++k) sys(i, k) = k_full[k][pi[i]] - k_full[k][i];
  std::vector<QVector> out;
  for (auto& coef : kernel_basis(sys)) {
    QVector v(m, QuadraticNumber::zero(d));
    for (std::size_t k = 0; k < k_full.size(); ++k)
      if (!coef[k].is_zero())
        for (int i = 0; i < m; ++i) v[i] += coef[k] * k_full[k][i];
    out.push_back(std::move(v));
  }
  return row_space_basis(out, d);
}

TwistModel make_twist_model(const Surface& s, LocusKind locus, const Perm& pi, const std::vector<QVector>& explicit_basis) {
  TwistModel t;
  t.m = s.m();
  t.d = s.diagram.d;
  t.circumferences = s.circumferences();
  t.locus = locus;
  t.k_full = isoperiodic_twist_space(s);
  switch (locus) {
    case LocusKind::Full:
      t.k = t.k_full;
      break;
    case LocusKind::Prym:
      t.pi = pi;
      t.k = prym_twist_space(t.k_full, pi, t.circumferences);
      break;
    case LocusKind::Explicit:
      for (const auto& v : explicit_basis)
        if (int(v.size()) != t.m) throw DimensionError("explicit basis vector has the wrong length");
      t.explicit_basis = row_space_basis(explicit_basis, t.d);
      t.k = intersect_spaces(t.k_full, t.explicit_basis, t.d, t.m);
      break;
  }
  return t;
}

bool in_span(const QVector& u, const std::vector<QVector>& basis, long d) {
  if (basis.empty()) return support(u).empty();
  std::vector<QVector> rows = basis;
  std::size_t r0 = row_space_basis(rows, d).size();
  rows.push_back(u);
  return row_space_basis(rows, d).size() == r0;
}

std::vector<QVector> restrict_support(const std::vector<QVector>& basis, const std::vector<bool>& allowed, long d) {
  if (basis.empty()) return {};
  int m = int(allowed.size());
  std::vector<int> banned;
  for (int i = 0; i < m; ++i)
    if (!allowed[i]) banned.push_back(i);
  if (banned.empty()) return row_space_basis(basis, d);
  QMatrix sys(banned.size(), basis.size(), d);
  for (std::size_t r = 0; r < banned.size(); ++r)
    for (std::size_t k = 0; k < basis.size(); ++k) sys(r, k) = basis[k][banned[r]];
  std::vector<QVector> out;
  for (auto& coef : kernel_basis(sys)) {
    QVector v(m, QuadraticNumber::zero(d));
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!coef[k].is_zero())
        for (int i = 0; i < m; ++i) v[i] += coef[k] * basis[k][i];
    out.push_back(std::move(v));
  }
  return row_space_basis(out, d);
}

bool is_minimal(const QVector& u, const std::vector<QVector>& basis, long d) {
  auto sup = support(u);
  if (sup.empty()) throw std::domain_error("zero vector is never minimal");
  if (!in_span(u, basis, d)) throw std::invalid_argument("vector is not in the space");
  // a smaller support sits inside supp(u) minus one index
  for (int drop : sup) {
    std::vector<bool> allowed(u.size(), false);
    for (int i : sup) allowed[i] = i != drop;
    if (!restrict_support(basis, allowed, d).empty()) return false;
  }
  return true;
}

std::vector<DeformationVector> minimal_deformations(const std::vector<QVector>& basis, long d, int m) {
  std::vector<DeformationVector> out;
  if (basis.empty()) return out;
  if (m > 20) throw std::length_error("too many cylinders for the support scan");
  std::vector<unsigned> masks;
  for (unsigned s = 1; s < (1u << m); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<unsigned> found;
  for (unsigned s : masks) {
    bool contains_found = false;
    for (unsigned f : found) contains_found = contains_found || (f & s) == f;
    if (contains_found) continue;
    std::vector<bool> allowed(m);
    for (int i = 0; i < m; ++i) allowed[i] = (s >> i) & 1u;
    auto w = restrict_support(basis, allowed, d);
    if (w.size() != 1) continue;
    unsigned got = 0;
    for (int i : support(w[0])) got |= 1u << i;
    if (got != s) continue;
    found.push_back(s);
    out.push_back(DeformationVector::make(normalize_first(w[0])));
  }
  std::sort(out.begin(), out.end(), [](const DeformationVector& a, const DeformationVector& b) {
    return a.support.size() != b.support.size() ? a.support.size() < b.support.size() : a.support < b.support;
  });
  return out;
}

PropertyVerdict has_property_p(const TwistModel& model) {
  PropertyVerdict v;
  if (model.k.empty()) {
    v.reason = "absolute locus slice";
    return v;
  }
  v.minimal = minimal_deformations(model.k, model.d, model.m);
  for (const auto& u : v.minimal) {
    v.max_degree = std::max(v.max_degree, u.degree);
    if (u.degree >= 1 && !v.witness) v.witness = u;
  }
  v.holds = v.witness.has_value();
  v.reason = v.holds ? "minimal deformation of positive degree" : "every minimal deformation has degree 0";
  return v;
}

RankBound closure_certificate(const std::vector<QVector>& vectors, const std::vector<QVector>& k_full, long d, int m) {
  RankBound rb;
  std::vector<QVector> w = k_full;
  for (const auto& u : vectors) {
    rb.degrees.push_back(degree(u));
    rb.sum_of_degrees += rb.degrees.back();
    for (auto& r : rational_closure(u)) w.push_back(to_quadratic(r, d));
  }
  rb.dim_k_full = int(row_space_basis(k_full, d).size());
  rb.dim_closure = int(row_space_basis(w, d).size());
  rb.closure_bound = std::max(0, rb.dim_closure - rb.dim_k_full);
  (void)m;
  return rb;
}

RankBound rank_lower_bound(const std::vector<QVector>& vectors, const std::vector<QVector>& k, long d, int m) {
  std::vector<DeformationVector> dv;
  for (const auto& u : vectors) {
    if (int(u.size()) != m) throw DimensionError("vector length differs from cylinder count");
    if (!in_span(u, k, d)) throw RankInputError("vector not in the twist space");
    if (!is_minimal(u, k, d)) throw RankInputError("vector is not minimal");
    dv.push_back(DeformationVector::make(u));
  }
  for (std::size_t i = 0; i < dv.size(); ++i)
    for (std::size_t j = i + 1; j < dv.size(); ++j)
      if (!are_transverse(dv[i], dv[j])) throw RankInputError("vectors are not pairwise transverse");
  RankBound rb;
  for (const auto& v : dv) {
    rb.degrees.push_back(v.degree);
    rb.sum_of_degrees += v.degree;
  }
  return rb;
}

FieldRatios field_ratio_generators(const QVector& c) {
  if (c.empty()) throw DimensionError("no circumferences");
  for (const auto& x : c)
    if (x.sign() <= 0) throw std::invalid_argument("circumferences must be positive");
  FieldRatios f;
  for (const auto& x : c) f.ratios.push_back(x / c[0]);
  f.dimension = qspan_dimension(f.ratios);
  return f;
}

DeformationVector shear_vector(const Surface& s) {
  auto c = s.circumferences();
  QVector u;
  for (int i = 0; i < s.m(); ++i) u.push_back(s.height(i) / c[i]);
  return DeformationVector::make(u);
}

QVector inverse_circumference_vector(const std::vector<Rational>& k, const QVector& c) {
  if (k.size() != c.size()) throw DimensionError("coefficient count differs from cylinder count");
  long d = common_context(c);
  QVector u;
  for (std::size_t i = 0; i < k.size(); ++i) u.push_back(QuadraticNumber::rational(k[i], d) / c[i]);
  return u;
}

}  // namespace flatkern
