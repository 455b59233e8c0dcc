#pragma once

// Linear algebra in twist coordinates. Coordinate x_i twists cylinder i by
// x_i * c_i, so listed vectors (c1^-1, -c2^-1, ...) are stored verbatim.

#include "flatkern/surface.hpp"

#include <optional>
#include <set>
#include <string>

namespace flatkern {

enum class LocusKind { Full, Prym, Explicit };

struct TwistModel {
  int m = 0;
  long d = 0;
  QVector circumferences;
  LocusKind locus = LocusKind::Full;
  Perm pi;                          // Prym locus
  std::vector<QVector> explicit_basis;  // Explicit locus
  std::vector<QVector> k_full;      // basis of K_full
  std::vector<QVector> k;           // basis of K for the locus
};

struct DeformationVector {
  QVector u;
  std::vector<int> support;  // 0-based
  int degree = 0;

  static DeformationVector make(QVector u);
};

std::vector<int> support(const QVector& u);
int degree(const QVector& u);
bool are_transverse(const DeformationVector& a, const DeformationVector& b);

// basis of {x : sum x_i c_i [core_i] = 0 in H_1}
std::vector<QVector> isoperiodic_twist_space(const Surface& s);
std::vector<QVector> prym_twist_space(const std::vector<QVector>& k_full, const Perm& pi, const QVector& c);
std::vector<QVector> intersect_spaces(const std::vector<QVector>& a, const std::vector<QVector>& b, long d, int m);

TwistModel make_twist_model(const Surface& s, LocusKind locus, const Perm& pi = {},
                            const std::vector<QVector>& explicit_basis = {});

bool in_span(const QVector& u, const std::vector<QVector>& basis, long d);
// subspace of span(basis) supported inside `allowed`
std::vector<QVector> restrict_support(const std::vector<QVector>& basis, const std::vector<bool>& allowed, long d);

bool is_minimal(const QVector& u, const std::vector<QVector>& basis, long d);
// one canonical representative (first non-zero entry 1) per minimal support,
// ordered by (support size, support)
std::vector<DeformationVector> minimal_deformations(const std::vector<QVector>& basis, long d, int m);

struct PropertyVerdict {
  bool holds = false;
  std::optional<DeformationVector> witness;
  int max_degree = -1;
  std::string reason;
  std::vector<DeformationVector> minimal;
};

PropertyVerdict has_property_p(const TwistModel& model);

struct RankBound {
  int sum_of_degrees = 0;
  std::vector<int> degrees;
  // closure certificate: W = K_full + sum rational_closure(u_i),
  // rank >= dim W - dim K_full
  int dim_k_full = 0;
  int dim_closure = 0;
  int closure_bound = 0;
  int bound() const { return std::max(sum_of_degrees, closure_bound); }
};

struct RankInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// vectors must be minimal in `k` and pairwise transverse
RankBound rank_lower_bound(const std::vector<QVector>& vectors, const std::vector<QVector>& k, long d, int m);
// closure certificate only; vectors need not be transverse
RankBound closure_certificate(const std::vector<QVector>& vectors, const std::vector<QVector>& k_full, long d, int m);

struct FieldRatios {
  QVector ratios;
  std::size_t dimension = 0;
};
FieldRatios field_ratio_generators(const QVector& c);

DeformationVector shear_vector(const Surface& s);

// (k_i / c_i)_i
QVector inverse_circumference_vector(const std::vector<Rational>& k, const QVector& c);
QVector normalize_first(QVector u);

}  // namespace flatkern
