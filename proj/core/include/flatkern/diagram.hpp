#pragma once

// Prediagrams and diagrams of separatrices.
//
// Edge ends are 0..n-1. sigma is the cyclic order at the singularities
// (clockwise), tau glues the two ends of a saddle connection, and the
// positive set picks one end per saddle connection. A saddle connection is
// named by its least end. Cylinder components are orbits of sigma o tau;
// with the clockwise convention the positive component of a cylinder is its
// bottom boundary.

#include "flatkern/exactalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flatkern {

using Perm = std::vector<int>;

Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& f, const Perm& g);  // f o g
bool is_permutation(const Perm& p);
std::vector<std::vector<int>> perm_cycles(const Perm& p);  // sorted by least element
std::string cycle_notation(const Perm& p, int offset = 1);

struct Prediagram {
  int n_ends = 0;
  Perm sigma;
  Perm tau;
  std::vector<bool> positive;

  bool is_positive(int e) const { return positive[e]; }
  bool operator==(const Prediagram&) const = default;
};

struct Violation {
  std::string kind;
  std::vector<int> ends;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Prediagram& p);
void require_valid(const Prediagram& p);  // throws InvariantError

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CylinderComponent {
  int id = 0;              // least edge end
  std::vector<int> edges;  // sigma o tau order, starting at id
  bool positive = false;
};

std::string component_name(int id);  // "C<id>"
std::string saddle_name(int id);     // "S<id>"

std::vector<CylinderComponent> cylinder_components(const Prediagram& p);
// component id of every edge end
std::vector<int> component_of(const Prediagram& p);

// saddle connections (least ends), ascending
std::vector<int> saddle_connections(const Prediagram& p);

// singularities = sigma orbits, sorted by least end
std::vector<std::vector<int>> singularities(const Prediagram& p);
std::vector<int> singularity_of(const Prediagram& p);

// orbits of <sigma, tau>, each with the map old end -> new end
struct SubPrediagram {
  Prediagram pre;
  std::vector<int> ends;  // new label i came from ends[i]
};
std::vector<SubPrediagram> connected_components(const Prediagram& p);
Prediagram disjoint_union(const Prediagram& a, const Prediagram& b);
Prediagram relabel(const Prediagram& p, const Perm& phi);  // end e becomes phi[e]

bool is_stable(const Prediagram& p);

// canonical cyclic-conjugacy representative of f in S_n
Perm canonical_type(const Perm& f);
// one star (single sigma orbit of 2n ends) of type f
Prediagram star(const Perm& f);
// f for the sigma orbit through the positive end x
Perm star_permutation(const Prediagram& p, int x);

struct DiagramType {
  std::vector<Perm> components;  // one per sigma orbit, in singularity order
  std::vector<Perm> multiset() const;  // sorted
};

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DiagramType component_type(const Prediagram& p);
// (f o c_n)^-1, canonicalized
Perm reversed_type(const Perm& f);

Prediagram reversal(const Prediagram& p);

// isomorphism phi: ends of a -> ends of b with phi sigma = sigma phi,
// phi tau = tau phi, phi(E+) = E+
std::optional<Perm> are_isomorphic(const Prediagram& a, const Prediagram& b);
std::vector<Perm> all_isomorphisms(const Prediagram& a, const Prediagram& b);
inline std::vector<Perm> automorphisms(const Prediagram& p) { return all_isomorphisms(p, p); }

using Matching = std::map<int, int>;  // positive component id -> negative component id
using Metric = std::map<int, QuadraticNumber>;  // saddle connection id -> length

struct SeparatrixDiagram {
  Prediagram pre;
  Matching matching;
  Metric lengths;
  long d = 0;
};

// length of a component: sum over its ends
QuadraticNumber component_length(const Prediagram& p, const Metric& l, long d, const CylinderComponent& c);

bool matching_is_bijection(const Prediagram& p, const Matching& m);
ValidationReport validate(const SeparatrixDiagram& dg);

// does phi: a -> b carry matching and metric
bool transports(const SeparatrixDiagram& a, const SeparatrixDiagram& b, const Perm& phi, bool check_metric = true);
bool diagram_isomorphic(const SeparatrixDiagram& a, const SeparatrixDiagram& b);

// rows l^(c) - l^(m(c)) over saddle-connection variables (ascending ids)
RMatrix metric_system(const Prediagram& p, const Matching& m);
std::optional<Metric> metric_feasible(const Prediagram& p, const Matching& m);
// with extra invariance l(rho(s)) = l(s)
std::optional<Metric> metric_feasible(const Prediagram& p, const Matching& m, const Perm& rho);

// Cylinder model: each cylinder lists its bottom and top saddle connections
// left to right. Saddle connection j gets ends 2j (positive, left endpoint)
// and 2j+1. Cylinder i is matched bottom -> top.
struct CylinderModel {
  std::vector<std::vector<int>> bottoms;
  std::vector<std::vector<int>> tops;
  int n_saddles = 0;
};

struct BuiltDiagram {
  SeparatrixDiagram diagram;
  std::vector<int> cylinders;  // positive component id per cylinder, in model order
};

BuiltDiagram build_from_cylinders(const CylinderModel& model, const std::vector<QuadraticNumber>& lengths, long d);

// matching tuple notation: letters for positive components, digits for
// negative ones, both by ascending id; position i holds the letter matched
// with digit i+1
std::string matching_tuple(const Prediagram& p, const Matching& m);
Matching matching_from_tuple(const Prediagram& p, const std::string& tuple);
std::string component_letter(const Prediagram& p, int comp_id);

}  // namespace flatkern
