#pragma once

// Combinatorial Prym involutions rho: Gamma -> reversal(Gamma).

#include "flatkern/surface.hpp"

#include <array>

namespace flatkern {

struct FixedCounts {
  int rho0 = 0;     // fixed singularities
  int tau_rho = 0;  // saddle connections reversed onto themselves
  int rho_m = 0;    // fixed cylinders
  int total() const { return rho0 + tau_rho + 2 * rho_m; }
  bool operator==(const FixedCounts&) const = default;
};

struct PrymInvolution {
  Perm rho;
  Perm rho0;  // on singularity indices
  Perm pi;    // on cylinder indices (surface order)
  FixedCounts fixed;
  int conjugate_of = -1;  // index of the first Aut-conjugate involution, or -1
};

// The reversed diagram: complement positive set, inverse matching.
SeparatrixDiagram reversed_diagram(const SeparatrixDiagram& dg);

// structural: commutes with sigma and tau, sends E+ to E-, squares to 1
bool is_structural_involution(const Prediagram& p, const Perm& rho);

FixedCounts fixed_point_count(const Surface& s, const Perm& rho);
Perm cylinder_permutation(const Surface& s, const Perm& rho);
Perm singularity_permutation(const Prediagram& p, const Perm& rho);

struct InvolutionCheck {
  bool structural = false, transports_matching = false, preserves_metric = false, formula = false;
  bool ok() const { return structural && transports_matching && preserves_metric && formula; }
};
InvolutionCheck check_involution(const Surface& s, const Perm& rho, bool check_metric = true);

// all rho passing check_involution, sorted by rho
std::vector<PrymInvolution> find_prym_involutions(const Surface& s);
PrymInvolution describe_involution(const Surface& s, const Perm& rho);

}  // namespace flatkern
