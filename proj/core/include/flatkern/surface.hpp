#pragma once

// The surface glued from a diagram: stratum, connectivity, CW complex, periods.

#include "flatkern/diagram.hpp"

#include <string>
#include <vector>

namespace flatkern {

struct StratumSignature {
  std::vector<int> kappa;  // descending
  int genus = 0;
  int n_saddle_connections = 0;
};

StratumSignature stratum_signature(const Prediagram& p);

bool is_connected_surface(const Prediagram& p, const Matching& m);

// Cylinders are matched pairs; `cylinders` lists their positive component ids
// in the chosen order (ascending id when not given).
struct Surface {
  SeparatrixDiagram diagram;
  std::vector<int> cylinders;
  std::map<int, QuadraticNumber> heights;  // by positive component id
  std::map<int, QuadraticNumber> twists;

  static Surface with_defaults(SeparatrixDiagram dg, std::vector<int> cylinders = {});
  int m() const { return int(cylinders.size()); }
  QuadraticNumber circumference(int i) const;
  QVector circumferences() const;
  QuadraticNumber height(int i) const { return heights.at(cylinders[i]); }
  QuadraticNumber twist(int i) const { return twists.at(cylinders[i]); }
};

ValidationReport validate(const Surface& s);

// 0-cells: singularities; 1-cells: saddle connections (ascending id) then one
// cross curve per cylinder; 2-cells: cylinders. Integer entries.
struct ChainComplexData {
  RMatrix boundary1;  // vertices x edges
  RMatrix boundary2;  // edges x faces
  std::vector<std::string> one_cells;
  std::vector<RVector> core_classes;    // bottom chain per cylinder
  std::vector<RVector> top_classes;     // top chain per cylinder
  std::size_t n_vertices = 0, n_edges = 0, n_faces = 0;
};

ChainComplexData chain_complex(const Surface& s);

struct Betti {
  std::size_t b0 = 0, b1 = 0, b2 = 0;
};
Betti betti_numbers(const ChainComplexData& cc);

struct Period {
  QuadraticNumber re, im;
};
std::vector<std::pair<std::string, Period>> periods(const Surface& s);

}  // namespace flatkern
