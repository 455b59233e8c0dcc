#pragma once

// Bundled diagrams and twist models.

#include "flatkern/serialize.hpp"

#include <filesystem>

namespace flatkern {

struct NamedMetric {
  long d = 0;
  Metric lengths;
};

struct PresetEntry {
  std::string id;
  std::string description;
  SeparatrixDiagram diagram;  // carries the unit-rational metric
  std::vector<int> cylinders;  // positive component ids in figure order
  std::string locus = "full";  // "full" or "prym"
  std::optional<Perm> involution;
  std::map<std::string, NamedMetric> metrics;
  StratumSignature stratum;
  std::optional<FixedCounts> fixed_counts;
  std::string matching_tuple;
  // integer coefficients k_i of vectors (k_i / c_i)
  std::map<std::string, std::vector<std::vector<int>>> certificates;

  bool has_matching() const { return !diagram.matching.empty(); }
  Surface surface(const std::string& metric = "unit-rational") const;
};

struct UnknownPreset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& preset_ids();

// built from the cylinder models in code
PresetEntry build_preset(const std::string& id);

json to_json(const PresetEntry& p);
PresetEntry preset_from_json(const json& j);

// FLATKERN_PRESETS, then the source tree, then the install prefix
std::filesystem::path preset_directory();
PresetEntry load_preset(const std::string& id);

// Prym(1,1,1,1) base prediagram and its designated involution
Prediagram prym_base_prediagram();
Perm prym_base_involution();

// two-singularity test fixture (four cylinders, kappa (2,2))
BuiltDiagram hyperelliptic_fixture();

}  // namespace flatkern
