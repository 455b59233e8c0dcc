#pragma once

// Exhaustive searches over matchings and stable prediagrams.

#include "flatkern/prym.hpp"

#include <optional>
#include <string>

namespace flatkern {

enum class Kind { First, Second };
std::string kind_name(Kind k);

enum class Filter { Involution, Connectivity, Metric };

struct SearchSpec {
  Prediagram base;
  std::optional<Perm> involution;  // designated rho; all involutions when empty
  int required_fixed_cylinders = 2;
  std::optional<Kind> kind_filter;
  bool require_connected = true;
  bool require_metric = true;
  std::vector<Filter> order{Filter::Involution, Filter::Connectivity, Filter::Metric};
};

struct Survivor {
  Matching matching;
  std::string tuple;
  Metric metric;  // rational witness, rho-invariant
  Perm rho;
  Kind kind = Kind::First;
  std::vector<int> fixed_cylinders;   // positive component ids
  std::vector<std::string> members;   // tuples of the whole class
};

struct Rejection {
  Matching matching;
  std::string tuple;
  std::string reason;  // no-involution, extra-fixed-cylinder, disconnected, metric-infeasible,
                       // isomorphic-duplicate, other-kind
  std::string duplicate_of;
};

struct ClassificationResult {
  std::vector<Survivor> survivors;
  std::vector<Rejection> rejected;
  std::size_t candidates = 0;
  std::map<std::string, std::size_t> reason_counts() const;
  const Rejection* find_rejection(const std::string& tuple) const;
};

ClassificationResult enumerate_matchings(const SearchSpec& spec);

// first iff the two fixed cylinders sit on one rho0-orbit of singularities
Kind classify_kind(const Prediagram& base, const Matching& m, const Perm& rho);

struct StablePrediagram {
  Prediagram pre;
  std::vector<Perm> types;  // per star, in label order
};

// stable alternating prediagrams with sigma-orbit sizes 2(k+1), up to
// isomorphism and reversal, that admit a connected matching with a metric
std::vector<StablePrediagram> enumerate_stable_prediagrams(const std::vector<int>& kappa);

// canonical representatives of S_n under cyclic conjugation
std::vector<Perm> canonical_types(int n);

}  // namespace flatkern
