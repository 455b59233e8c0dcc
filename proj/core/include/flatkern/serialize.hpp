#pragma once

// Canonical JSON forms. nlohmann's default object is std::map, so keys come
// out sorted and dump() is byte-stable.

#include "flatkern/enumerator.hpp"
#include "flatkern/twistspace.hpp"

#include <json.hpp>

namespace flatkern {

using json = nlohmann::json;

inline constexpr const char* kSchema = "flatkern/1";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const QuadraticNumber& x);
QuadraticNumber quadratic_from_json(const json& j, std::optional<long> expect_d = std::nullopt);

json to_json(const Prediagram& p);
json to_json(const SeparatrixDiagram& dg);
SeparatrixDiagram diagram_from_json(const json& j);

json to_json(const Surface& s);  // diagram JSON + heights/twists
Surface surface_from_json(const json& j);

json metric_to_json(const Metric& l);
Metric metric_from_json(const json& j, long d);

json vector_to_json(const QVector& v);
QVector vector_from_json(const json& j, long d);

json to_json(const ValidationReport& r);
json to_json(const StratumSignature& s);
json to_json(const FixedCounts& f);
json involution_report(const Surface& s, const PrymInvolution& inv);
json homology_report(const Surface& s);
json to_json(const ClassificationResult& r, const Prediagram& base);
json to_json(const DeformationVector& v);

int parse_component_id(const std::string& s);  // "C<k>"
int parse_saddle_id(const std::string& s);     // "S<k>"

std::string dump_canonical(const json& j);  // 2-space indent, trailing newline

}  // namespace flatkern
