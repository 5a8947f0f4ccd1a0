#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "octorb/maps.hpp"
#include "octorb/search.hpp"

namespace octorb {

using Json = nlohmann::ordered_json;

Json fieldToJson(const FieldSpec& field);
FieldSpec fieldFromJson(const Json& j);

/// Operator file format:
///   { "field": "Q" | {"p": 3},
///     "matrix": 8x8 array of scalar strings,
///     "convention": "columns-are-images" }
Json operatorToJson(const LinMap& r, const FieldSpec& field);
std::pair<LinMap, FieldSpec> operatorFromJson(const Json& j);

/// Script step format: {"prop": int, "alpha": "s"} or {"scale": "s"};
/// prop 0 stands for the classical involution and carries no alpha.
Json scriptToJson(const ReductionScript& s);
ReductionScript scriptFromJson(const Json& j);

Json fingerprintToJson(const Fingerprint& fp);
Json classifyReportToJson(const ClassifyReport& report);

Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& j);

}  // namespace octorb
