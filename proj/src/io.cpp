#include "octorb/io.hpp"

#include <fstream>

namespace octorb {

Json fieldToJson(const FieldSpec& field) {
  if (field.isPrimeField()) return Json{{"p", field.p}};
  return Json("Q");
}

FieldSpec fieldFromJson(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw ParseError("unknown field '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.contains("p")) return FieldSpec::prime(j.at("p").get<std::uint32_t>());
  throw ParseError("field must be \"Q\" or {\"p\": <odd prime>}");
}

Json operatorToJson(const LinMap& r, const FieldSpec& field) {
  Json matrix = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 8; ++j) row.push_back(r(i, j).str());
    matrix.push_back(row);
  }
  return Json{{"field", fieldToJson(field)},
              {"matrix", matrix},
              {"convention", "columns-are-images"}};
}

std::pair<LinMap, FieldSpec> operatorFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("matrix"))
    throw ParseError("operator JSON needs \"field\" and \"matrix\"");
  if (j.contains("convention") && j.at("convention") != "columns-are-images")
    throw ParseError("unsupported matrix convention '" +
                     j.at("convention").get<std::string>() + "'");
  FieldSpec field = fieldFromJson(j.at("field"));
  const Json& matrix = j.at("matrix");
  if (!matrix.is_array() || matrix.size() != 8) throw ParseError("matrix must be 8x8");
  LinMap r;
  for (int i = 0; i < 8; ++i) {
    const Json& row = matrix.at(i);
    if (!row.is_array() || row.size() != 8) throw ParseError("matrix must be 8x8");
    for (int c = 0; c < 8; ++c) r(i, c) = Scalar::parse(field, row.at(c).get<std::string>());
  }
  return {r, field};
}

namespace {

Json stepToJson(const ScriptStep& step) {
  if (step.kind == ScriptStep::Kind::Scale) return Json{{"scale", step.factor.str()}};
  Json j{{"prop", step.map.prop}};
  if (step.map.param) j["alpha"] = step.map.param->str();
  return j;
}

ScriptStep stepFromJson(const Json& j, const FieldSpec& field) {
  if (j.contains("scale"))
    return ScriptStep::scaleBy(Scalar::parse(field, j.at("scale").get<std::string>()));
  if (!j.contains("prop")) throw ParseError("script step needs \"prop\" or \"scale\"");
  int prop = j.at("prop").get<int>();
  if (j.contains("alpha"))
    return ScriptStep::conj(prop, Scalar::parse(field, j.at("alpha").get<std::string>()));
  return ScriptStep::conj(MapSpec::of(prop));
}

}  // namespace

Json scriptToJson(const ReductionScript& s) {
  Json steps = Json::array();
  for (const ScriptStep& step : s.steps) steps.push_back(stepToJson(step));
  return Json{{"name", s.name},
              {"source", s.source},
              {"field", fieldToJson(s.field)},
              {"input", operatorToJson(s.input, s.field)},
              {"output", operatorToJson(s.output, s.field)},
              {"steps", steps}};
}

ReductionScript scriptFromJson(const Json& j) {
  ReductionScript s;
  s.name = j.value("name", "unnamed");
  s.source = j.value("source", "");
  s.field = fieldFromJson(j.at("field"));
  s.input = operatorFromJson(j.at("input")).first;
  s.output = operatorFromJson(j.at("output")).first;
  for (const Json& stepJson : j.at("steps")) s.steps.push_back(stepFromJson(stepJson, s.field));
  return s;
}

Json fingerprintToJson(const Fingerprint& fp) {
  return Json{{"d1", fp.d1},        {"d2", fp.d2},
              {"d3", fp.d3},        {"k", fp.k},
              {"img_square", fp.imgSquare}, {"img_unital", fp.imgUnital}};
}

Json classifyReportToJson(const ClassifyReport& report) {
  Json j;
  j["image"] = report.imageTag;
  j["field"] = fieldToJson(report.field);
  j["image_exact"] = report.requireImageExact;
  j["basis_order"] = "e11,e12,e21,e22,ve11,ve12,ve21,ve22";
  j["candidates"] = report.candidates;
  j["rb_count"] = report.rbCount;
  Json fps = Json::array();
  for (const auto& [fp, count] : report.fingerprints) {
    Json entry = fingerprintToJson(fp);
    entry["count"] = count;
    fps.push_back(entry);
  }
  j["fingerprints"] = fps;
  j["fingerprints_all_in_catalog"] = report.fingerprintsAllInCatalog;
  Json novel = Json::array();
  for (const Fingerprint& fp : report.novelFingerprints) novel.push_back(fingerprintToJson(fp));
  j["novel_fingerprints"] = novel;
  j["orbits_computed"] = report.orbitsComputed;
  j["orbit_budget_hit"] = report.orbitBudgetHit;
  if (report.orbitsComputed) {
    Json orbits = Json::array();
    for (const OrbitSummary& o : report.orbits) {
      Json entry;
      entry["canonical"] = o.canonicalEncoding;
      entry["members_found"] = o.members;
      entry["orbit_size"] = o.orbitSize;
      entry["fingerprint"] = fingerprintToJson(o.fp);
      entry["catalog_cases"] = o.catalogCases;
      orbits.push_back(entry);
    }
    j["orbits"] = orbits;
    j["orbit_count"] = report.orbits.size();
    j["unmatched_orbits"] = report.unmatchedOrbitCount;
  }
  return j;
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

void writeJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace octorb
