// Command-line front end: verification, catalog dumping, enumeration, orbit
// reduction and script replay as reproducible batch runs.
//
// Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
// 2 = usage or I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "octorb/io.hpp"
#include "octorb/verify.hpp"

namespace {

using namespace octorb;

constexpr std::uint64_t kDefaultSeed = 20240917;

struct FieldArgs {
  std::string field = "Q";
  std::uint32_t p = 0;

  FieldSpec resolve() const {
    if (field == "Q" || field == "q") return FieldSpec::rationals();
    if (field == "fp" || field == "Fp") {
      if (p == 0) throw CLI::ValidationError("--field fp requires --p <odd prime>");
      return FieldSpec::prime(p);
    }
    throw CLI::ValidationError("--field must be Q or fp");
  }
};

void addFieldFlags(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--field", args.field, "base field: Q or fp")->capture_default_str();
  cmd->add_option("--p", args.p, "prime for --field fp");
}

int printReport(const CheckReport& report, bool json, const std::string& banner) {
  if (json) {
    Json j;
    j["suite"] = banner;
    j["basis_order"] = "e11,e12,e21,e22,ve11,ve12,ve21,ve22";
    Json lines = Json::array();
    for (const CheckLine& line : report.lines)
      lines.push_back(Json{{"check", line.name}, {"pass", line.pass}, {"detail", line.detail}});
    j["checks"] = lines;
    j["all_pass"] = report.allPass();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "== " << banner << " ==\n";
    for (const CheckLine& line : report.lines) {
      std::cout << (line.pass ? "[ ok ] " : "[FAIL] ") << line.name;
      if (!line.detail.empty()) std::cout << "  (" << line.detail << ")";
      std::cout << "\n";
    }
    std::cout << (report.allPass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return report.allPass() ? 0 : 1;
}

std::vector<std::string> splitOn(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string token;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(token);
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  parts.push_back(token);
  return parts;
}

// Kernel vectors: segments separated by ';', each one either a basis name
// (so "e11,e12,ve12" lists three of them) or a full octonion as 8
// comma-separated scalar strings.
std::vector<Octo> parseKernelVectors(const std::string& list, const FieldSpec& field) {
  std::vector<Octo> out;
  auto nameIndex = [](const std::string& token) {
    for (int i = 0; i < 8; ++i)
      if (token == basisName(i)) return i;
    return -1;
  };
  for (const std::string& segment : splitOn(list, ';')) {
    if (segment.empty()) continue;
    std::vector<std::string> tokens = splitOn(segment, ',');
    bool allNames = true;
    for (const std::string& t : tokens)
      if (nameIndex(t) < 0) allNames = false;
    if (allNames) {
      for (const std::string& t : tokens) out.push_back(basisOcto(nameIndex(t)));
      continue;
    }
    if (tokens.size() != 8)
      throw CLI::ValidationError("--kernel vector '" + segment +
                                 "' must be a basis name or 8 comma-separated scalars");
    Octo v;
    for (int i = 0; i < 8; ++i) v(i) = Scalar::parse(field, tokens[i]);
    out.push_back(v);
  }
  return out;
}

std::string describeWitness(const RbWitness& w) {
  std::string s = "first failing pair (" + std::string(basisName(w.i)) + "," + basisName(w.j) +
                  "): lhs = [";
  for (int c = 0; c < 8; ++c) s += (c ? "," : "") + w.lhs(c).str();
  s += "], rhs = [";
  for (int c = 0; c < 8; ++c) s += (c ? "," : "") + w.rhs(c).str();
  return s + "]";
}

std::uint64_t envBudget(std::uint64_t fallback) {
  if (const char* env = std::getenv("OCTORB_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact split-octonion algebra, the weight-zero Rota-Baxter operator catalog, "
      "and a finite-field classification engine"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON reports");

  // verify-algebra
  auto* verifyAlgebraCmd = app.add_subcommand("verify-algebra", "algebra soundness suite");
  FieldArgs vaField;
  addFieldFlags(verifyAlgebraCmd, vaField);
  std::uint64_t seed = kDefaultSeed;
  verifyAlgebraCmd->add_option("--seed", seed, "seed for randomized identities")
      ->capture_default_str();

  // verify-maps
  auto* verifyMapsCmd =
      app.add_subcommand("verify-maps", "all catalog (anti)automorphisms verify as claimed");

  // verify-catalog
  auto* verifyCatalogCmd =
      app.add_subcommand("verify-catalog", "all catalog operators pass the RB identity");
  FieldArgs vcField;
  addFieldFlags(verifyCatalogCmd, vcField);
  std::string vcSource = "theorem1";
  verifyCatalogCmd->add_option("--source", vcSource,
                               "prop18, lemma1..lemma7, corollary1..corollary6 or theorem1")
      ->capture_default_str();

  // check
  auto* checkCmd = app.add_subcommand("check", "check the RB identity for an operator file");
  std::string checkPath;
  checkCmd->add_option("file", checkPath, "operator JSON file")->required();

  // fingerprint
  auto* fingerprintCmd = app.add_subcommand("fingerprint", "conjugation-invariant fingerprint");
  std::string fingerprintPath;
  fingerprintCmd->add_option("file", fingerprintPath, "operator JSON file")->required();

  // catalog-dump
  auto* dumpCmd = app.add_subcommand("catalog-dump", "emit operator JSON files, one per case");
  FieldArgs dumpField;
  addFieldFlags(dumpCmd, dumpField);
  std::string dumpSource = "theorem1";
  std::string dumpDir = ".";
  std::vector<std::string> dumpAlpha = {"1"};
  dumpCmd->add_option("--source", dumpSource, "catalog source")->capture_default_str();
  dumpCmd->add_option("--out", dumpDir, "output directory")->capture_default_str();
  dumpCmd->add_option("--alpha", dumpAlpha,
                      "parameter values tried for parameterized cases (first admissible wins)")
      ->capture_default_str();

  // enumerate
  auto* enumCmd = app.add_subcommand("enumerate", "exhaustive RB search over a prime field");
  FieldArgs enumField;
  enumField.field = "fp";
  enumField.p = 3;
  addFieldFlags(enumCmd, enumField);
  std::string enumImage = "N1";
  std::string enumKernel;
  bool enumExact = false;
  bool enumOrbits = false;
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  enumCmd->add_option("--image", enumImage, "image subalgebra: N1,I1,I2,N2,N3,I3,S4")
      ->capture_default_str();
  enumCmd->add_option("--kernel", enumKernel, "vectors forced into ker(R): basis names or 8-scalar vectors, ; separated");
  enumCmd->add_flag("--exact", enumExact, "require the image to equal the subalgebra");
  enumCmd->add_flag("--orbits", enumOrbits, "merge results into conjugation orbits");
  enumCmd->add_option("--budget", budget, "candidate budget (env OCTORB_BUDGET overrides)")
      ->capture_default_str();
  enumCmd->add_option("--threads", threads, "worker threads")->capture_default_str();

  // reduce
  auto* reduceCmd = app.add_subcommand("reduce", "canonical orbit representative of an operator");
  std::string reducePath;
  std::uint64_t orbitCap = 2'000'000;
  reduceCmd->add_option("file", reducePath, "operator JSON file (prime field)")->required();
  reduceCmd->add_option("--orbit-cap", orbitCap, "orbit size cap")->capture_default_str();

  // replay-script
  auto* replayCmd = app.add_subcommand("replay-script", "replay a reduction script");
  std::string replayPath;
  std::string replayShipped;
  bool replayList = false;
  replayCmd->add_option("file", replayPath, "script JSON file");
  replayCmd->add_option("--shipped", replayShipped, "name of a shipped script");
  replayCmd->add_flag("--list", replayList, "list shipped scripts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verifyAlgebraCmd->parsed()) {
      FieldSpec field = vaField.resolve();
      return printReport(verifyAlgebra(field, seed), json,
                         "algebra soundness over " + field.str());
    }

    if (verifyMapsCmd->parsed()) {
      return printReport(verifyMaps(), json, "catalog maps (full F_5 sweep, Q samples)");
    }

    if (verifyCatalogCmd->parsed()) {
      FieldSpec field = vcField.resolve();
      Source source = parseSource(vcSource);
      std::vector<Scalar> samples = rationalParamSamples();
      return printReport(verifyCatalog(source, field, samples), json,
                         std::string(sourceName(source)) + " catalog over " + field.str());
    }

    if (checkCmd->parsed()) {
      auto [op, field] = operatorFromJson(readJsonFile(checkPath));
      auto witness = rbWitness(op);
      if (json) {
        Json j;
        j["file"] = checkPath;
        j["field"] = fieldToJson(field);
        j["rb"] = !witness.has_value();
        if (witness) {
          Json lhs = Json::array(), rhs = Json::array();
          for (int c = 0; c < 8; ++c) {
            lhs.push_back(witness->lhs(c).str());
            rhs.push_back(witness->rhs(c).str());
          }
          j["witness"] = Json{
              {"i", basisName(witness->i)}, {"j", basisName(witness->j)}, {"lhs", lhs}, {"rhs", rhs}};
        }
        std::cout << j.dump(2) << "\n";
      } else if (witness) {
        std::cout << "NOT a Rota-Baxter operator; " << describeWitness(*witness) << "\n";
      } else {
        std::cout << "Rota-Baxter identity holds (weight 0) over " << field.str() << "\n";
      }
      return witness ? 1 : 0;
    }

    if (fingerprintCmd->parsed()) {
      auto [op, field] = operatorFromJson(readJsonFile(fingerprintPath));
      Fingerprint fp = fingerprint(op);
      if (json) {
        Json j = fingerprintToJson(fp);
        j["field"] = fieldToJson(field);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << fp.str() << "\n";
        std::cout << "R^2 " << (fp.d2 ? "!= 0" : "= 0");
        if (fp.d2) std::cout << ", R^3 " << (fp.d3 ? "!= 0" : "= 0");
        std::cout << "\n";
      }
      return 0;
    }

    if (dumpCmd->parsed()) {
      FieldSpec field = dumpField.resolve();
      Source source = parseSource(dumpSource);
      std::filesystem::create_directories(dumpDir);
      std::vector<Scalar> samples;
      for (const std::string& text : dumpAlpha) samples.push_back(Scalar::parse(field, text));
      int written = 0;
      for (int caseNo = 1; caseNo <= caseCount(source); ++caseNo) {
        CaseSpec spec{source, caseNo, std::nullopt, std::nullopt};
        int needed = caseParamCount(source, caseNo);
        LinMap op;
        bool built = false;
        if (needed == 0) {
          op = buildCase(spec, field);
          built = true;
        } else {
          for (const Scalar& a : samples) {
            spec.alpha = a;
            spec.beta = needed >= 2 ? std::optional<Scalar>(a) : std::nullopt;
            if (!paramsAdmissible(spec, field)) continue;
            op = buildCase(spec, field);
            built = true;
            break;
          }
        }
        if (!built) {
          std::cerr << spec.id() << ": no admissible parameter among the samples\n";
          return 2;
        }
        Json j = operatorToJson(op, field);
        j["case"] = spec.id();
        if (spec.alpha) j["alpha"] = spec.alpha->str();
        if (spec.beta) j["beta"] = spec.beta->str();
        writeJsonFile((std::filesystem::path(dumpDir) / (spec.id() + ".json")).string(), j);
        ++written;
      }
      std::cout << "wrote " << written << " operator files to " << dumpDir << "\n";
      return 0;
    }

    if (enumCmd->parsed()) {
      SearchSpec spec = SearchSpec::forImage(enumField.resolve(), parseSubalgebraName(enumImage));
      spec.requireImageExact = enumExact;
      if (!enumKernel.empty()) spec.kernelContains = parseKernelVectors(enumKernel, spec.field);
      spec.budget = envBudget(budget);
      spec.threads = threads;
      ClassifyReport report = classifyRun(spec, enumOrbits);
      if (json) {
        std::cout << classifyReportToJson(report).dump(2) << "\n";
      } else {
        std::cout << "image " << report.imageTag << (report.requireImageExact ? " (exact)" : "")
                  << " over " << report.field.str() << ": scanned " << report.candidates
                  << " candidates, " << report.rbCount << " RB operators\n";
        for (const auto& [fp, count] : report.fingerprints)
          std::cout << "  " << fp.str() << " x" << count << "\n";
        std::cout << "fingerprints all in catalog: "
                  << (report.fingerprintsAllInCatalog ? "yes" : "NO") << "\n";
        if (report.orbitsComputed) {
          std::cout << "orbits: " << report.orbits.size() << " (" << report.unmatchedOrbitCount
                    << " unmatched)\n";
          for (const OrbitSummary& o : report.orbits) {
            std::cout << "  orbit size " << o.orbitSize << ", found " << o.members << ", "
                      << o.fp.str() << ", cases:";
            for (const std::string& c : o.catalogCases) std::cout << " " << c;
            if (o.catalogCases.empty()) std::cout << " (unmatched)";
            std::cout << "\n";
          }
        } else if (report.orbitBudgetHit) {
          std::cout << "orbit analysis skipped: budget exceeded\n";
        }
      }
      bool ok = report.fingerprintsAllInCatalog &&
                (!report.orbitsComputed || report.unmatchedOrbitCount == 0);
      return ok ? 0 : 1;
    }

    if (reduceCmd->parsed()) {
      auto [op, field] = operatorFromJson(readJsonFile(reducePath));
      OrbitStore store(field, orbitCap);
      LinMap canonical = orbitReduce(op, store);
      Json j = operatorToJson(canonical, field);
      j["orbit_size"] = store.orbitSize(*store.lookup(canonical));
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (replayCmd->parsed()) {
      if (replayList) {
        for (const ReductionScript& s : shippedScripts())
          std::cout << s.name << "  [" << s.field.str() << "]  " << s.source << "\n";
        return 0;
      }
      ReductionScript script;
      if (!replayShipped.empty()) {
        script = shippedScript(replayShipped);
      } else if (!replayPath.empty()) {
        script = scriptFromJson(readJsonFile(replayPath));
      } else {
        std::cerr << "replay-script needs a file, --shipped <name>, or --list\n";
        return 2;
      }
      LinMap result = runScript(script, script.input);
      bool match = exactEq(result, script.output);
      if (json) {
        Json j;
        j["script"] = script.name;
        j["matches_declared_output"] = match;
        j["result"] = operatorToJson(result, script.field);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "script " << script.name << ": replay "
                  << (match ? "matches" : "DOES NOT match") << " the declared output\n";
      }
      return match ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
