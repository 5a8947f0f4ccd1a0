#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "octorb/catalog.hpp"
#include "octorb/maps.hpp"

namespace octorb {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool allPass() const {
    for (const CheckLine& line : lines)
      if (!line.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
};

Scalar randomScalar(const FieldSpec& field, std::mt19937_64& rng);
Octo randomOcto(const FieldSpec& field, std::mt19937_64& rng);
LinMap randomLinMap(const FieldSpec& field, std::mt19937_64& rng);

/// Default rational parameter samples for the Q-side sweeps.
std::vector<Scalar> rationalParamSamples();

/// Algebra soundness: unit law, alternativity on all basis triples,
/// quadraticity and norm multiplicativity on random elements, involution
/// laws, subalgebra catalog.
CheckReport verifyAlgebra(const FieldSpec& field, std::uint64_t seed, int samples = 200);

/// Every Proposition 1-17 map and the classical involution verifies as
/// exactly its claimed kind: full parameter sweep over F5, rational samples
/// over Q.
CheckReport verifyMaps();

/// Every catalog case of the source passes the RB self-check and hits the
/// image subalgebra its source lemma names. For prime fields the sweep is
/// exhaustive over admissible parameters; over Q the given samples are used.
CheckReport verifyCatalog(Source source, const FieldSpec& field,
                          std::span<const Scalar> paramSamples);

/// All shipped reduction scripts replay to their declared outputs.
CheckReport verifyScripts();

}  // namespace octorb
