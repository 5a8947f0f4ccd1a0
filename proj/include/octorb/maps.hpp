#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "octorb/linmap.hpp"

namespace octorb {

enum class MapKind { Automorphism, Antiautomorphism, Involution };

const char* mapKindName(MapKind kind);

/// One catalog (anti)automorphism: proposition number 1..17, or 0 for the
/// classical involution. Propositions 6, 7, 8 require a nonzero parameter;
/// 2,3,9,10,11,13,14,15,16,17 accept any parameter; the rest take none.
struct MapSpec {
  int prop = 0;
  std::optional<Scalar> param;

  static MapSpec classical() { return {0, std::nullopt}; }
  static MapSpec of(int prop) { return {prop, std::nullopt}; }
  static MapSpec of(int prop, Scalar alpha) { return {prop, std::move(alpha)}; }
};

/// What the catalog claims each map is.
MapKind claimedKind(const MapSpec& spec);

bool propTakesParam(int prop);
bool propRequiresNonzero(int prop);

/// Builds the 8x8 matrix realizing the proposition's displayed action.
/// Propositions 1 and 5 list only part of the basis images; the rest are
/// solved from the square-identity constraint plus the antiautomorphism
/// equations, and the build fails rather than guess if no unique involutive
/// completion exists. Throws MissingParam / ZeroParamForbidden on bad params.
LinMap buildMap(const MapSpec& spec);

/// Checks the claimed kind exactly on all 64 basis pairs:
///   automorphism      M(xy) = M(x)M(y), M invertible
///   antiautomorphism  M(xy) = M(y)M(x), M invertible
///   involution        antiautomorphism with M^2 = id
bool verifyMap(const LinMap& m, MapKind claimed);

struct ScriptStep {
  enum class Kind { Conjugate, Scale };
  Kind kind = Kind::Conjugate;
  MapSpec map;    // when kind == Conjugate
  Scalar factor;  // when kind == Scale

  static ScriptStep conj(MapSpec spec) { return {Kind::Conjugate, std::move(spec), Scalar(0)}; }
  static ScriptStep conj(int prop) { return conj(MapSpec::of(prop)); }
  static ScriptStep conj(int prop, Scalar alpha) { return conj(MapSpec::of(prop, std::move(alpha))); }
  static ScriptStep scaleBy(Scalar factor) { return {Kind::Scale, {}, std::move(factor)}; }
};

/// A replayable conjugation/scaling chain transcribed from one proof step,
/// with its declared input and output operators as the regression gate.
struct ReductionScript {
  std::string name;    // stable id, e.g. "lemma1-merge"
  std::string source;  // which proof step this transcribes
  FieldSpec field;
  LinMap input;
  LinMap output;
  std::vector<ScriptStep> steps;
};

/// Left-fold of the steps over r. When r satisfies the RB identity the fold
/// asserts it is preserved after every step (RbSelfCheckFailed otherwise).
LinMap runSteps(const LinMap& r, std::span<const ScriptStep> steps);

inline LinMap runScript(const ReductionScript& s, const LinMap& r) {
  return runSteps(r, s.steps);
}

/// Replays the script on its declared input and compares with the declared
/// output, exactly.
bool replayMatchesDeclared(const ReductionScript& s);

/// The transcribed proof-step scripts shipped with the library.
const std::vector<ReductionScript>& shippedScripts();

const ReductionScript& shippedScript(const std::string& name);

}  // namespace octorb
