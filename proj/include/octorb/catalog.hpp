#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "octorb/algebra.hpp"
#include "octorb/linmap.hpp"

namespace octorb {

/// Where a canonical operator comes from in the classification.
enum class Source {
  Prop18,
  Lemma1,
  Lemma2,
  Lemma3,
  Lemma4,
  Lemma5,
  Lemma6,
  Lemma7,
  Corollary1,
  Corollary2,
  Corollary3,
  Corollary4,
  Corollary5,
  Corollary6,
  Theorem1
};

const char* sourceName(Source source);
Source parseSource(const std::string& name);
std::span<const Source> allSources();

/// Number of cases listed under the source.
int caseCount(Source source);

enum class Constraint { AlphaNonzero, BetaNonzero, AlphaNotMinusOne };

/// A symbolic descriptor of one canonical operator: (source, case number)
/// plus the parameter values where the case is a family.
struct CaseSpec {
  Source source = Source::Theorem1;
  int caseNo = 1;  // 1-based case number within the source list
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;

  std::string id() const;  // e.g. "theorem1-case-07"
};

int caseParamCount(Source source, int caseNo);
std::vector<Constraint> caseConstraints(Source source, int caseNo);

/// Whether the given parameter values satisfy the case constraints over the
/// field (e.g. alpha != 0, alpha != -1).
bool paramsAdmissible(const CaseSpec& spec, const FieldSpec& field);

/// Builds the operator the case states; zero on unspecified basis elements.
/// Throws ConstraintViolation on inadmissible parameters and
/// RbSelfCheckFailed if the built matrix fails the RB identity (which would
/// mean a transcription bug, so the constructor self-verifies).
LinMap buildCase(const CaseSpec& spec, const FieldSpec& field);

/// The image subalgebra the case's source lemma classifies by, when the
/// source fixes one (Lemma1..7 and their corollaries).
std::optional<SubalgebraName> sourceImage(Source source);

struct CatalogEntry {
  CaseSpec spec;
  LinMap op;
};

/// One operator per (case, admissible parameter assignment) drawn from the
/// sample list; parameter-free cases ignore the samples. Inadmissible samples
/// are skipped.
std::vector<CatalogEntry> enumerateCatalog(Source source, const FieldSpec& field,
                                           std::span<const Scalar> paramSamples);

/// Full parameter sweep over a prime field: every admissible residue
/// combination for every case.
std::vector<CatalogEntry> enumerateCatalogFullSweep(Source source, const FieldSpec& field);

/// The stated nilpotency behavior of a Corollary 6 operator.
enum class Remark1 {
  SquareZero,    // R^2 = 0: cases (1)-(4), (6)-(20)
  CubeZeroOnly,  // R^2 != 0, R^3 = 0: cases (5), (21)-(24)
  Unstated       // case (25): the remark stops at (24)
};

/// Throws OutOfRemarkScope unless spec.source == Corollary6.
Remark1 expectedFingerprint(const CaseSpec& spec);

}  // namespace octorb
