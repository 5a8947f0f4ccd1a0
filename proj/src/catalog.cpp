#include "octorb/catalog.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <map>

namespace octorb {

namespace {

// Symbolic matrix entries: every catalog case writes its images with
// coefficients in {1, -1, alpha, -alpha, beta, -beta}.
enum class Sym { One, MinusOne, Alpha, MinusAlpha, Beta, MinusBeta };

struct Term {
  int target;
  Sym coeff;
};

struct Action {
  int domain;
  std::vector<Term> image;
};

struct CaseDef {
  int paramCount = 0;  // 0, 1 (alpha), or 2 (alpha and beta)
  std::vector<Constraint> constraints;
  std::vector<Action> actions;
};

using CaseList = std::vector<CaseDef>;

constexpr Sym kOne = Sym::One;
constexpr Sym kNeg = Sym::MinusOne;
constexpr Sym kA = Sym::Alpha;
constexpr Sym kNegA = Sym::MinusAlpha;
constexpr Sym kB = Sym::Beta;
constexpr Sym kNegB = Sym::MinusBeta;

CaseList prop18Cases() {
  return {
      {0, {}, {{kE21, {{kE11, kOne}}}}},
      {0, {}, {{kE21, {{kE12, kOne}}}}},
      {0, {}, {{kE21, {{kE11, kOne}}}, {kE22, {{kE12, kOne}}}}},
      {0, {}, {{kE21, {{kE11, kNeg}}}, {kE11, {{kE12, kOne}}}}},
  };
}

CaseList lemma1Cases() {
  return {
      {0, {}, {{kE21, {{kE12, kOne}}}}},
      {0, {}, {{kVe22, {{kE12, kOne}}}}},
  };
}

CaseList lemma2Cases() {
  return {
      {0, {}, {{kE21, {{kE11, kOne}}}}},
  };
}

CaseList lemma3Cases() {
  return {
      {0, {}, {{kE21, {{kE11, kOne}}}, {kE22, {{kE12, kOne}}}}},
      {0, {}, {{kE21, {{kE11, kNeg}}}, {kE11, {{kE12, kOne}}}}},
      {0, {}, {{kE21, {{kE11, kOne}}}, {kVe21, {{kE12, kOne}}}}},
      {1, {Constraint::AlphaNonzero}, {{kVe11, {{kE11, kA}}}, {kVe21, {{kE12, kOne}}}}},
      {0, {}, {{kVe11, {{kE12, kOne}}}, {kVe21, {{kE11, kOne}}}}},
      {1, {Constraint::AlphaNonzero}, {{kVe21, {{kE11, kA}}}, {kVe22, {{kE12, kOne}}}}},
  };
}

CaseList corollary1Cases() {
  return {
      {0, {}, {{kE21, {{kE11, kOne}}}, {kE22, {{kE12, kOne}}}}},
      {0, {}, {{kE21, {{kE11, kNeg}}}, {kE11, {{kE12, kOne}}}}},
      {0, {}, {{kE21, {{kE11, kOne}}}, {kVe21, {{kE12, kOne}}}}},
      {0, {}, {{kVe11, {{kE11, kOne}}}, {kVe21, {{kE12, kOne}}}}},
      {0, {}, {{kVe11, {{kE12, kOne}}}, {kVe21, {{kE11, kOne}}}}},
      {0, {}, {{kVe21, {{kE11, kOne}}}, {kVe22, {{kE12, kOne}}}}},
  };
}

CaseList lemma4Cases() {
  return {
      {1,
       {Constraint::AlphaNonzero},
       {{kVe11, {{kVe22, kOne}}}, {kVe21, {{kVe22, kOne}, {kVe12, kA}}}}},
      {0, {}, {{kE21, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}}}}},
      {0,
       {},
       {{kE11, {{kVe22, kOne}, {kVe12, kOne}}},
        {kE12, {{kVe22, kOne}, {kVe12, kOne}}},
        {kE21, {{kVe22, kNeg}, {kVe12, kNeg}}},
        {kE22, {{kVe22, kNeg}, {kVe12, kNeg}}},
        {kVe11, {{kVe12, kNeg}}},
        {kVe21, {{kVe12, kOne}}}}},
      {0, {}, {{kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}, {kVe12, kOne}}}}},
      {1, {Constraint::AlphaNonzero}, {{kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kA}}}}},
      {1, {Constraint::AlphaNonzero}, {{kVe11, {{kVe22, kOne}}}, {kVe21, {{kVe12, kA}}}}},
  };
}

CaseList corollary2Cases() {
  return {
      {0, {}, {{kE21, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}}}}},
      {0,
       {},
       {{kE11, {{kVe22, kOne}, {kVe12, kOne}}},
        {kE12, {{kVe22, kOne}, {kVe12, kOne}}},
        {kE21, {{kVe22, kNeg}, {kVe12, kNeg}}},
        {kE22, {{kVe22, kNeg}, {kVe12, kNeg}}},
        {kVe11, {{kVe12, kNeg}}},
        {kVe21, {{kVe12, kOne}}}}},
      {0, {}, {{kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}, {kVe12, kOne}}}}},
      {1, {Constraint::AlphaNonzero}, {{kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kA}}}}},
  };
}

CaseList lemma5Cases() {
  return {
      {1,
       {Constraint::AlphaNonzero},
       {{kE21, {{kE12, kA}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}, {kVe12, kOne}}}}},
      {1,
       {Constraint::AlphaNonzero},
       {{kE21, {{kE12, kA}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}}}}},
      {0,
       {},
       {{kE21, {{kE12, kOne}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}, {kE12, kOne}}}}},
      {1,
       {Constraint::AlphaNonzero},
       {{kE21, {{kE12, kA}}},
        {kVe11, {{kVe12, kOne}}},
        {kVe21, {{kVe22, kOne}, {kVe12, kOne}, {kE12, kOne}}}}},
  };
}

CaseList corollary3Cases() {
  return {
      {0,
       {},
       {{kE21, {{kE12, kOne}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}, {kVe12, kOne}}}}},
      {0, {}, {{kE21, {{kE12, kOne}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}}}}},
      {0,
       {},
       {{kE21, {{kE12, kOne}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kVe22, kOne}, {kE12, kOne}}}}},
      {1,
       {Constraint::AlphaNonzero},
       {{kE21, {{kE12, kA}}},
        {kVe11, {{kVe12, kOne}}},
        {kVe21, {{kVe22, kOne}, {kVe12, kOne}, {kE12, kOne}}}}},
  };
}

CaseList lemma6Cases() {
  return {
      {0, {}, {{kE21, {{kVe12, kOne}}}, {kVe11, {{kE11, kOne}}}, {kVe21, {{kVe22, kOne}}}}},
      {2,
       {Constraint::AlphaNonzero, Constraint::BetaNonzero},
       {{kE21, {{kE11, kA}}}, {kVe11, {{kVe12, kB}}}, {kVe21, {{kVe22, kOne}}}}},
      {0, {}, {{kE21, {{kVe22, kNeg}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kE11, kOne}}}}},
  };
}

CaseList corollary4Cases() {
  return {
      {0, {}, {{kE21, {{kVe12, kOne}}}, {kVe11, {{kE11, kOne}}}, {kVe21, {{kVe22, kOne}}}}},
      {1,
       {Constraint::AlphaNonzero},
       {{kE21, {{kE11, kOne}}}, {kVe11, {{kVe12, kA}}}, {kVe21, {{kVe22, kOne}}}}},
      {0, {}, {{kE21, {{kVe22, kNeg}}}, {kVe11, {{kVe12, kOne}}}, {kVe21, {{kE11, kOne}}}}},
  };
}

CaseList lemma7Cases() {
  return {
      {0,
       {},
       {{kE11, {{kE12, kOne}}},
        {kE21, {{kE11, kNeg}}},
        {kVe21, {{kVe11, kNeg}}},
        {kVe22, {{kVe12, kNeg}}}}},
      {0,
       {},
       {{kE11, {{kE12, kOne}}},
        {kE21, {{kE11, kNeg}, {kVe11, kNeg}}},
        {kVe21, {{kVe11, kNeg}}},
        {kVe22, {{kE12, kOne}, {kVe12, kNeg}}}}},
      // The theorem prints case (3) and case (5) without the alpha != 0
      // constraint their Lemma 7 source states; at alpha = 0 the image drops
      // dimension, so the source constraint is enforced here.
      {1,
       {Constraint::AlphaNonzero},
       {{kE11, {{kVe12, kOne}}},
        {kE21, {{kVe11, kNegA}}},
        {kVe21, {{kE11, kOne}}},
        {kVe22, {{kE12, kA}}}}},
      {1,
       {Constraint::AlphaNotMinusOne},
       {{kE11, {{kE12, kNeg}, {kVe12, kOne}}},
        {kE21, {{kE11, kOne}, {kVe11, kNegA}}},
        {kVe21, {{kE11, kOne}, {kVe11, kOne}}},
        {kVe22, {{kE12, kA}, {kVe12, kOne}}}}},
      {1,
       {Constraint::AlphaNonzero},
       {{kE22, {{kVe12, kOne}}},
        {kE21, {{kVe11, kNegA}}},
        {kVe21, {{kE11, kNeg}}},
        {kVe22, {{kE12, kA}}}}},
  };
}

CaseList corollary5Cases() {
  return {
      {0,
       {},
       {{kE11, {{kE12, kOne}}},
        {kE21, {{kE11, kNeg}}},
        {kVe21, {{kVe11, kNeg}}},
        {kVe22, {{kVe12, kNeg}}}}},
      {0,
       {},
       {{kE11, {{kE12, kOne}}},
        {kE21, {{kE11, kNeg}, {kVe12, kOne}}},
        {kVe21, {{kE12, kOne}, {kVe11, kNeg}}},
        {kVe22, {{kVe12, kNeg}}}}},
      {0,
       {},
       {{kE11, {{kVe12, kOne}}},
        {kE21, {{kVe11, kNeg}}},
        {kVe21, {{kE11, kOne}}},
        {kVe22, {{kE12, kOne}}}}},
      {1,
       {Constraint::AlphaNotMinusOne},
       {{kE11, {{kE12, kNeg}, {kVe12, kOne}}},
        {kE21, {{kE11, kOne}, {kVe11, kNegA}}},
        {kVe21, {{kE11, kOne}, {kVe11, kOne}}},
        {kVe22, {{kE12, kA}, {kVe12, kOne}}}}},
      {0,
       {},
       {{kE22, {{kVe12, kOne}}},
        {kE21, {{kVe11, kNeg}}},
        {kVe21, {{kE11, kNeg}}},
        {kVe22, {{kE12, kOne}}}}},
  };
}

CaseList theorem1Cases() {
  CaseList cases;
  auto append = [&cases](const CaseList& more) {
    cases.insert(cases.end(), more.begin(), more.end());
  };
  append(lemma1Cases());   // (1)-(2)
  append(lemma2Cases());   // (3)
  append(lemma3Cases());   // (4)-(9)
  append(lemma4Cases());   // (10)-(15)
  append(lemma5Cases());   // (16)-(19)
  append(lemma6Cases());   // (20)-(22)
  append(lemma7Cases());   // (23)-(27)
  return cases;
}

CaseList corollary6Cases() {
  CaseList cases;
  auto append = [&cases](const CaseList& more) {
    cases.insert(cases.end(), more.begin(), more.end());
  };
  append(lemma1Cases());       // (1)-(2)
  append(lemma2Cases());       // (3)
  append(corollary1Cases());   // (4)-(9)
  append(corollary2Cases());   // (10)-(13)
  append(corollary3Cases());   // (14)-(17)
  append(corollary4Cases());   // (18)-(20)
  append(corollary5Cases());   // (21)-(25)
  return cases;
}

const CaseList& casesFor(Source source) {
  static const std::map<Source, CaseList> table = {
      {Source::Prop18, prop18Cases()},
      {Source::Lemma1, lemma1Cases()},
      {Source::Lemma2, lemma2Cases()},
      {Source::Lemma3, lemma3Cases()},
      {Source::Lemma4, lemma4Cases()},
      {Source::Lemma5, lemma5Cases()},
      {Source::Lemma6, lemma6Cases()},
      {Source::Lemma7, lemma7Cases()},
      {Source::Corollary1, corollary1Cases()},
      {Source::Corollary2, corollary2Cases()},
      {Source::Corollary3, corollary3Cases()},
      {Source::Corollary4, corollary4Cases()},
      {Source::Corollary5, corollary5Cases()},
      {Source::Corollary6, corollary6Cases()},
      {Source::Theorem1, theorem1Cases()},
  };
  return table.at(source);
}

const CaseDef& caseDef(Source source, int caseNo) {
  const CaseList& list = casesFor(source);
  if (caseNo < 1 || caseNo > static_cast<int>(list.size()))
    throw Error(std::string(sourceName(source)) + " has no case " + std::to_string(caseNo));
  return list[caseNo - 1];
}

Scalar evalSym(Sym sym, const FieldSpec& field, const Scalar& alpha, const Scalar& beta) {
  switch (sym) {
    case Sym::One: return Scalar::of(field, 1);
    case Sym::MinusOne: return Scalar::of(field, -1);
    case Sym::Alpha: return alpha;
    case Sym::MinusAlpha: return -alpha;
    case Sym::Beta: return beta;
    case Sym::MinusBeta: return -beta;
  }
  throw Error("bad symbol");
}

Scalar toField(const Scalar& s, const FieldSpec& field) {
  if (!field.isPrimeField()) {
    if (!s.isRational()) throw FieldMismatch("expected a rational parameter");
    return s;
  }
  if (s.isRational()) return s + Scalar::of(field, 0);  // reduce via coercion
  if (s.residuePrime() != field.p)
    throw FieldMismatch("parameter lives in F_" + std::to_string(s.residuePrime()) +
                        ", case is built over " + field.str());
  return s;
}

}  // namespace

const char* sourceName(Source source) {
  switch (source) {
    case Source::Prop18: return "prop18";
    case Source::Lemma1: return "lemma1";
    case Source::Lemma2: return "lemma2";
    case Source::Lemma3: return "lemma3";
    case Source::Lemma4: return "lemma4";
    case Source::Lemma5: return "lemma5";
    case Source::Lemma6: return "lemma6";
    case Source::Lemma7: return "lemma7";
    case Source::Corollary1: return "corollary1";
    case Source::Corollary2: return "corollary2";
    case Source::Corollary3: return "corollary3";
    case Source::Corollary4: return "corollary4";
    case Source::Corollary5: return "corollary5";
    case Source::Corollary6: return "corollary6";
    case Source::Theorem1: return "theorem1";
  }
  return "?";
}

std::span<const Source> allSources() {
  static const Source sources[] = {
      Source::Prop18,     Source::Lemma1,     Source::Lemma2,     Source::Lemma3,
      Source::Lemma4,     Source::Lemma5,     Source::Lemma6,     Source::Lemma7,
      Source::Corollary1, Source::Corollary2, Source::Corollary3, Source::Corollary4,
      Source::Corollary5, Source::Corollary6, Source::Theorem1};
  return sources;
}

Source parseSource(const std::string& name) {
  for (Source s : allSources())
    if (name == sourceName(s)) return s;
  throw ParseError("unknown catalog source '" + name + "'");
}

int caseCount(Source source) { return static_cast<int>(casesFor(source).size()); }

std::string CaseSpec::id() const {
  std::string n = std::to_string(caseNo);
  if (n.size() < 2) n = "0" + n;
  return std::string(sourceName(source)) + "-case-" + n;
}

int caseParamCount(Source source, int caseNo) { return caseDef(source, caseNo).paramCount; }

std::vector<Constraint> caseConstraints(Source source, int caseNo) {
  return caseDef(source, caseNo).constraints;
}

bool paramsAdmissible(const CaseSpec& spec, const FieldSpec& field) {
  const CaseDef& def = caseDef(spec.source, spec.caseNo);
  if (def.paramCount >= 1 && !spec.alpha) return false;
  if (def.paramCount >= 2 && !spec.beta) return false;
  for (Constraint c : def.constraints) {
    switch (c) {
      case Constraint::AlphaNonzero:
        if (toField(*spec.alpha, field).isZero()) return false;
        break;
      case Constraint::BetaNonzero:
        if (toField(*spec.beta, field).isZero()) return false;
        break;
      case Constraint::AlphaNotMinusOne:
        if (toField(*spec.alpha, field) == Scalar::of(field, -1)) return false;
        break;
    }
  }
  return true;
}

std::optional<SubalgebraName> sourceImage(Source source) {
  switch (source) {
    case Source::Lemma1: return SubalgebraName::N1;
    case Source::Lemma2: return SubalgebraName::I1;
    case Source::Lemma3:
    case Source::Corollary1: return SubalgebraName::I2;
    case Source::Lemma4:
    case Source::Corollary2: return SubalgebraName::N2;
    case Source::Lemma5:
    case Source::Corollary3: return SubalgebraName::N3;
    case Source::Lemma6:
    case Source::Corollary4: return SubalgebraName::I3;
    case Source::Lemma7:
    case Source::Corollary5: return SubalgebraName::S4;
    default: return std::nullopt;
  }
}

LinMap buildCase(const CaseSpec& spec, const FieldSpec& field) {
  const CaseDef& def = caseDef(spec.source, spec.caseNo);
  if (def.paramCount >= 1 && !spec.alpha)
    throw ConstraintViolation(spec.id() + " needs parameter alpha");
  if (def.paramCount >= 2 && !spec.beta)
    throw ConstraintViolation(spec.id() + " needs parameter beta");
  if (def.paramCount == 0 && (spec.alpha || spec.beta))
    throw ConstraintViolation(spec.id() + " takes no parameters");
  if (!paramsAdmissible(spec, field))
    throw ConstraintViolation(spec.id() + " parameter violates its constraint");

  Scalar alpha = spec.alpha ? toField(*spec.alpha, field) : Scalar::of(field, 0);
  Scalar beta = spec.beta ? toField(*spec.beta, field) : Scalar::of(field, 0);

  LinMap r = zeroMap();
  for (const Action& action : def.actions)
    for (const Term& term : action.image)
      r(term.target, action.domain) = evalSym(term.coeff, field, alpha, beta);

  if (auto witness = rbWitness(r))
    throw RbSelfCheckFailed(spec.id() + " failed the RB identity at basis pair (" +
                            basisName(witness->i) + "," + basisName(witness->j) + ")");
  return r;
}

namespace {

std::vector<CatalogEntry> enumerateImpl(Source source, const FieldSpec& field,
                                        std::span<const Scalar> paramSamples, bool logSkips) {
  std::vector<CatalogEntry> out;
  const CaseList& list = casesFor(source);
  auto skip = [logSkips](const CaseSpec& spec) {
    if (!logSkips) return;
    std::clog << spec.id() << ": sample";
    if (spec.alpha) std::clog << " alpha=" << spec.alpha->str();
    if (spec.beta) std::clog << " beta=" << spec.beta->str();
    std::clog << " violates the case constraint, skipped\n";
  };
  for (int caseNo = 1; caseNo <= static_cast<int>(list.size()); ++caseNo) {
    const CaseDef& def = list[caseNo - 1];
    if (def.paramCount == 0) {
      CaseSpec spec{source, caseNo, std::nullopt, std::nullopt};
      out.push_back({spec, buildCase(spec, field)});
      continue;
    }
    if (def.paramCount == 1) {
      for (const Scalar& a : paramSamples) {
        CaseSpec spec{source, caseNo, toField(a, field), std::nullopt};
        if (!paramsAdmissible(spec, field)) {
          skip(spec);
          continue;
        }
        out.push_back({spec, buildCase(spec, field)});
      }
      continue;
    }
    for (const Scalar& a : paramSamples) {
      for (const Scalar& b : paramSamples) {
        CaseSpec spec{source, caseNo, toField(a, field), toField(b, field)};
        if (!paramsAdmissible(spec, field)) {
          skip(spec);
          continue;
        }
        out.push_back({spec, buildCase(spec, field)});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> enumerateCatalog(Source source, const FieldSpec& field,
                                           std::span<const Scalar> paramSamples) {
  return enumerateImpl(source, field, paramSamples, true);
}

std::vector<CatalogEntry> enumerateCatalogFullSweep(Source source, const FieldSpec& field) {
  if (!field.isPrimeField())
    throw Error("full parameter sweeps are defined over prime fields only");
  std::vector<Scalar> residues;
  for (std::uint32_t r = 0; r < field.p; ++r) residues.push_back(Scalar::residue(r, field.p));
  // a full sweep tries every residue by design; skipping the constrained
  // values is not noteworthy
  return enumerateImpl(source, field, residues, false);
}

Remark1 expectedFingerprint(const CaseSpec& spec) {
  if (spec.source != Source::Corollary6)
    throw OutOfRemarkScope("the closing remark covers Corollary 6 operators only");
  int n = spec.caseNo;
  if (n == 5 || (n >= 21 && n <= 24)) return Remark1::CubeZeroOnly;
  if (n >= 1 && n <= 20) return Remark1::SquareZero;
  return Remark1::Unstated;  // case (25)
}

}  // namespace octorb
