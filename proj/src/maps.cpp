#include "octorb/maps.hpp"

#include <array>
#include <utility>

#include "octorb/rref.hpp"

namespace octorb {

const char* mapKindName(MapKind kind) {
  switch (kind) {
    case MapKind::Automorphism: return "automorphism";
    case MapKind::Antiautomorphism: return "antiautomorphism";
    case MapKind::Involution: return "involution";
  }
  return "?";
}

MapKind claimedKind(const MapSpec& spec) {
  switch (spec.prop) {
    case 0:
    case 1:
    case 5: return MapKind::Involution;
    case 12: return MapKind::Antiautomorphism;
    default: return MapKind::Automorphism;
  }
}

bool propTakesParam(int prop) {
  switch (prop) {
    case 2: case 3: case 6: case 7: case 8: case 9: case 10:
    case 11: case 13: case 14: case 15: case 16: case 17:
      return true;
    default:
      return false;
  }
}

bool propRequiresNonzero(int prop) { return prop == 6 || prop == 7 || prop == 8; }

namespace {

using Terms = std::initializer_list<std::pair<int, Scalar>>;

void setImage(LinMap& m, int basis, Terms terms) {
  for (const auto& [target, coeff] : terms) m(target, basis) = coeff;
}

void fixBasis(LinMap& m, std::initializer_list<int> indices) {
  for (int i : indices) m(i, i) = Scalar(1);
}

// ---- Involutive completion for the partially specified propositions ----
//
// Propositions 1 and 5 display only some images plus the constraint
// phi^2 = id. Completion proceeds in two stages: images that are a signed
// basis element force the image of that basis element through phi^2 = id,
// and any still-missing images are solved as the unique solution of the
// antiautomorphism equations phi(xy) = phi(y)phi(x) over the known pairs.

using PartialImages = std::array<std::optional<Octo>, 8>;

void squareIdentityClosure(PartialImages& images) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < 8; ++b) {
      if (!images[b]) continue;
      const Octo& img = *images[b];
      int nonzero = -1;
      for (int t = 0; t < 8; ++t) {
        if (img(t).isZero()) continue;
        nonzero = nonzero < 0 ? t : -2;
      }
      if (nonzero < 0) continue;  // zero or multi-term image: nothing to force
      Octo forced = octoZero();
      forced(b) = img(nonzero).inverse();
      if (!images[nonzero]) {
        images[nonzero] = forced;
        changed = true;
      } else if (!exactEq(*images[nonzero], forced)) {
        throw CompletionFailed("phi^2 = id is inconsistent with the listed images");
      }
    }
  }
}

void solveRemainingImages(PartialImages& images) {
  std::vector<int> unknowns;
  for (int b = 0; b < 8; ++b)
    if (!images[b]) unknowns.push_back(b);
  if (unknowns.empty()) return;

  const int nvars = static_cast<int>(unknowns.size()) * 8;
  std::vector<std::array<Scalar, 8>> rows;  // coefficient block per equation set
  std::vector<Octo> rhsList;

  // phi(e_x e_y) = phi(e_y) phi(e_x) for every pair with known images.
  for (int x = 0; x < 8; ++x) {
    if (!images[x]) continue;
    for (int y = 0; y < 8; ++y) {
      if (!images[y]) continue;
      Octo prod = mul(basisOcto(x), basisOcto(y));
      Octo rhs = mul(*images[y], *images[x]);
      std::array<Scalar, 8> coeffs;
      coeffs.fill(Scalar(0));
      bool touchesUnknown = false;
      for (int k = 0; k < 8; ++k) {
        if (prod(k).isZero()) continue;
        if (images[k]) {
          rhs = rhs - prod(k) * (*images[k]);
        } else {
          coeffs[k] = prod(k);
          touchesUnknown = true;
        }
      }
      if (!touchesUnknown) continue;
      rows.push_back(coeffs);
      rhsList.push_back(rhs);
    }
  }

  // Coordinates decouple: each coordinate c of each unknown image appears in
  // its own copy of the equations. Assemble one system over all of them.
  MatrixX system(static_cast<int>(rows.size()) * 8, nvars + 1);
  system.setZero();
  for (int e = 0; e < static_cast<int>(rows.size()); ++e) {
    for (int c = 0; c < 8; ++c) {
      int row = e * 8 + c;
      for (int u = 0; u < static_cast<int>(unknowns.size()); ++u)
        system(row, u * 8 + c) = rows[e][unknowns[u]];
      system(row, nvars) = rhsList[e](c);
    }
  }
  int rank = rowReduce(system);

  // Consistent and unique: every variable column carries a pivot and the
  // augmented column does not.
  std::vector<Scalar> solution(nvars, Scalar(0));
  int pivots = 0;
  for (int r = 0; r < rank; ++r) {
    int lead = -1;
    for (int c = 0; c <= nvars; ++c) {
      if (!system(r, c).isZero()) {
        lead = c;
        break;
      }
    }
    if (lead == nvars)
      throw CompletionFailed("no involutive completion exists (inconsistent equations)");
    if (lead >= 0) {
      solution[lead] = system(r, nvars);
      ++pivots;
    }
  }
  if (pivots < nvars)
    throw CompletionFailed("involutive completion is not unique");

  for (int u = 0; u < static_cast<int>(unknowns.size()); ++u) {
    Octo img;
    for (int c = 0; c < 8; ++c) img(c) = solution[u * 8 + c];
    images[unknowns[u]] = img;
  }
}

LinMap completeInvolution(PartialImages images, const char* what) {
  squareIdentityClosure(images);
  solveRemainingImages(images);
  LinMap m;
  for (int b = 0; b < 8; ++b) m.col(b) = *images[b];
  LinMap square = m * m;
  if (!exactEq(square, identityMap()))
    throw CompletionFailed(std::string(what) + ": completed map fails phi^2 = id");
  return m;
}

LinMap buildProp1() {
  PartialImages images;
  auto octo = [](Terms terms) {
    Octo v = octoZero();
    for (const auto& [t, c] : terms) v(t) = c;
    return v;
  };
  images[kE11] = octo({{kE11, 1}});
  images[kE12] = octo({{kE21, 1}});
  images[kE22] = octo({{kE22, 1}});
  images[kVe11] = octo({{kVe22, 1}});
  images[kVe12] = octo({{kVe21, -1}});
  return completeInvolution(images, "proposition 1");
}

LinMap buildProp5() {
  PartialImages images;
  auto octo = [](Terms terms) {
    Octo v = octoZero();
    for (const auto& [t, c] : terms) v(t) = c;
    return v;
  };
  images[kE11] = octo({{kE22, 1}});
  images[kE12] = octo({{kVe22, 1}});
  images[kE21] = octo({{kVe11, 1}});
  images[kE22] = octo({{kE11, 1}});
  return completeInvolution(images, "proposition 5");
}

}  // namespace

LinMap buildMap(const MapSpec& spec) {
  if (propTakesParam(spec.prop) && !spec.param)
    throw MissingParam("proposition " + std::to_string(spec.prop) + " needs a parameter");
  if (!propTakesParam(spec.prop) && spec.param)
    throw Error("proposition " + std::to_string(spec.prop) + " takes no parameter");
  if (propRequiresNonzero(spec.prop) && spec.param->isZero())
    throw ZeroParamForbidden("proposition " + std::to_string(spec.prop) +
                             " requires a nonzero parameter");

  LinMap m = zeroMap();
  const Scalar a = spec.param.value_or(Scalar(0));

  switch (spec.prop) {
    case 0:  // classical involution: a + vb -> conj(a) - vb
      setImage(m, kE11, {{kE22, 1}});
      setImage(m, kE12, {{kE12, -1}});
      setImage(m, kE21, {{kE21, -1}});
      setImage(m, kE22, {{kE11, 1}});
      setImage(m, kVe11, {{kVe11, -1}});
      setImage(m, kVe12, {{kVe12, -1}});
      setImage(m, kVe21, {{kVe21, -1}});
      setImage(m, kVe22, {{kVe22, -1}});
      break;
    case 1:
      return buildProp1();
    case 2:
      fixBasis(m, {kE11, kE12, kE21, kE22, kVe12, kVe22});
      setImage(m, kVe11, {{kVe11, 1}, {kVe12, a}});
      setImage(m, kVe21, {{kVe21, 1}, {kVe22, a}});
      break;
    case 3:
      fixBasis(m, {kE11, kE12, kE21, kE22, kVe11, kVe21});
      setImage(m, kVe12, {{kVe12, 1}, {kVe11, a}});
      setImage(m, kVe22, {{kVe22, 1}, {kVe21, a}});
      break;
    case 4:
      fixBasis(m, {kE11, kE12, kE21, kE22});
      setImage(m, kVe12, {{kVe11, -1}});
      setImage(m, kVe11, {{kVe12, 1}});
      setImage(m, kVe21, {{kVe22, 1}});
      setImage(m, kVe22, {{kVe21, -1}});
      break;
    case 5:
      return buildProp5();
    case 6:
      fixBasis(m, {kE11, kE22, kVe11, kVe22});
      setImage(m, kE12, {{kE12, a}});
      setImage(m, kVe12, {{kVe12, a}});
      setImage(m, kE21, {{kE21, a.inverse()}});
      setImage(m, kVe21, {{kVe21, a.inverse()}});
      break;
    case 7:
      fixBasis(m, {kE11, kE22, kVe12, kVe21});
      setImage(m, kE12, {{kE12, a}});
      setImage(m, kVe11, {{kVe11, a}});
      setImage(m, kE21, {{kE21, a.inverse()}});
      setImage(m, kVe22, {{kVe22, a.inverse()}});
      break;
    case 8:
      fixBasis(m, {kE11, kE12, kE21, kE22});
      setImage(m, kVe11, {{kVe11, a}});
      setImage(m, kVe21, {{kVe21, a}});
      setImage(m, kVe22, {{kVe22, a.inverse()}});
      setImage(m, kVe12, {{kVe12, a.inverse()}});
      break;
    case 9:
      setImage(m, kE11, {{kE11, 1}, {kVe22, a}});
      setImage(m, kE12, {{kE12, 1}, {kVe12, a}});
      setImage(m, kE21, {{kE21, 1}});
      setImage(m, kE22, {{kE22, 1}, {kVe22, -a}});
      setImage(m, kVe11, {{kVe11, 1}, {kE11, -a}, {kE22, a}, {kVe22, -(a * a)}});
      setImage(m, kVe12, {{kVe12, 1}});
      setImage(m, kVe21, {{kVe21, 1}, {kE21, a}});
      setImage(m, kVe22, {{kVe22, 1}});
      break;
    case 10:
      fixBasis(m, {kE11, kE22, kVe11, kVe22, kE12, kVe12});
      setImage(m, kE21, {{kE21, 1}, {kVe12, a}});
      setImage(m, kVe21, {{kVe21, 1}, {kE12, a}});
      break;
    case 11:
      fixBasis(m, {kE11, kE22, kVe11, kVe22, kE21, kVe21});
      setImage(m, kE12, {{kE12, 1}, {kVe21, a}});
      setImage(m, kVe12, {{kVe12, 1}, {kE21, a}});
      break;
    case 12:
      fixBasis(m, {kE11, kE22});
      setImage(m, kE12, {{kE21, 1}});
      setImage(m, kE21, {{kE12, 1}});
      setImage(m, kVe11, {{kVe21, -1}});
      setImage(m, kVe12, {{kVe22, -1}});
      setImage(m, kVe21, {{kVe11, 1}});
      setImage(m, kVe22, {{kVe12, 1}});
      break;
    case 13:
      fixBasis(m, {kE11, kE22, kE21, kVe12, kVe21, kVe22});
      setImage(m, kE12, {{kE12, 1}, {kVe22, -a}});
      setImage(m, kVe11, {{kVe11, 1}, {kE21, a}});
      break;
    case 14:
      fixBasis(m, {kE11, kE22, kE12, kVe11, kVe12, kVe21});
      setImage(m, kE21, {{kE21, 1}, {kVe11, a}});
      setImage(m, kVe22, {{kVe22, 1}, {kE12, -a}});
      break;
    case 15:
      setImage(m, kE11, {{kE11, 1}, {kVe12, -a}});
      setImage(m, kE12, {{kE12, 1}});
      setImage(m, kE21, {{kE21, 1}, {kVe22, a}});
      setImage(m, kE22, {{kE22, 1}, {kVe12, a}});
      setImage(m, kVe11, {{kVe11, 1}, {kE12, -a}});
      setImage(m, kVe12, {{kVe12, 1}});
      setImage(m, kVe21, {{kVe21, 1}, {kE11, -a}, {kE22, a}, {kVe12, a * a}});
      setImage(m, kVe22, {{kVe22, 1}});
      break;
    case 16:
      setImage(m, kE11, {{kE11, 1}, {kE12, a}});
      setImage(m, kE12, {{kE12, 1}});
      setImage(m, kE21, {{kE21, 1}, {kE11, -a}, {kE22, a}, {kE12, -(a * a)}});
      setImage(m, kE22, {{kE22, 1}, {kE12, -a}});
      setImage(m, kVe11, {{kVe11, 1}});
      setImage(m, kVe12, {{kVe12, 1}});
      setImage(m, kVe21, {{kVe21, 1}, {kVe11, -a}});
      setImage(m, kVe22, {{kVe22, 1}, {kVe12, -a}});
      break;
    case 17:
      setImage(m, kE11, {{kE11, 1}, {kE21, a}});
      setImage(m, kE12, {{kE12, 1}, {kE11, -a}, {kE22, a}, {kE21, -(a * a)}});
      setImage(m, kE21, {{kE21, 1}});
      setImage(m, kE22, {{kE22, 1}, {kE21, -a}});
      setImage(m, kVe11, {{kVe11, 1}, {kVe21, a}});
      setImage(m, kVe12, {{kVe12, 1}, {kVe22, a}});
      setImage(m, kVe21, {{kVe21, 1}});
      setImage(m, kVe22, {{kVe22, 1}});
      break;
    default:
      throw Error("unknown proposition " + std::to_string(spec.prop));
  }
  return m;
}

bool verifyMap(const LinMap& m, MapKind claimed) {
  {
    MatrixX probe = m;
    if (rowReduce(probe) < 8) return false;
  }
  const bool anti = claimed != MapKind::Automorphism;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Octo lhs = m * mul(basisOcto(i), basisOcto(j));
      Octo rhs = anti ? mul(m.col(j), m.col(i)) : mul(m.col(i), m.col(j));
      if (!exactEq(lhs, rhs)) return false;
    }
  }
  if (claimed == MapKind::Involution) {
    LinMap square = m * m;
    if (!exactEq(square, identityMap())) return false;
  }
  return true;
}

LinMap runSteps(const LinMap& r, std::span<const ScriptStep> steps) {
  const bool startedRb = checkRb(r);
  LinMap current = r;
  int position = 0;
  for (const ScriptStep& step : steps) {
    ++position;
    if (step.kind == ScriptStep::Kind::Conjugate) {
      current = conjugate(current, buildMap(step.map));
    } else {
      current = scale(current, step.factor);
    }
    if (startedRb && !checkRb(current))
      throw RbSelfCheckFailed("script step " + std::to_string(position) +
                              " destroyed the Rota-Baxter identity");
  }
  return current;
}

bool replayMatchesDeclared(const ReductionScript& s) {
  return exactEq(runScript(s, s.input), s.output);
}

namespace {

LinMap opOf(std::initializer_list<std::pair<int, Terms>> columns) {
  LinMap m = zeroMap();
  for (const auto& [basis, terms] : columns) setImage(m, basis, terms);
  return m;
}

Scalar fp7(long long n) { return Scalar::of(FieldSpec::prime(7), n); }

std::vector<ReductionScript> buildShippedScripts() {
  std::vector<ReductionScript> scripts;
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f7 = FieldSpec::prime(7);
  const Scalar half = Scalar::rational(1, 2);

  scripts.push_back({
      "lemma1-merge",
      "Lemma 1 proof: merge R(ve22)=e12, R(e21)=a3*e12 into the single-generator form",
      q,
      opOf({{kVe22, {{kE12, 1}}}, {kE21, {{kE12, 2}}}}),
      opOf({{kVe22, {{kE12, 1}}}}),
      {ScriptStep::conj(6, half), ScriptStep::scaleBy(Scalar(2)), ScriptStep::conj(15, Scalar(1))},
  });

  scripts.push_back({
      "lemma2-merge",
      "Lemma 2 proof ending: R(e21)=e11, R(ve11)=e11 reduces to R(e21)=e11",
      q,
      opOf({{kE21, {{kE11, 1}}}, {kVe11, {{kE11, 1}}}}),
      opOf({{kE21, {{kE11, 1}}}}),
      {ScriptStep::conj(13, Scalar(1))},
  });

  scripts.push_back({
      "lemma2-swap",
      "Lemma 2 proof: classical involution composed with Proposition 5 swaps "
      "R(ve11)=e11 with R(e21)=e11",
      q,
      opOf({{kVe11, {{kE11, 1}}}}),
      opOf({{kE21, {{kE11, 1}}}}),
      {ScriptStep::conj(MapSpec::classical()), ScriptStep::conj(5), ScriptStep::scaleBy(Scalar(-1))},
  });

  scripts.push_back({
      "lemma3-case3a",
      "Lemma 3 case 3a: normalize R(ve21)=b4*e12 alongside R(e21)=e11",
      q,
      opOf({{kE21, {{kE11, 1}}}, {kVe21, {{kE12, 2}}}}),
      opOf({{kE21, {{kE11, 1}}}, {kVe21, {{kE12, 1}}}}),
      {ScriptStep::conj(6, half), ScriptStep::scaleBy(Scalar(2))},
  });

  scripts.push_back({
      "lemma3-case3c",
      "Lemma 3 case 3c: Proposition 14 removes R(e21), leaving case (4)",
      q,
      opOf({{kE21, {{kE11, 1}}}, {kVe11, {{kE11, 2}}}, {kVe21, {{kE12, 1}}}}),
      opOf({{kVe11, {{kE11, 2}}}, {kVe21, {{kE12, 1}}}}),
      {ScriptStep::conj(14, half)},
  });

  scripts.push_back({
      "lemma3-case4b",
      "Lemma 3 case 4b: full chain to case (5), R(ve11)=e12, R(ve21)=e11",
      q,
      opOf({{kE21, {{kE12, 1}}}, {kVe11, {{kE12, 2}}}, {kVe21, {{kE11, 2}, {kE12, 3}}}}),
      opOf({{kVe11, {{kE12, 1}}}, {kVe21, {{kE11, 1}}}}),
      {ScriptStep::conj(6, Scalar(2)), ScriptStep::scaleBy(Scalar::rational(1, 4)),
       ScriptStep::conj(14, Scalar(1)), ScriptStep::conj(16, Scalar::rational(-3, 2))},
  });

  scripts.push_back({
      "lemma4-chain",
      "Lemma 4 case 1.a.a.a.a: chain collapsing to case (2), R(e21)=ve12, R(ve21)=ve22",
      q,
      opOf({{kE21, {{kVe12, 1}}}, {kVe11, {{kVe12, 1}}}, {kVe21, {{kVe22, 3}, {kVe12, 2}}}}),
      opOf({{kE21, {{kVe12, 1}}}, {kVe21, {{kVe22, 1}}}}),
      {ScriptStep::conj(6, half), ScriptStep::conj(8, Scalar(2)), ScriptStep::scaleBy(Scalar(8)),
       ScriptStep::conj(9, Scalar(1)), ScriptStep::conj(13, Scalar(1)),
       ScriptStep::conj(8, Scalar(3)), ScriptStep::scaleBy(Scalar(3))},
  });

  scripts.push_back({
      "lemma5-chain",
      "Lemma 5 case 1.a.c.a: normalize R(e21)=g*e12 to case (3)",
      q,
      opOf({{kE21, {{kE12, 2}}}, {kVe11, {{kVe12, 1}}}, {kVe21, {{kVe22, 1}, {kE12, 1}}}}),
      opOf({{kE21, {{kE12, 1}}}, {kVe11, {{kVe12, 1}}}, {kVe21, {{kVe22, 1}, {kE12, 1}}}}),
      {ScriptStep::conj(8, Scalar::rational(1, 4)), ScriptStep::conj(7, Scalar(2)),
       ScriptStep::scaleBy(Scalar::rational(1, 8))},
  });

  // Quadratically closed reductions, replayed over F7 where 2 is a residue
  // (sqrt(2) = 3).
  scripts.push_back({
      "corollary1-case4",
      "Corollary 1 case (4): Proposition 7 with sqrt(alpha) maps Lemma 3 case (4), "
      "alpha=2 over F7",
      f7,
      opOf({{kVe11, {{kE11, fp7(2)}}}, {kVe21, {{kE12, fp7(1)}}}}),
      opOf({{kVe11, {{kE11, fp7(1)}}}, {kVe21, {{kE12, fp7(1)}}}}),
      {ScriptStep::conj(7, fp7(3)), ScriptStep::scaleBy(fp7(5))},
  });

  scripts.push_back({
      "corollary1-case6",
      "Corollary 1 case (6): Proposition 7 with sqrt(alpha) maps Lemma 3 case (6), "
      "alpha=2 over F7",
      f7,
      opOf({{kVe21, {{kE11, fp7(2)}}}, {kVe22, {{kE12, fp7(1)}}}}),
      opOf({{kVe21, {{kE11, fp7(1)}}}, {kVe22, {{kE12, fp7(1)}}}}),
      {ScriptStep::conj(7, fp7(3)), ScriptStep::scaleBy(fp7(4))},
  });

  scripts.push_back({
      "corollary2-case6",
      "Corollary 2 proof (6): Lemma 4 case (6) with alpha=2 lands in case (4) over F7",
      f7,
      opOf({{kVe11, {{kVe22, fp7(1)}}}, {kVe21, {{kVe12, fp7(2)}}}}),
      opOf({{kVe11, {{kVe12, fp7(1)}}}, {kVe21, {{kVe22, fp7(-1)}}}}),
      {ScriptStep::conj(6, fp7(5)), ScriptStep::conj(17, fp7(-1)),
       ScriptStep::conj(16, fp7(3))},
  });

  scripts.push_back({
      "corollary3-case1",
      "Corollary 3 case (1): Proposition 8 with 1/sqrt(alpha), alpha=2 over F7",
      f7,
      opOf({{kE21, {{kE12, fp7(2)}}}, {kVe11, {{kVe12, fp7(1)}}},
            {kVe21, {{kVe22, fp7(1)}, {kVe12, fp7(1)}}}}),
      opOf({{kE21, {{kE12, fp7(1)}}}, {kVe11, {{kVe12, fp7(1)}}},
            {kVe21, {{kVe22, fp7(1)}, {kVe12, fp7(1)}}}}),
      {ScriptStep::conj(8, fp7(5)), ScriptStep::scaleBy(fp7(4))},
  });

  scripts.push_back({
      "corollary3-case2",
      "Corollary 3 case (2): Proposition 8 with 1/sqrt(alpha), alpha=2 over F7",
      f7,
      opOf({{kE21, {{kE12, fp7(2)}}}, {kVe11, {{kVe12, fp7(1)}}}, {kVe21, {{kVe22, fp7(1)}}}}),
      opOf({{kE21, {{kE12, fp7(1)}}}, {kVe11, {{kVe12, fp7(1)}}}, {kVe21, {{kVe22, fp7(1)}}}}),
      {ScriptStep::conj(8, fp7(5)), ScriptStep::scaleBy(fp7(4))},
  });

  scripts.push_back({
      "corollary4-case2",
      "Corollary 4 case (2): Proposition 7 with 1/sqrt(alpha) normalizes R(e21), "
      "alpha=beta=2 over F7",
      f7,
      opOf({{kE21, {{kE11, fp7(2)}}}, {kVe11, {{kVe12, fp7(2)}}}, {kVe21, {{kVe22, fp7(1)}}}}),
      opOf({{kE21, {{kE11, fp7(1)}}}, {kVe11, {{kVe12, fp7(2)}}}, {kVe21, {{kVe22, fp7(1)}}}}),
      {ScriptStep::conj(7, fp7(5)), ScriptStep::scaleBy(fp7(5))},
  });

  scripts.push_back({
      "corollary5-case2",
      "Corollary 5 case (2): Lemma 7 case (2) rewritten by Propositions 2 and 3 "
      "(integer parameters, no square roots involved)",
      q,
      opOf({{kE11, {{kE12, 1}}},
            {kE21, {{kE11, -1}, {kVe11, -1}}},
            {kVe21, {{kVe11, -1}}},
            {kVe22, {{kE12, 1}, {kVe12, -1}}}}),
      opOf({{kE11, {{kE12, 1}}},
            {kE21, {{kE11, -1}, {kVe12, 1}}},
            {kVe21, {{kE12, 1}, {kVe11, -1}}},
            {kVe22, {{kVe12, -1}}}}),
      {ScriptStep::conj(2, Scalar(-1)), ScriptStep::conj(3, Scalar(1))},
  });

  scripts.push_back({
      "corollary5-case3",
      "Corollary 5 proof, case (3): Proposition 7 with 1/sqrt(alpha), alpha=2 over F7",
      f7,
      opOf({{kE11, {{kVe12, fp7(1)}}}, {kE21, {{kVe11, fp7(-2)}}},
            {kVe21, {{kE11, fp7(1)}}}, {kVe22, {{kE12, fp7(2)}}}}),
      opOf({{kE11, {{kVe12, fp7(1)}}}, {kE21, {{kVe11, fp7(-1)}}},
            {kVe21, {{kE11, fp7(1)}}}, {kVe22, {{kE12, fp7(1)}}}}),
      {ScriptStep::conj(7, fp7(5))},
  });

  scripts.push_back({
      "corollary5-case5",
      "Corollary 5 proof, case (5): Proposition 7 with 1/sqrt(alpha), alpha=2 over F7",
      f7,
      opOf({{kE22, {{kVe12, fp7(1)}}}, {kE21, {{kVe11, fp7(-2)}}},
            {kVe21, {{kE11, fp7(-1)}}}, {kVe22, {{kE12, fp7(2)}}}}),
      opOf({{kE22, {{kVe12, fp7(1)}}}, {kE21, {{kVe11, fp7(-1)}}},
            {kVe21, {{kE11, fp7(-1)}}}, {kVe22, {{kE12, fp7(1)}}}}),
      {ScriptStep::conj(7, fp7(5))},
  });

  return scripts;
}

}  // namespace

const std::vector<ReductionScript>& shippedScripts() {
  static const std::vector<ReductionScript> scripts = buildShippedScripts();
  return scripts;
}

const ReductionScript& shippedScript(const std::string& name) {
  for (const ReductionScript& s : shippedScripts())
    if (s.name == name) return s;
  throw ParseError("no shipped script named '" + name + "'");
}

}  // namespace octorb
