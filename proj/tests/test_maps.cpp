#include <doctest.h>

#include "octorb/maps.hpp"
#include "octorb/verify.hpp"

using namespace octorb;

TEST_CASE("every catalog map verifies as its claimed kind") {
  CheckReport report = verifyMaps();
  for (const CheckLine& line : report.lines) {
    CAPTURE(line.name);
    CAPTURE(line.detail);
    CHECK(line.pass);
  }
}

TEST_CASE("hand-picked images") {
  // Proposition 4
  LinMap p4 = buildMap(MapSpec::of(4));
  CHECK(exactEq(Octo(p4.col(kVe12)), Octo(-basisOcto(kVe11))));
  CHECK(exactEq(Octo(p4.col(kVe11)), basisOcto(kVe12)));
  CHECK(exactEq(Octo(p4.col(kVe21)), basisOcto(kVe22)));
  CHECK(exactEq(Octo(p4.col(kVe22)), Octo(-basisOcto(kVe21))));

  // Proposition 6 at alpha = 1 is the identity
  CHECK(exactEq(buildMap(MapSpec::of(6, Scalar(1))), identityMap()));

  // Proposition 9: e11 -> e11 + alpha ve22
  Scalar alpha = Scalar(3);
  LinMap p9 = buildMap(MapSpec::of(9, alpha));
  Octo expected = basisOcto(kE11) + alpha * basisOcto(kVe22);
  CHECK(exactEq(Octo(p9.col(kE11)), expected));
}

TEST_CASE("proposition 1 completion is forced by phi^2 = id") {
  LinMap p1 = buildMap(MapSpec::of(1));
  CHECK(exactEq(Octo(p1.col(kE21)), basisOcto(kE12)));
  CHECK(exactEq(Octo(p1.col(kVe21)), Octo(-basisOcto(kVe12))));
  CHECK(exactEq(Octo(p1.col(kVe22)), basisOcto(kVe11)));
  CHECK(verifyMap(p1, MapKind::Involution));
}

TEST_CASE("proposition 5 completion is solved from the involution equations") {
  LinMap p5 = buildMap(MapSpec::of(5));
  CHECK(exactEq(Octo(p5.col(kVe22)), basisOcto(kE12)));
  CHECK(exactEq(Octo(p5.col(kVe11)), basisOcto(kE21)));
  CHECK(exactEq(Octo(p5.col(kVe12)), basisOcto(kVe12)));
  CHECK(exactEq(Octo(p5.col(kVe21)), basisOcto(kVe21)));
  CHECK(verifyMap(p5, MapKind::Involution));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(buildMap(MapSpec::of(6)), MissingParam);
  CHECK_THROWS_AS(buildMap(MapSpec::of(6, Scalar(0))), ZeroParamForbidden);
  CHECK_THROWS_AS(buildMap(MapSpec::of(7, Scalar(0))), ZeroParamForbidden);
  CHECK_THROWS_AS(buildMap(MapSpec::of(8, Scalar(0))), ZeroParamForbidden);
  CHECK_NOTHROW(buildMap(MapSpec::of(2, Scalar(0))));
}

TEST_CASE("prop 12 is an antiautomorphism and not an automorphism") {
  LinMap p12 = buildMap(MapSpec::of(12));
  CHECK(verifyMap(p12, MapKind::Antiautomorphism));
  CHECK(!verifyMap(p12, MapKind::Automorphism));
  CHECK(verifyMap(identityMap(), MapKind::Automorphism));
  CHECK(!verifyMap(zeroMap(), MapKind::Automorphism));
}

TEST_CASE("one-parameter subgroup law for the unipotent families") {
  Scalar a = Scalar(2), b = Scalar::rational(-3, 2);
  for (int prop : {2, 3, 10, 11, 13, 14, 15, 16, 17}) {
    CAPTURE(prop);
    LinMap lhs = buildMap(MapSpec::of(prop, a)) * buildMap(MapSpec::of(prop, b));
    LinMap rhs = buildMap(MapSpec::of(prop, a + b));
    CHECK(exactEq(lhs, rhs));
  }
}

TEST_CASE("composition kinds") {
  LinMap aut1 = buildMap(MapSpec::of(2, Scalar(1)));
  LinMap aut2 = buildMap(MapSpec::of(6, Scalar(3)));
  LinMap anti1 = buildMap(MapSpec::of(12));
  LinMap anti2 = buildMap(MapSpec::classical());
  CHECK(verifyMap(aut1 * aut2, MapKind::Automorphism));
  CHECK(verifyMap(LinMap(anti1 * anti2), MapKind::Automorphism));
  CHECK(verifyMap(LinMap(aut1 * anti1), MapKind::Antiautomorphism));
  CHECK(verifyMap(LinMap(anti1 * aut2), MapKind::Antiautomorphism));
}

TEST_CASE("conjugating catalog RB operators by catalog maps preserves RB") {
  LinMap r = zeroMap();
  r(kE12, kE21) = Scalar(1);  // Theorem 1 case (1)
  for (int prop = 0; prop <= 17; ++prop) {
    MapSpec spec = prop == 0 ? MapSpec::classical() : MapSpec::of(prop);
    if (propTakesParam(prop)) spec.param = Scalar(2);
    CHECK(checkRb(conjugate(r, buildMap(spec))));
  }
}

TEST_CASE("all shipped scripts replay to their declared outputs") {
  CheckReport report = verifyScripts();
  CHECK(report.lines.size() >= 8);
  for (const CheckLine& line : report.lines) {
    CAPTURE(line.name);
    CAPTURE(line.detail);
    CHECK(line.pass);
  }
}

TEST_CASE("script replay preserves RB at every step") {
  const ReductionScript& s = shippedScript("lemma4-chain");
  CHECK_NOTHROW(runScript(s, s.input));
  // empty script returns the input
  ReductionScript empty{"empty", "", FieldSpec::rationals(), s.input, s.input, {}};
  CHECK(exactEq(runScript(empty, s.input), s.input));
}

TEST_CASE("spec'd script examples") {
  // Lemma 1 two-generator merge: Prop 15 with alpha = 1 removes R(e21)
  LinMap r = zeroMap();
  r(kE12, kVe22) = Scalar(1);
  r(kE12, kE21) = Scalar(1);
  std::vector<ScriptStep> steps = {ScriptStep::conj(15, Scalar(1))};
  LinMap out = runSteps(r, steps);
  LinMap expected = zeroMap();
  expected(kE12, kVe22) = Scalar(1);
  CHECK(exactEq(out, expected));

  // Corollary 1 case (4) over F7 with alpha=2, sqrt = 3
  const ReductionScript& c14 = shippedScript("corollary1-case4");
  CHECK(exactEq(runScript(c14, c14.input), c14.output));
}
