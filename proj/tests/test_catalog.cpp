#include <doctest.h>

#include <set>

#include "octorb/catalog.hpp"
#include "octorb/maps.hpp"
#include "octorb/verify.hpp"

using namespace octorb;

TEST_CASE("case counts per source") {
  CHECK(caseCount(Source::Prop18) == 4);
  CHECK(caseCount(Source::Lemma1) == 2);
  CHECK(caseCount(Source::Lemma2) == 1);
  CHECK(caseCount(Source::Lemma3) == 6);
  CHECK(caseCount(Source::Corollary1) == 6);
  CHECK(caseCount(Source::Lemma4) == 6);
  CHECK(caseCount(Source::Corollary2) == 4);
  CHECK(caseCount(Source::Lemma5) == 4);
  CHECK(caseCount(Source::Corollary3) == 4);
  CHECK(caseCount(Source::Lemma6) == 3);
  CHECK(caseCount(Source::Corollary4) == 3);
  CHECK(caseCount(Source::Lemma7) == 5);
  CHECK(caseCount(Source::Corollary5) == 5);
  CHECK(caseCount(Source::Theorem1) == 27);
  CHECK(caseCount(Source::Corollary6) == 25);
}

TEST_CASE("hand-picked case actions") {
  FieldSpec q = FieldSpec::rationals();

  // Theorem 1 case (1): R(e21) = e12 only
  LinMap t1 = buildCase({Source::Theorem1, 1, std::nullopt, std::nullopt}, q);
  LinMap expected = zeroMap();
  expected(kE12, kE21) = Scalar(1);
  CHECK(exactEq(t1, expected));

  // Theorem 1 case (10) with alpha = 1: R(ve11)=ve22, R(ve21)=ve22+ve12
  LinMap t10 = buildCase({Source::Theorem1, 10, Scalar(1), std::nullopt}, q);
  expected = zeroMap();
  expected(kVe22, kVe11) = Scalar(1);
  expected(kVe22, kVe21) = Scalar(1);
  expected(kVe12, kVe21) = Scalar(1);
  CHECK(exactEq(t10, expected));

  // Theorem 1 case (12): the dense Lemma 4 operator
  LinMap t12 = buildCase({Source::Theorem1, 12, std::nullopt, std::nullopt}, q);
  Octo w = basisOcto(kVe22) + basisOcto(kVe12);
  CHECK(exactEq(Octo(t12.col(kE11)), w));
  CHECK(exactEq(Octo(t12.col(kE12)), w));
  CHECK(exactEq(Octo(t12.col(kE21)), Octo(-w)));
  CHECK(exactEq(Octo(t12.col(kE22)), Octo(-w)));
  CHECK(exactEq(Octo(t12.col(kVe11)), Octo(-basisOcto(kVe12))));
  CHECK(exactEq(Octo(t12.col(kVe21)), basisOcto(kVe12)));

  // Lemma 7 case (4) at alpha = 0 is valid: the constraint is alpha != -1
  CHECK_NOTHROW(buildCase({Source::Lemma7, 4, Scalar(0), std::nullopt}, q));
}

TEST_CASE("constraints are enforced") {
  FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 7, Scalar(0), std::nullopt}, q),
                  ConstraintViolation);
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 26, Scalar(-1), std::nullopt}, q),
                  ConstraintViolation);
  // cases (25) and (27) inherit alpha != 0 from their Lemma 7 source
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 25, Scalar(0), std::nullopt}, q),
                  ConstraintViolation);
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 27, Scalar(0), std::nullopt}, q),
                  ConstraintViolation);
  // missing / spurious parameters
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 7, std::nullopt, std::nullopt}, q),
                  ConstraintViolation);
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 21, Scalar(1), std::nullopt}, q),
                  ConstraintViolation);
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 1, Scalar(1), std::nullopt}, q),
                  ConstraintViolation);
  // alpha = -1 is fine over F5 only when it is not the residue 4
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(buildCase({Source::Theorem1, 26, Scalar::of(f5, 4), std::nullopt}, f5),
                  ConstraintViolation);
  CHECK_NOTHROW(buildCase({Source::Theorem1, 26, Scalar::of(f5, 3), std::nullopt}, f5));
}

TEST_CASE("every case verifies over Q samples and the full F5 sweep") {
  std::vector<Scalar> samples = rationalParamSamples();
  for (Source source : allSources()) {
    CAPTURE(sourceName(source));
    CheckReport q = verifyCatalog(source, FieldSpec::rationals(), samples);
    for (const CheckLine& line : q.lines) {
      CAPTURE(line.name);
      CAPTURE(line.detail);
      CHECK(line.pass);
    }
    CheckReport f5 = verifyCatalog(source, FieldSpec::prime(5), samples);
    for (const CheckLine& line : f5.lines) {
      CAPTURE(line.name);
      CAPTURE(line.detail);
      CHECK(line.pass);
    }
  }
}

TEST_CASE("enumerate counts") {
  FieldSpec q = FieldSpec::rationals();
  std::vector<Scalar> one = {Scalar(1)};
  CHECK(enumerateCatalog(Source::Theorem1, q, one).size() == 27);

  std::vector<Scalar> two = {Scalar(1), Scalar(2)};
  std::set<int> caseNos;
  for (const CatalogEntry& entry : enumerateCatalog(Source::Corollary6, q, two))
    caseNos.insert(entry.spec.caseNo);
  CHECK(caseNos.size() == 25);

  // empty sample list: only parameter-free cases
  CHECK(enumerateCatalog(Source::Theorem1, q, {}).size() == 15);
}

TEST_CASE("remark predictions") {
  CHECK(expectedFingerprint({Source::Corollary6, 21, std::nullopt, std::nullopt}) ==
        Remark1::CubeZeroOnly);
  CHECK(expectedFingerprint({Source::Corollary6, 5, std::nullopt, std::nullopt}) ==
        Remark1::CubeZeroOnly);
  CHECK(expectedFingerprint({Source::Corollary6, 1, std::nullopt, std::nullopt}) ==
        Remark1::SquareZero);
  CHECK(expectedFingerprint({Source::Corollary6, 25, std::nullopt, std::nullopt}) ==
        Remark1::Unstated);
  CHECK_THROWS_AS(expectedFingerprint({Source::Theorem1, 5, std::nullopt, std::nullopt}),
                  OutOfRemarkScope);
}

TEST_CASE("remark 1 matches computed fingerprints, cases 1-24") {
  for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    std::vector<CatalogEntry> entries =
        field.isPrimeField() ? enumerateCatalogFullSweep(Source::Corollary6, field)
                             : enumerateCatalog(Source::Corollary6, field, rationalParamSamples());
    for (const CatalogEntry& entry : entries) {
      if (entry.spec.caseNo > 24) continue;
      CAPTURE(entry.spec.id());
      Fingerprint fp = fingerprint(entry.op);
      if (expectedFingerprint(entry.spec) == Remark1::SquareZero) {
        CHECK(fp.d2 == 0);
      } else {
        CHECK(fp.d2 > 0);
        CHECK(fp.d3 == 0);
      }
    }
  }
}

TEST_CASE("prop 18 forms, zero-extended, are RB on the whole algebra") {
  FieldSpec q = FieldSpec::rationals();
  for (int caseNo = 1; caseNo <= 4; ++caseNo) {
    LinMap r = buildCase({Source::Prop18, caseNo, std::nullopt, std::nullopt}, q);
    CHECK(checkRb(r));
    // zero on the v part
    for (int j = 4; j < 8; ++j)
      for (int i = 0; i < 8; ++i) CHECK(r(i, j).isZero());
  }
}

TEST_CASE("every corollary 6 case matches a theorem 1 instance, directly or by script") {
  FieldSpec q = FieldSpec::rationals();
  using P = std::optional<Scalar>;
  const P none = std::nullopt;
  struct Row {
    int c6;
    P c6Alpha;
    int t1;
    P t1Alpha, t1Beta;
  };
  const std::vector<Row> direct = {
      {1, none, 1, none, none},          {2, none, 2, none, none},
      {3, none, 3, none, none},          {4, none, 4, none, none},
      {5, none, 5, none, none},          {6, none, 6, none, none},
      {7, none, 7, Scalar(1), none},     {8, none, 8, none, none},
      {9, none, 9, Scalar(1), none},     {10, none, 11, none, none},
      {11, none, 12, none, none},        {12, none, 13, none, none},
      {13, Scalar(2), 14, Scalar(2), none},
      {14, none, 16, Scalar(1), none},   {15, none, 17, Scalar(1), none},
      {16, none, 18, none, none},        {17, Scalar(2), 19, Scalar(2), none},
      {18, none, 20, none, none},        {19, Scalar(2), 21, Scalar(1), Scalar(2)},
      {20, none, 22, none, none},        {21, none, 23, none, none},
      {23, none, 25, Scalar(1), none},   {24, Scalar(2), 26, Scalar(2), none},
      {25, none, 27, Scalar(1), none},
  };
  for (const Row& row : direct) {
    CAPTURE(row.c6);
    CaseSpec c6spec{Source::Corollary6, row.c6, row.c6Alpha, std::nullopt};
    CaseSpec t1spec{Source::Theorem1, row.t1, row.t1Alpha, row.t1Beta};
    CHECK(exactEq(buildCase(c6spec, q), buildCase(t1spec, q)));
  }
  // Case (22) is Corollary 5 case (2): not a parameter instance of any
  // Theorem 1 case, but reachable from case (24) by the shipped script.
  const ReductionScript& bridge = shippedScript("corollary5-case2");
  CHECK(exactEq(bridge.input,
                buildCase({Source::Theorem1, 24, std::nullopt, std::nullopt}, q)));
  CHECK(exactEq(bridge.output,
                buildCase({Source::Corollary6, 22, std::nullopt, std::nullopt}, q)));
  CHECK(exactEq(runScript(bridge, bridge.input), bridge.output));
}
