#include "octorb/algebra.hpp"

#include <algorithm>

#include "octorb/rref.hpp"

namespace octorb {

namespace {

constexpr const char* kBasisNames[8] = {"e11", "e12", "e21", "e22",
                                        "ve11", "ve12", "ve21", "ve22"};

// Signed matrix unit of M2(F): coeff * e_{row,col}, or zero.
struct SignedUnit {
  int coeff = 0;  // -1, 0, +1
  int row = 0, col = 0;
};

// e_{ij} e_{kl} = delta_{jk} e_{il}
SignedUnit unitProduct(const SignedUnit& a, const SignedUnit& b) {
  if (a.coeff == 0 || b.coeff == 0 || a.col != b.row) return {};
  return {a.coeff * b.coeff, a.row, b.col};
}

// Symplectic involution on matrix units.
SignedUnit unitBar(const SignedUnit& a) {
  if (a.coeff == 0) return {};
  if (a.row == a.col) return {a.coeff, 3 - a.row, 3 - a.col};  // e11 <-> e22
  return {-a.coeff, a.row, a.col};
}

int unitIndex(const SignedUnit& a) { return (a.row - 1) * 2 + (a.col - 1); }

SignedUnit unitFromIndex(int m2Index) {
  return {1, m2Index / 2 + 1, m2Index % 2 + 1};
}

StructureTable buildTable() {
  StructureTable t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const bool iv = i >= 4, jv = j >= 4;
      SignedUnit a = unitFromIndex(i % 4);
      SignedUnit b = unitFromIndex(j % 4);
      SignedUnit prod;
      bool resultInV = false;
      if (!iv && !jv) {
        prod = unitProduct(a, b);
      } else if (!iv && jv) {
        prod = unitProduct(unitBar(a), b);
        resultInV = true;
      } else if (iv && !jv) {
        prod = unitProduct(b, a);
        resultInV = true;
      } else {
        prod = unitProduct(b, unitBar(a));
      }
      t.sign[i][j] = static_cast<std::int8_t>(prod.coeff);
      t.target[i][j] = static_cast<std::int8_t>(
          prod.coeff == 0 ? 0 : unitIndex(prod) + (resultInV ? 4 : 0));
    }
  }
  return t;
}

}  // namespace

const char* basisName(int index) { return kBasisNames[index]; }

const StructureTable& StructureTable::get() {
  static const StructureTable table = buildTable();
  return table;
}

Octo octoZero() {
  Octo x;
  x.setZero();
  return x;
}

Octo octoUnit() {
  Octo x = octoZero();
  x(kE11) = Scalar(1);
  x(kE22) = Scalar(1);
  return x;
}

Octo basisOcto(int index) {
  Octo x = octoZero();
  x(index) = Scalar(1);
  return x;
}

Octo mul(const Octo& x, const Octo& y) {
  const StructureTable& t = StructureTable::get();
  Octo out = octoZero();
  for (int i = 0; i < 8; ++i) {
    if (x(i).isZero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (t.sign[i][j] == 0 || y(j).isZero()) continue;
      Scalar term = x(i) * y(j);
      int k = t.target[i][j];
      out(k) = t.sign[i][j] > 0 ? out(k) + term : out(k) - term;
    }
  }
  return out;
}

Octo symplecticBar(const Octo& a) {
  for (int i = 4; i < 8; ++i)
    if (!a(i).isZero())
      throw NotInM2("symplectic involution applies to the M2 part only; " +
                    std::string(kBasisNames[i]) + "-coordinate is nonzero");
  Octo out = octoZero();
  out(kE11) = a(kE22);
  out(kE12) = -a(kE12);
  out(kE21) = -a(kE21);
  out(kE22) = a(kE11);
  return out;
}

Octo classicalBar(const Octo& x) {
  Octo out;
  out(kE11) = x(kE22);
  out(kE12) = -x(kE12);
  out(kE21) = -x(kE21);
  out(kE22) = x(kE11);
  for (int i = 4; i < 8; ++i) out(i) = -x(i);
  return out;
}

namespace {

// Extracts t with v = t * unit, or throws.
Scalar unitMultiple(const Octo& v, const char* what) {
  for (int i = 0; i < 8; ++i) {
    if (i == kE11 || i == kE22) continue;
    if (!v(i).isZero())
      throw InternalInconsistency(std::string(what) + " is not a multiple of 1");
  }
  if (v(kE11) != v(kE22))
    throw InternalInconsistency(std::string(what) + " is not a multiple of 1");
  return v(kE11);
}

}  // namespace

std::pair<Scalar, Scalar> traceNorm(const Octo& x) {
  Octo bar = classicalBar(x);
  Scalar t = unitMultiple(x + bar, "x + conj(x)");
  Scalar n = unitMultiple(mul(x, bar), "x * conj(x)");
  return {t, n};
}

SubalgebraReport subalgebraCheck(std::span<const Octo> basis) {
  SubalgebraReport report;
  MatrixX span = spanRows(basis);
  report.independent = span.rows() == static_cast<int>(basis.size());
  report.unital = spanContains(span, octoUnit());
  report.closed = true;
  report.squareZero = true;
  for (const Octo& a : basis) {
    for (const Octo& b : basis) {
      Octo prod = mul(a, b);
      if (!isZero(prod)) report.squareZero = false;
      if (!spanContains(span, prod)) report.closed = false;
    }
  }
  return report;
}

std::vector<Octo> subalgebraBasis(SubalgebraName name) {
  auto make = [](std::initializer_list<int> indices) {
    std::vector<Octo> basis;
    for (int i : indices) basis.push_back(basisOcto(i));
    return basis;
  };
  switch (name) {
    case SubalgebraName::N1: return make({kE12});
    case SubalgebraName::I1: return make({kE11});
    case SubalgebraName::I2: return make({kE11, kE12});
    case SubalgebraName::N2: return make({kVe12, kVe22});
    case SubalgebraName::N3: return make({kE12, kVe12, kVe22});
    case SubalgebraName::I3: return make({kE11, kVe12, kVe22});
    case SubalgebraName::S4: return make({kE11, kE12, kVe11, kVe12});
  }
  throw Error("unknown subalgebra");
}

const char* subalgebraTag(SubalgebraName name) {
  switch (name) {
    case SubalgebraName::N1: return "N1";
    case SubalgebraName::I1: return "I1";
    case SubalgebraName::I2: return "I2";
    case SubalgebraName::N2: return "N2";
    case SubalgebraName::N3: return "N3";
    case SubalgebraName::I3: return "I3";
    case SubalgebraName::S4: return "S4";
  }
  return "?";
}

std::string subalgebraDescription(SubalgebraName name) {
  std::string out;
  for (const Octo& b : subalgebraBasis(name)) {
    for (int i = 0; i < 8; ++i) {
      if (!b(i).isZero()) {
        if (!out.empty()) out += " + ";
        out += "F";
        out += kBasisNames[i];
      }
    }
  }
  return out;
}

SubalgebraName parseSubalgebraName(const std::string& tag) {
  std::string up = tag;
  std::transform(up.begin(), up.end(), up.begin(), ::toupper);
  for (SubalgebraName name : allSubalgebras())
    if (up == subalgebraTag(name)) return name;
  throw ParseError("unknown subalgebra name '" + tag +
                   "' (expected one of N1,I1,I2,N2,N3,I3,S4)");
}

std::array<SubalgebraName, 7> allSubalgebras() {
  return {SubalgebraName::N1, SubalgebraName::I1, SubalgebraName::I2,
          SubalgebraName::N2, SubalgebraName::N3, SubalgebraName::I3,
          SubalgebraName::S4};
}

}  // namespace octorb
