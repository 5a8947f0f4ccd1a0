#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octorb/types.hpp"

namespace octorb {

// Fixed global basis order of O = M2(F) + vM2(F). Indices < 4 are the M2 part.
enum BasisIndex : int {
  kE11 = 0,
  kE12 = 1,
  kE21 = 2,
  kE22 = 3,
  kVe11 = 4,
  kVe12 = 5,
  kVe21 = 6,
  kVe22 = 7
};

const char* basisName(int index);

/// Structure constants of O over the fixed basis. Every basis product is a
/// single signed basis element or zero, so the table stores a sign in
/// {-1,0,+1} and a target index. Built once from the multiplication rules
///   a.b = ab,  a.vb = v(conj(a) b),  va.b = v(b a),  va.vb = b conj(a),
/// with conj the symplectic involution of M2(F).
struct StructureTable {
  std::array<std::array<std::int8_t, 8>, 8> sign;
  std::array<std::array<std::int8_t, 8>, 8> target;

  static const StructureTable& get();
};

Octo octoZero();
Octo octoUnit();
Octo basisOcto(int index);

/// Bilinear product in O. Not associative; alternative.
Octo mul(const Octo& x, const Octo& y);

/// Symplectic involution of the M2 part: (a11,a12,a21,a22) -> (a22,-a12,-a21,a11).
/// Throws NotInM2 when any v-coordinate is nonzero.
Octo symplecticBar(const Octo& a);

/// Classical involution of O: a + vb -> conj(a) - vb.
Octo classicalBar(const Octo& x);

/// The (trace, norm) pair with x^2 - t x + n 1 = 0, computed from
/// t 1 = x + conj(x) and n 1 = x conj(x). Throws InternalInconsistency if
/// either fails to be a multiple of the unit.
std::pair<Scalar, Scalar> traceNorm(const Octo& x);

struct SubalgebraReport {
  bool independent = false;
  bool closed = false;
  bool unital = false;
  bool squareZero = false;
};

/// Checks a spanning set: linear independence, multiplicative closure of the
/// span, whether the span contains 1, and whether all pairwise products vanish.
SubalgebraReport subalgebraCheck(std::span<const Octo> basis);

/// The seven nonzero non-unital subalgebras of O that occur as RB images,
/// one representative per conjugacy type.
enum class SubalgebraName {
  N1,  // F e12                      (nilpotent line)
  I1,  // F e11                      (idempotent line)
  I2,  // F e11 + F e12
  N2,  // F ve12 + F ve22            (square-zero plane)
  N3,  // F e12 + F ve12 + F ve22
  I3,  // F e11 + F ve12 + F ve22
  S4   // F e11 + F e12 + F ve11 + F ve12
};

std::vector<Octo> subalgebraBasis(SubalgebraName name);
const char* subalgebraTag(SubalgebraName name);
std::string subalgebraDescription(SubalgebraName name);
SubalgebraName parseSubalgebraName(const std::string& tag);
std::array<SubalgebraName, 7> allSubalgebras();

}  // namespace octorb
