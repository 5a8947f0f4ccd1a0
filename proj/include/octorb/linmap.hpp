#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octorb/algebra.hpp"
#include "octorb/rref.hpp"
#include "octorb/types.hpp"

namespace octorb {

LinMap zeroMap();
LinMap identityMap();

/// Exact inverse. Throws Singular when the map is not invertible.
LinMap inverse(const LinMap& m);

struct RankDecomposition {
  int rank = 0;
  std::vector<Octo> kernel;  // reduced-echelon canonical basis
  std::vector<Octo> image;   // reduced-echelon canonical basis
};

/// Exact Gaussian elimination: rank, canonical kernel basis, canonical image
/// basis. rank + |kernel| == 8 always.
RankDecomposition rankKernelImage(const LinMap& r);

struct RbWitness {
  int i = 0, j = 0;   // first failing basis pair, row-major scan
  Octo lhs, rhs;      // R(ei)R(ej) and R(R(ei)ej + eiR(ej))
};

/// Weight-zero Rota-Baxter check over all 64 basis pairs (bilinearity makes
/// basis pairs sufficient). Returns the first failing pair, or nullopt when
/// the identity holds.
std::optional<RbWitness> rbWitness(const LinMap& r);

inline bool checkRb(const LinMap& r) { return !rbWitness(r).has_value(); }

/// Conjugation of operators. The classification works "up to conjugation":
/// conjugate(R, phi) is the operator x -> phi(R(phi^-1(x))), i.e. the matrix
/// P R P^-1. This is the direction the catalog's reduction chains use: pushing
/// R through the automorphism phi. Throws Singular when phi is not invertible.
LinMap conjugate(const LinMap& r, const LinMap& phi);

/// Entrywise lambda * R. Preserves the weight-zero RB property.
LinMap scale(const LinMap& r, const Scalar& lambda);

/// Im(R) Ker(R) and Ker(R) Im(R) both inside Ker(R), checked on basis
/// representatives. Holds for every weight-zero RB operator.
bool bimoduleCheck(const LinMap& r);

/// Conjugation- and scaling-invariant data used to match enumerated operators
/// against the catalog.
struct Fingerprint {
  int d1 = 0;         // dim Im R
  int d2 = 0;         // dim Im R^2
  int d3 = 0;         // dim Im R^3
  int k = 0;          // dim (Im R intersect Ker R)
  int imgSquare = 0;  // dim span of (Im R)(Im R)
  bool imgUnital = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator<(const Fingerprint& a, const Fingerprint& b);
  std::string str() const;
};

Fingerprint fingerprint(const LinMap& r);

}  // namespace octorb
