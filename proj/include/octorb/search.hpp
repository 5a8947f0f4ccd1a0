#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "octorb/catalog.hpp"
#include "octorb/linmap.hpp"
#include "octorb/maps.hpp"

namespace octorb {

/// An exhaustive enumeration request: all weight-zero RB operators over a
/// small prime field whose image lies inside (or equals) a fixed subalgebra
/// and whose kernel contains the given vectors.
struct SearchSpec {
  FieldSpec field = FieldSpec::prime(3);
  std::vector<Octo> imageBasis;  // independent, multiplicatively closed; empty = {0}
  std::string imageTag = "custom";
  bool requireImageExact = false;
  std::vector<Octo> kernelContains;
  std::uint64_t budget = 100'000'000;  // max candidates scanned
  int threads = 1;

  static SearchSpec forImage(const FieldSpec& field, SubalgebraName image) {
    SearchSpec spec;
    spec.field = field;
    spec.imageBasis = subalgebraBasis(image);
    spec.imageTag = subalgebraTag(image);
    return spec;
  }
};

struct SearchResult {
  std::uint64_t candidates = 0;  // p^(free x image) scanned
  std::vector<LinMap> operators;  // in counter order; deterministic
};

/// Scans every candidate in mixed-radix counter order (free coefficients in
/// fixed basis order) and keeps the ones passing the RB identity. Throws
/// BudgetExceeded when the candidate count is over budget.
SearchResult enumerateRb(const SearchSpec& spec);

/// Conjugation-orbit bookkeeping over a prime field. Orbits are taken under
/// the group generated by the catalog maps (Propositions 1-17 with every
/// parameter in the field, the classical involution) together with all
/// nonzero scalings; the BFS walks an equivalent cyclic generating subset
/// (alpha = 1 for the one-parameter unipotent families, one primitive root
/// for the multiplicative ones). Orbit membership is memoized; the canonical
/// representative is the lexicographically least matrix encoding (row-major
/// entry scan).
class OrbitStore {
 public:
  explicit OrbitStore(const FieldSpec& field, std::uint64_t orbitCap = 2'000'000);

  const FieldSpec& field() const { return field_; }
  std::uint64_t orbitCap() const { return orbitCap_; }
  void setOrbitCap(std::uint64_t cap) { orbitCap_ = cap; }

  /// Orbit id of an operator already seen, if any.
  std::optional<int> lookup(const LinMap& r) const;

  /// Canonical representative of the orbit with the given id.
  LinMap canonical(int orbitId) const;

  int orbitCount() const { return static_cast<int>(canonicalKeys_.size()); }
  std::uint64_t orbitSize(int orbitId) const { return orbitSizes_[orbitId]; }

  /// Base-p digit string of the matrix, row-major; doubles as the canonical
  /// encoding order.
  std::string encode(const LinMap& r) const;

 private:
  friend LinMap orbitReduce(const LinMap&, OrbitStore&);
  friend int orbitIdOf(const LinMap&, OrbitStore&);

  using Mat64 = std::array<std::uint8_t, 64>;
  // 64 base-p digits packed 4 bits each, big-endian, so array comparison is
  // digit-lexicographic.
  using Key = std::array<std::uint64_t, 4>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ull;
      for (std::uint64_t w : k) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  Mat64 toMat(const LinMap& r) const;
  LinMap fromMat(const Mat64& m) const;
  static Key pack(const Mat64& m);
  static Mat64 unpack(const Key& k);

  FieldSpec field_;
  std::uint64_t orbitCap_;
  std::vector<std::pair<Mat64, Mat64>> generators_;  // (G, G^-1) pairs
  std::vector<std::uint8_t> modLut_;                 // v -> v mod p, small sums
  std::unordered_map<Key, int, KeyHash> orbitOf_;
  std::vector<Key> canonicalKeys_;
  std::vector<std::uint64_t> orbitSizes_;
};

/// BFS closure of {R} under the store's generators and nonzero scalings;
/// returns the lexicographic minimum and memoizes the whole orbit. Throws
/// OrbitBudgetExceeded when the orbit outgrows the store's cap.
LinMap orbitReduce(const LinMap& r, OrbitStore& store);

/// Same closure, returning the orbit id.
int orbitIdOf(const LinMap& r, OrbitStore& store);

struct OrbitSummary {
  std::string canonicalEncoding;
  std::uint64_t members = 0;      // found operators in this orbit
  std::uint64_t orbitSize = 0;    // full orbit size in the ambient space
  Fingerprint fp;
  std::vector<std::string> catalogCases;  // catalog instances in this orbit
};

struct ClassifyReport {
  std::string imageTag;
  FieldSpec field;
  bool requireImageExact = false;
  std::uint64_t candidates = 0;
  std::uint64_t rbCount = 0;
  std::vector<std::pair<Fingerprint, std::uint64_t>> fingerprints;  // sorted
  bool fingerprintsAllInCatalog = false;
  std::vector<Fingerprint> novelFingerprints;  // found but not in the catalog
  bool orbitsComputed = false;
  bool orbitBudgetHit = false;
  std::vector<OrbitSummary> orbits;  // sorted by canonical encoding
  std::uint64_t unmatchedOrbitCount = 0;
};

/// Runs enumerateRb, classifies the results by fingerprint against the full
/// Theorem 1 catalog over the same field, and (optionally) merges them into
/// conjugation orbits matched to catalog instances. Deterministic: identical
/// specs produce identical reports.
ClassifyReport classifyRun(const SearchSpec& spec, bool withOrbits);

/// Fingerprints of every catalog instance of the source over the field (full
/// parameter sweep), sorted and deduplicated.
std::vector<Fingerprint> catalogFingerprints(Source source, const FieldSpec& field);

}  // namespace octorb
