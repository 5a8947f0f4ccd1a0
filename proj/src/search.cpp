#include "octorb/search.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

#include "octorb/rref.hpp"

namespace octorb {

namespace {

std::uint32_t residueOf(const Scalar& s, const FieldSpec& field) {
  Scalar lifted = s + Scalar::of(field, 0);
  return lifted.residueValue();
}

// ---- fast mod-p scan ------------------------------------------------------
//
// Candidates are written in image-subalgebra coordinates: R(e_k) lies in
// span(s_0..s_{d-1}), so a candidate is the 8 x d table of those coordinates.
// Both sides of the RB identity stay inside the span (the image basis is
// multiplicatively closed), which keeps the per-pair check down to d residues.

struct ColRule {
  int freeSlot = -1;                 // >= 0: column is the slot-th free column
  std::array<std::uint32_t, 8> combo{};  // else: combination of free columns
};

struct FastContext {
  std::uint32_t p = 3;
  int d = 1;  // image dimension
  int m = 8;  // free domain dimension
  std::vector<int> freeIdx;
  std::array<ColRule, 8> rule;
  std::uint32_t sProd[4][4][4] = {};     // S-coords of s_a s_b
  std::uint32_t rightMul[4][8][8] = {};  // octo coords of s_a e_j
  std::uint32_t leftMul[8][4][8] = {};   // octo coords of e_i s_b
  std::vector<Octo> imageBasis;
  FieldSpec field = FieldSpec::prime(3);
};

FastContext buildContext(const SearchSpec& spec) {
  if (!spec.field.isPrimeField())
    throw Error("enumeration runs over prime fields only");
  FastContext ctx;
  ctx.field = spec.field;
  ctx.p = spec.field.p;
  ctx.imageBasis = spec.imageBasis;
  ctx.d = static_cast<int>(ctx.imageBasis.size());
  if (ctx.d > 4) throw Error("image constraint may have at most 4 basis vectors");

  SubalgebraReport rep = subalgebraCheck(ctx.imageBasis);
  if (!rep.independent || !rep.closed)
    throw Error("image constraint must be an independent, multiplicatively closed basis");

  // Kernel constraint: R vanishes on span(kernelContains); the free domain
  // directions are the non-pivot standard basis vectors, and each pivot
  // column is the forced combination of free columns.
  MatrixX kernel(0, 8);
  if (!spec.kernelContains.empty()) {
    std::vector<Octo> lifted;
    for (const Octo& v : spec.kernelContains) {
      Octo w;
      for (int c = 0; c < 8; ++c) w(c) = v(c) + Scalar::of(spec.field, 0);
      lifted.push_back(w);
    }
    kernel = spanRows(lifted);
  }
  std::array<int, 8> pivotRowOf;
  pivotRowOf.fill(-1);
  for (int r = 0; r < kernel.rows(); ++r) {
    for (int c = 0; c < 8; ++c) {
      if (!kernel(r, c).isZero()) {
        pivotRowOf[c] = r;
        break;
      }
    }
  }
  for (int c = 0; c < 8; ++c)
    if (pivotRowOf[c] < 0) ctx.freeIdx.push_back(c);
  ctx.m = static_cast<int>(ctx.freeIdx.size());
  for (int slot = 0; slot < ctx.m; ++slot) ctx.rule[ctx.freeIdx[slot]].freeSlot = slot;
  for (int c = 0; c < 8; ++c) {
    int r = pivotRowOf[c];
    if (r < 0) continue;
    // e_c = (kernel row r) - sum_f kernel(r,f) e_f over free f, so
    // R(e_c) = -sum_f kernel(r,f) R(e_f).
    for (int slot = 0; slot < ctx.m; ++slot) {
      Scalar coeff = -kernel(r, ctx.freeIdx[slot]);
      ctx.rule[c].combo[slot] = residueOf(coeff, spec.field);
    }
  }

  // S-coordinates of the pairwise products of the image basis.
  MatrixX basisCols(8, ctx.d);
  for (int a = 0; a < ctx.d; ++a)
    for (int c = 0; c < 8; ++c) basisCols(c, a) = ctx.imageBasis[a](c);
  for (int a = 0; a < ctx.d; ++a) {
    for (int b = 0; b < ctx.d; ++b) {
      Octo prod = mul(ctx.imageBasis[a], ctx.imageBasis[b]);
      MatrixX solve(8, ctx.d + 1);
      for (int c = 0; c < 8; ++c) {
        for (int col = 0; col < ctx.d; ++col) solve(c, col) = basisCols(c, col);
        solve(c, ctx.d) = prod(c) + Scalar::of(spec.field, 0);
      }
      rowReduce(solve);
      for (int row = 0; row < ctx.d; ++row)
        ctx.sProd[a][b][row] = residueOf(solve(row, ctx.d), spec.field);
    }
  }

  for (int a = 0; a < ctx.d; ++a) {
    for (int j = 0; j < 8; ++j) {
      Octo prod = mul(ctx.imageBasis[a], basisOcto(j));
      for (int k = 0; k < 8; ++k) ctx.rightMul[a][j][k] = residueOf(prod(k), spec.field);
    }
  }
  for (int i = 0; i < 8; ++i) {
    for (int b = 0; b < ctx.d; ++b) {
      Octo prod = mul(basisOcto(i), ctx.imageBasis[b]);
      for (int k = 0; k < 8; ++k) ctx.leftMul[i][b][k] = residueOf(prod(k), spec.field);
    }
  }
  return ctx;
}

using ColsS = std::array<std::array<std::uint32_t, 4>, 8>;

void materializeColumns(const FastContext& ctx, const std::uint8_t* digits, ColsS& cols) {
  for (int k = 0; k < 8; ++k) {
    const ColRule& rule = ctx.rule[k];
    if (rule.freeSlot >= 0) {
      const std::uint8_t* row = digits + rule.freeSlot * ctx.d;
      for (int a = 0; a < ctx.d; ++a) cols[k][a] = row[a];
    } else {
      for (int a = 0; a < ctx.d; ++a) {
        std::uint32_t acc = 0;
        for (int slot = 0; slot < ctx.m; ++slot)
          acc += rule.combo[slot] * digits[slot * ctx.d + a];
        cols[k][a] = acc % ctx.p;
      }
    }
  }
}

template <std::uint32_t P>
bool rbHolds(const FastContext& ctx, const ColsS& cols) {
  const int d = ctx.d;
  for (int i = 0; i < 8; ++i) {
    const auto& ci = cols[i];
    for (int j = 0; j < 8; ++j) {
      const auto& cj = cols[j];
      // t = R(e_i) e_j + e_i R(e_j), in octo coordinates
      std::uint32_t t[8] = {};
      for (int a = 0; a < d; ++a) {
        if (ci[a]) {
          const std::uint32_t* row = ctx.rightMul[a][j];
          for (int k = 0; k < 8; ++k) t[k] += ci[a] * row[k];
        }
        if (cj[a]) {
          const std::uint32_t* row = ctx.leftMul[i][a];
          for (int k = 0; k < 8; ++k) t[k] += cj[a] * row[k];
        }
      }
      for (int c = 0; c < d; ++c) {
        // lhs = R(e_i) R(e_j) in S-coordinates
        std::uint32_t lhs = 0;
        for (int a = 0; a < d; ++a) {
          if (!ci[a]) continue;
          std::uint32_t inner = 0;
          for (int b = 0; b < d; ++b) inner += cj[b] * ctx.sProd[a][b][c];
          lhs += ci[a] * inner;
        }
        std::uint32_t rhs = 0;
        for (int k = 0; k < 8; ++k)
          if (t[k]) rhs += (t[k] % P) * cols[k][c];
        if (lhs % P != rhs % P) return false;
      }
    }
  }
  return true;
}

bool rbHoldsDispatch(const FastContext& ctx, const ColsS& cols) {
  switch (ctx.p) {
    case 3: return rbHolds<3>(ctx, cols);
    case 5: return rbHolds<5>(ctx, cols);
    case 7: return rbHolds<7>(ctx, cols);
    default: break;
  }
  // Generic-p fallback, same structure.
  const std::uint32_t p = ctx.p;
  const int d = ctx.d;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      std::uint32_t t[8] = {};
      for (int a = 0; a < d; ++a) {
        if (cols[i][a])
          for (int k = 0; k < 8; ++k) t[k] += cols[i][a] * ctx.rightMul[a][j][k];
        if (cols[j][a])
          for (int k = 0; k < 8; ++k) t[k] += cols[j][a] * ctx.leftMul[i][a][k];
      }
      for (int c = 0; c < d; ++c) {
        std::uint32_t lhs = 0;
        for (int a = 0; a < d; ++a) {
          if (!cols[i][a]) continue;
          std::uint32_t inner = 0;
          for (int b = 0; b < d; ++b) inner += cols[j][b] * ctx.sProd[a][b][c];
          lhs += cols[i][a] * inner;
        }
        std::uint32_t rhs = 0;
        for (int k = 0; k < 8; ++k)
          if (t[k]) rhs += (t[k] % p) * cols[k][c];
        if (lhs % p != rhs % p) return false;
      }
    }
  }
  return true;
}

int imageRankModP(const FastContext& ctx, const ColsS& cols) {
  // Gaussian elimination on the d x 8 table of S-coordinates.
  std::array<std::array<std::uint32_t, 8>, 4> rows{};
  for (int a = 0; a < ctx.d; ++a)
    for (int k = 0; k < 8; ++k) rows[a][k] = cols[k][a] % ctx.p;
  const std::uint32_t p = ctx.p;
  int rank = 0;
  for (int col = 0; col < 8 && rank < ctx.d; ++col) {
    int pivot = -1;
    for (int r = rank; r < ctx.d; ++r)
      if (rows[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint32_t pv = rows[rank][col];
    for (int r = rank + 1; r < ctx.d; ++r) {
      const std::uint32_t rv = rows[r][col];
      if (!rv) continue;
      // row_r <- pv * row_r - rv * row_rank, kept non-negative before the mod
      for (int k = 0; k < 8; ++k)
        rows[r][k] = (rows[r][k] * pv + p * p - rows[rank][k] * rv) % p;
    }
    ++rank;
  }
  return rank;
}

void digitsFromCounter(std::uint64_t counter, std::uint32_t p, int n, std::uint8_t* digits) {
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<std::uint8_t>(counter % p);
    counter /= p;
  }
}

bool advance(std::uint8_t* digits, int n, std::uint32_t p) {
  for (int i = n - 1; i >= 0; --i) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

LinMap candidateToLinMap(const FastContext& ctx, const ColsS& cols) {
  LinMap r = zeroMap();
  for (int k = 0; k < 8; ++k) {
    Octo col = octoZero();
    for (int a = 0; a < ctx.d; ++a) {
      if (!cols[k][a]) continue;
      Scalar coeff = Scalar::residue(cols[k][a], ctx.p);
      for (int c = 0; c < 8; ++c) col(c) = col(c) + coeff * ctx.imageBasis[a](c);
    }
    r.col(k) = col;
  }
  // Normalize every entry into the field so encodings are uniform.
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) r(i, j) = r(i, j) + Scalar::of(ctx.field, 0);
  return r;
}

}  // namespace

SearchResult enumerateRb(const SearchSpec& spec) {
  FastContext ctx = buildContext(spec);
  const int n = ctx.m * ctx.d;

  unsigned __int128 count = 1;
  for (int i = 0; i < n; ++i) {
    count *= ctx.p;
    if (count > spec.budget)
      throw BudgetExceeded("candidate count p^" + std::to_string(n) + " exceeds budget " +
                           std::to_string(spec.budget));
  }
  const std::uint64_t total = static_cast<std::uint64_t>(count);

  const int threads = std::max(1, spec.threads);
  std::vector<std::vector<std::vector<std::uint8_t>>> hits(threads);

  auto worker = [&](int t) {
    std::uint64_t begin = total / threads * t + std::min<std::uint64_t>(t, total % threads);
    std::uint64_t end = begin + total / threads + (static_cast<std::uint64_t>(t) < total % threads ? 1 : 0);
    if (begin >= end) return;
    std::vector<std::uint8_t> digits(std::max(n, 1));
    digitsFromCounter(begin, ctx.p, n, digits.data());
    ColsS cols{};
    for (std::uint64_t c = begin; c < end; ++c) {
      materializeColumns(ctx, digits.data(), cols);
      if (rbHoldsDispatch(ctx, cols))
        hits[t].emplace_back(digits.begin(), digits.begin() + n);
      if (c + 1 < end) advance(digits.data(), n, ctx.p);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SearchResult result;
  result.candidates = total;
  ColsS cols{};
  for (int t = 0; t < threads; ++t) {
    for (const auto& digits : hits[t]) {
      materializeColumns(ctx, digits.data(), cols);
      if (spec.requireImageExact && imageRankModP(ctx, cols) != ctx.d) continue;
      result.operators.push_back(candidateToLinMap(ctx, cols));
    }
  }
  return result;
}

// ---- orbit machinery ------------------------------------------------------

namespace {

using Mat64 = std::array<std::uint8_t, 64>;

void matMulInto(const Mat64& a, const Mat64& b, const std::uint8_t* modLut, Mat64& out) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      std::uint32_t acc = 0;
      for (int k = 0; k < 8; ++k) acc += std::uint32_t(a[i * 8 + k]) * b[k * 8 + j];
      out[i * 8 + j] = modLut[acc];
    }
  }
}

bool isIdentity(const Mat64& m) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (m[i * 8 + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::uint32_t primitiveRoot(std::uint32_t p) {
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t v = g % p;
    std::uint32_t order = 1;
    while (v != 1) {
      v = (std::uint64_t(v) * g) % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;  // p = 3 falls through only for p = 2, excluded by FieldSpec
}

}  // namespace

OrbitStore::OrbitStore(const FieldSpec& field, std::uint64_t orbitCap)
    : field_(field), orbitCap_(orbitCap) {
  if (!field.isPrimeField()) throw Error("orbit reduction runs over prime fields only");
  if (field.p > 13) throw Error("orbit reduction supports p <= 13");
  const std::uint32_t p = field.p;

  modLut_.resize(8 * (p - 1) * (p - 1) + 1);
  for (std::size_t v = 0; v < modLut_.size(); ++v)
    modLut_[v] = static_cast<std::uint8_t>(v % p);

  // The one-parameter unipotent families are additive subgroups, so alpha = 1
  // generates every parameter value; the multiplicative families are cyclic,
  // so one primitive root does. The generated group is exactly the group of
  // all catalog maps.
  const Scalar one = Scalar::residue(1, p);
  const Scalar root = Scalar::residue(primitiveRoot(p), p);
  std::vector<MapSpec> specs = {MapSpec::classical(), MapSpec::of(1), MapSpec::of(4),
                                MapSpec::of(5), MapSpec::of(12)};
  for (int prop : {2, 3, 9, 10, 11, 13, 14, 15, 16, 17}) specs.push_back(MapSpec::of(prop, one));
  for (int prop : {6, 7, 8}) specs.push_back(MapSpec::of(prop, root));

  std::unordered_set<Key, KeyHash> seen;
  for (const MapSpec& spec : specs) {
    LinMap phi = buildMap(spec);
    Mat64 g = toMat(phi);
    if (isIdentity(g)) continue;
    if (!seen.insert(pack(g)).second) continue;
    generators_.emplace_back(g, toMat(inverse(phi)));
  }
}

OrbitStore::Key OrbitStore::pack(const Mat64& m) {
  Key k{};
  for (int i = 0; i < 64; ++i) {
    int word = i / 16;
    int shift = (15 - i % 16) * 4;
    k[word] |= std::uint64_t(m[i] & 0xF) << shift;
  }
  return k;
}

OrbitStore::Mat64 OrbitStore::unpack(const Key& k) {
  Mat64 m{};
  for (int i = 0; i < 64; ++i) {
    int word = i / 16;
    int shift = (15 - i % 16) * 4;
    m[i] = static_cast<std::uint8_t>((k[word] >> shift) & 0xF);
  }
  return m;
}

OrbitStore::Mat64 OrbitStore::toMat(const LinMap& r) const {
  Mat64 out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      out[i * 8 + j] = static_cast<std::uint8_t>(residueOf(r(i, j), field_));
  return out;
}

LinMap OrbitStore::fromMat(const Mat64& m) const {
  LinMap r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r(i, j) = Scalar::residue(m[i * 8 + j], field_.p);
  return r;
}

std::string OrbitStore::encode(const LinMap& r) const {
  Mat64 m = toMat(r);
  std::string k(64, '0');
  for (int i = 0; i < 64; ++i) k[i] = static_cast<char>('0' + m[i]);
  return k;
}

std::optional<int> OrbitStore::lookup(const LinMap& r) const {
  auto it = orbitOf_.find(pack(toMat(r)));
  if (it == orbitOf_.end()) return std::nullopt;
  return it->second;
}

LinMap OrbitStore::canonical(int orbitId) const {
  return fromMat(unpack(canonicalKeys_[orbitId]));
}

int orbitIdOf(const LinMap& r, OrbitStore& store) {
  const std::uint32_t p = store.field_.p;
  const std::uint8_t* modLut = store.modLut_.data();
  Mat64 start = store.toMat(r);
  OrbitStore::Key startKey = OrbitStore::pack(start);
  if (auto it = store.orbitOf_.find(startKey); it != store.orbitOf_.end()) return it->second;

  std::unordered_set<OrbitStore::Key, OrbitStore::KeyHash> visited;
  std::deque<Mat64> queue;
  visited.insert(startKey);
  queue.push_back(start);
  OrbitStore::Key canonical = startKey;

  Mat64 tmp, next;
  while (!queue.empty()) {
    Mat64 m = queue.front();
    queue.pop_front();
    auto offer = [&](const Mat64& candidate) {
      auto [it, inserted] = visited.insert(OrbitStore::pack(candidate));
      if (!inserted) return;
      if (visited.size() > store.orbitCap_)
        throw OrbitBudgetExceeded("orbit of the given operator grew past " +
                                  std::to_string(store.orbitCap_) + " elements");
      if (*it < canonical) canonical = *it;
      queue.push_back(candidate);
    };
    for (const auto& [g, gi] : store.generators_) {
      matMulInto(g, m, modLut, tmp);
      matMulInto(tmp, gi, modLut, next);
      offer(next);
    }
    for (std::uint32_t lambda = 2; lambda < p; ++lambda) {
      for (int i = 0; i < 64; ++i) next[i] = modLut[lambda * m[i]];
      offer(next);
    }
  }

  int id = static_cast<int>(store.canonicalKeys_.size());
  store.canonicalKeys_.push_back(canonical);
  store.orbitSizes_.push_back(visited.size());
  for (const OrbitStore::Key& k : visited) store.orbitOf_.emplace(k, id);
  return id;
}

LinMap orbitReduce(const LinMap& r, OrbitStore& store) {
  return store.canonical(orbitIdOf(r, store));
}

// ---- classification -------------------------------------------------------

std::vector<Fingerprint> catalogFingerprints(Source source, const FieldSpec& field) {
  std::vector<Fingerprint> fps;
  for (const CatalogEntry& entry : enumerateCatalogFullSweep(source, field))
    fps.push_back(fingerprint(entry.op));
  std::sort(fps.begin(), fps.end());
  fps.erase(std::unique(fps.begin(), fps.end()), fps.end());
  return fps;
}

ClassifyReport classifyRun(const SearchSpec& spec, bool withOrbits) {
  ClassifyReport report;
  report.imageTag = spec.imageTag;
  report.field = spec.field;
  report.requireImageExact = spec.requireImageExact;

  SearchResult found = enumerateRb(spec);
  report.candidates = found.candidates;
  report.rbCount = found.operators.size();

  std::map<Fingerprint, std::uint64_t> fpCounts;
  std::vector<Fingerprint> fps;
  fps.reserve(found.operators.size());
  for (const LinMap& op : found.operators) {
    Fingerprint fp = fingerprint(op);
    fps.push_back(fp);
    ++fpCounts[fp];
  }
  for (const auto& [fp, count] : fpCounts) report.fingerprints.emplace_back(fp, count);

  // One catalog sweep serves both the fingerprint screen and orbit seeding.
  std::vector<CatalogEntry> catalog = enumerateCatalogFullSweep(Source::Theorem1, spec.field);
  std::vector<Fingerprint> catalogFps;
  catalogFps.reserve(catalog.size());
  for (const CatalogEntry& entry : catalog) catalogFps.push_back(fingerprint(entry.op));
  std::vector<Fingerprint> catalogSet = catalogFps;
  std::sort(catalogSet.begin(), catalogSet.end());
  catalogSet.erase(std::unique(catalogSet.begin(), catalogSet.end()), catalogSet.end());

  Fingerprint zeroFp;  // the zero operator: all dimensions zero
  report.fingerprintsAllInCatalog = true;
  for (const auto& [fp, count] : report.fingerprints) {
    if (fp == zeroFp) continue;
    if (!std::binary_search(catalogSet.begin(), catalogSet.end(), fp)) {
      report.fingerprintsAllInCatalog = false;
      report.novelFingerprints.push_back(fp);
    }
  }

  if (!withOrbits) return report;

  OrbitStore store(spec.field);
  std::unordered_map<int, OrbitSummary> orbits;
  std::unordered_map<int, std::vector<std::string>> orbitCases;

  // Seed the store with the catalog instances whose fingerprints occur among
  // the found operators; fingerprints are orbit invariants, so nothing else
  // can match.
  try {
    for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
      const CatalogEntry& entry = catalog[idx];
      if (!fpCounts.count(catalogFps[idx])) continue;
      int id = orbitIdOf(entry.op, store);
      orbitCases[id].push_back(entry.spec.id());
    }
    for (std::size_t idx = 0; idx < found.operators.size(); ++idx) {
      const LinMap& op = found.operators[idx];
      int id = orbitIdOf(op, store);
      OrbitSummary& summary = orbits[id];
      if (summary.members == 0) {
        summary.canonicalEncoding = store.encode(store.canonical(id));
        summary.orbitSize = store.orbitSize(id);
        summary.fp = fps[idx];
      }
      ++summary.members;
    }
  } catch (const OrbitBudgetExceeded&) {
    report.orbitBudgetHit = true;
    return report;
  }

  report.orbitsComputed = true;
  for (auto& [id, summary] : orbits) {
    auto it = orbitCases.find(id);
    if (it != orbitCases.end()) {
      std::sort(it->second.begin(), it->second.end());
      it->second.erase(std::unique(it->second.begin(), it->second.end()), it->second.end());
      summary.catalogCases = it->second;
    } else if (summary.fp == Fingerprint{}) {
      summary.catalogCases = {"zero"};
    } else {
      ++report.unmatchedOrbitCount;
    }
    report.orbits.push_back(summary);
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const OrbitSummary& a, const OrbitSummary& b) {
              return a.canonicalEncoding < b.canonicalEncoding;
            });
  return report;
}

}  // namespace octorb
