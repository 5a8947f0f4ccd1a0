#include "octorb/linmap.hpp"

#include <tuple>

namespace octorb {

LinMap zeroMap() {
  LinMap m;
  m.setZero();
  return m;
}

LinMap identityMap() {
  LinMap m = zeroMap();
  for (int i = 0; i < 8; ++i) m(i, i) = Scalar(1);
  return m;
}

LinMap inverse(const LinMap& m) {
  // RREF of [m | I]; the right block becomes m^-1.
  MatrixX aug(8, 16);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      aug(i, j) = m(i, j);
      aug(i, 8 + j) = Scalar(i == j ? 1 : 0);
    }
  }
  rowReduce(aug);
  // Invertible iff the left block reduced to the identity.
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (aug(i, j) != Scalar(i == j ? 1 : 0)) throw Singular("map is not invertible");
  LinMap inv;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) inv(i, j) = aug(i, 8 + j);
  return inv;
}

namespace {

std::vector<Octo> rowsToOctos(const MatrixX& rref) {
  std::vector<Octo> out;
  for (int r = 0; r < rref.rows(); ++r) {
    Octo v;
    for (int c = 0; c < 8; ++c) v(c) = rref(r, c);
    out.push_back(v);
  }
  return out;
}

// Canonical RREF basis of the column space.
MatrixX imageRows(const LinMap& r) {
  MatrixX m = r.transpose();
  int rank = rowReduce(m);
  return m.topRows(rank);
}

// Canonical RREF basis of the null space.
MatrixX kernelRows(const LinMap& r) {
  MatrixX m = r;
  int rank = rowReduce(m);
  // Pivot bookkeeping: pivots[c] = row index of the pivot in column c, or -1.
  std::array<int, 8> pivotRow;
  pivotRow.fill(-1);
  int row = 0;
  for (int c = 0; c < 8 && row < rank; ++c) {
    if (!m(row, c).isZero()) pivotRow[c] = row++;
  }
  MatrixX kernel(8 - rank, 8);
  int k = 0;
  for (int c = 0; c < 8; ++c) {
    if (pivotRow[c] >= 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (j == c)
        kernel(k, j) = Scalar(1);
      else if (pivotRow[j] >= 0)
        kernel(k, j) = -m(pivotRow[j], c);
      else
        kernel(k, j) = Scalar(0);
    }
    ++k;
  }
  rowReduce(kernel);
  return kernel;
}

}  // namespace

RankDecomposition rankKernelImage(const LinMap& r) {
  RankDecomposition out;
  MatrixX img = imageRows(r);
  MatrixX ker = kernelRows(r);
  out.rank = static_cast<int>(img.rows());
  out.image = rowsToOctos(img);
  out.kernel = rowsToOctos(ker);
  return out;
}

std::optional<RbWitness> rbWitness(const LinMap& r) {
  std::array<Octo, 8> columns;
  for (int i = 0; i < 8; ++i) columns[i] = r.col(i);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Octo lhs = mul(columns[i], columns[j]);
      Octo arg = mul(columns[i], basisOcto(j)) + mul(basisOcto(i), columns[j]);
      Octo rhs = r * arg;
      if (!exactEq(lhs, rhs)) return RbWitness{i, j, lhs, rhs};
    }
  }
  return std::nullopt;
}

LinMap conjugate(const LinMap& r, const LinMap& phi) {
  LinMap phiInv = inverse(phi);
  return phi * r * phiInv;
}

LinMap scale(const LinMap& r, const Scalar& lambda) {
  LinMap out;
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) out(i, j) = lambda * r(i, j);
  return out;
}

bool bimoduleCheck(const LinMap& r) {
  RankDecomposition rk = rankKernelImage(r);
  MatrixX kernelSpan = rowsFrom(rk.kernel);
  for (const Octo& u : rk.image) {
    for (const Octo& k : rk.kernel) {
      if (!spanContains(kernelSpan, mul(u, k))) return false;
      if (!spanContains(kernelSpan, mul(k, u))) return false;
    }
  }
  return true;
}

bool operator<(const Fingerprint& a, const Fingerprint& b) {
  return std::tie(a.d1, a.d2, a.d3, a.k, a.imgSquare, a.imgUnital) <
         std::tie(b.d1, b.d2, b.d3, b.k, b.imgSquare, b.imgUnital);
}

std::string Fingerprint::str() const {
  return "(d1=" + std::to_string(d1) + ",d2=" + std::to_string(d2) +
         ",d3=" + std::to_string(d3) + ",k=" + std::to_string(k) +
         ",sq=" + std::to_string(imgSquare) + ",unital=" + (imgUnital ? "1" : "0") + ")";
}

Fingerprint fingerprint(const LinMap& r) {
  Fingerprint fp;
  LinMap r2 = r * r;
  LinMap r3 = r2 * r;
  MatrixX img = imageRows(r);
  MatrixX ker = kernelRows(r);
  fp.d1 = static_cast<int>(img.rows());
  fp.d2 = static_cast<int>(imageRows(r2).rows());
  fp.d3 = static_cast<int>(imageRows(r3).rows());
  fp.k = intersectionDim(img, ker);
  std::vector<Octo> imageBasis = rowsToOctos(img);
  std::vector<Octo> products;
  for (const Octo& u : imageBasis)
    for (const Octo& v : imageBasis) products.push_back(mul(u, v));
  if (products.empty()) {
    fp.imgSquare = 0;
  } else {
    fp.imgSquare = static_cast<int>(spanRows(products).rows());
  }
  fp.imgUnital = spanContains(img, octoUnit());
  return fp;
}

}  // namespace octorb
