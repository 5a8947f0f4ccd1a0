#include "octorb/rref.hpp"

namespace octorb {

int rowReduce(MatrixX& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m(r, col).isZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    Scalar inv = m(rank, col).inverse();
    for (int c = col; c < cols; ++c) m(rank, c) = m(rank, c) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m(r, col).isZero()) continue;
      Scalar f = m(r, col);
      for (int c = col; c < cols; ++c) m(r, c) = m(r, c) - f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

MatrixX rowsFrom(std::span<const Octo> vectors) {
  MatrixX m(static_cast<int>(vectors.size()), 8);
  for (int r = 0; r < static_cast<int>(vectors.size()); ++r)
    for (int c = 0; c < 8; ++c) m(r, c) = vectors[r](c);
  return m;
}

MatrixX spanRows(std::span<const Octo> vectors) {
  MatrixX m = rowsFrom(vectors);
  int rank = rowReduce(m);
  return m.topRows(rank);
}

bool spanContains(const MatrixX& rref, const Octo& v) {
  // Reduce v by the pivots; membership iff the residual vanishes.
  Octo residual = v;
  for (int r = 0; r < rref.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < rref.cols(); ++c) {
      if (!rref(r, c).isZero()) {
        lead = c;
        break;
      }
    }
    if (lead < 0) continue;
    if (residual(lead).isZero()) continue;
    Scalar f = residual(lead);  // pivot is 1
    for (int c = 0; c < 8; ++c) residual(c) = residual(c) - f * rref(r, c);
  }
  return isZero(residual);
}

int intersectionDim(const MatrixX& rrefA, const MatrixX& rrefB) {
  // dim(A) + dim(B) - dim(A + B)
  MatrixX stacked(rrefA.rows() + rrefB.rows(), 8);
  stacked.topRows(rrefA.rows()) = rrefA;
  stacked.bottomRows(rrefB.rows()) = rrefB;
  int sumDim = rowReduce(stacked);
  return static_cast<int>(rrefA.rows() + rrefB.rows()) - sumDim;
}

}  // namespace octorb
