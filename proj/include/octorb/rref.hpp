#pragma once

#include <span>
#include <vector>

#include "octorb/types.hpp"

namespace octorb {

/// In-place reduced row echelon form over the exact scalar field.
/// Returns the rank. Pivots are normalized to 1 and fully eliminated, so the
/// result is the canonical RREF of the row space.
int rowReduce(MatrixX& m);

/// Stacks vectors as rows of a matrix.
MatrixX rowsFrom(std::span<const Octo> vectors);

/// Canonical row basis (RREF, zero rows dropped) of the span of `vectors`.
MatrixX spanRows(std::span<const Octo> vectors);

/// Whether v lies in the row space described by `rref` (must be in RREF).
bool spanContains(const MatrixX& rref, const Octo& v);

/// Dimension of the intersection of two row spaces.
int intersectionDim(const MatrixX& rrefA, const MatrixX& rrefB);

}  // namespace octorb
