#pragma once

#include "lexalign/dense_matrix.hpp"
#include "lexalign/permutation.hpp"

namespace lexalign {

struct AssignmentSolution {
    PermutationMapping permutation;
    double value = 0.0; // achieved sum of profit (or cost) along the permutation
};

/// Exact linear assignment: permutation maximizing sum_i profit(i, perm(i)),
/// i.e. trace(Q^T profit) over permutation matrices Q. Shortest augmenting
/// path, O(n^3). Ties between columns of equal reduced cost resolve to the
/// lowest column index, so the result is a deterministic function of the
/// matrix values.
AssignmentSolution solve_lap_max(const DenseMatrix& profit);

/// Minimizing variant; implemented as solve_lap_max(-cost).
AssignmentSolution solve_lap_min(const DenseMatrix& cost);

} // namespace lexalign
