#pragma once

#include "lexalign/dense_matrix.hpp"
#include "lexalign/permutation.hpp"

namespace lexalign {

/// trace(Gx^T P Gy P^T): the relaxed graph-matching objective. All three
/// matrices must be square with equal size.
double qap_objective(const DenseMatrix& gx, const DenseMatrix& gy, const DenseMatrix& p);

/// ||Gx - P Gy P^T||_F^2 for a hard permutation. Satisfies
/// ||Gx||^2 + ||Gy||^2 - 2 qap_objective = edge_disagreement.
double edge_disagreement(const DenseMatrix& gx, const DenseMatrix& gy,
                         const PermutationMapping& p);

} // namespace lexalign
