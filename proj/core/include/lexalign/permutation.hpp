#pragma once

#include <cstddef>
#include <vector>

#include "lexalign/dense_matrix.hpp"

namespace lexalign {

/// Bijection on {0..n-1}. image(i) = j means vertex i of the first graph is
/// matched to vertex j of the second.
class PermutationMapping {
public:
    PermutationMapping() = default;

    /// Validates that `image` is a bijection.
    explicit PermutationMapping(std::vector<std::size_t> image);

    static PermutationMapping identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }

    PermutationMapping inverse() const;

    bool operator==(const PermutationMapping& other) const = default;

private:
    std::vector<std::size_t> image_;
};

/// As a matrix: exactly one 1 per row and column, row i carrying its 1 at
/// column image(i).
DenseMatrix permutation_to_matrix(const PermutationMapping& p);

/// Strict inverse of permutation_to_matrix: entries must be 0/1 within
/// `tol` with exactly one 1 per row and column.
PermutationMapping matrix_to_permutation_strict(const DenseMatrix& m, double tol = 1e-9);

} // namespace lexalign
