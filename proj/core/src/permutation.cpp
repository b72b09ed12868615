#include "lexalign/permutation.hpp"

#include <cmath>

#include "lexalign/errors.hpp"

namespace lexalign {

PermutationMapping::PermutationMapping(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t j : image_) {
        if (j >= image_.size() || seen[j]) {
            throw ValidationError("PermutationMapping: image is not a bijection");
        }
        seen[j] = true;
    }
}

PermutationMapping PermutationMapping::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
        image[i] = i;
    }
    return PermutationMapping(std::move(image));
}

PermutationMapping PermutationMapping::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv[image_[i]] = i;
    }
    return PermutationMapping(std::move(inv));
}

DenseMatrix permutation_to_matrix(const PermutationMapping& p) {
    DenseMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        m.at(i, p(i)) = 1.0;
    }
    return m;
}

PermutationMapping matrix_to_permutation_strict(const DenseMatrix& m, double tol) {
    if (!m.is_square()) {
        throw ValidationError("matrix_to_permutation_strict: matrix not square");
    }
    const std::size_t n = m.rows();
    std::vector<std::size_t> image(n, n);
    std::vector<bool> column_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (std::abs(v - 1.0) <= tol) {
                ++ones;
                image[i] = j;
            } else if (std::abs(v) > tol) {
                throw ValidationError("matrix_to_permutation_strict: entry not in {0,1}");
            }
        }
        if (ones != 1) {
            throw ValidationError("matrix_to_permutation_strict: row without exactly one 1");
        }
        if (column_used[image[i]]) {
            throw ValidationError("matrix_to_permutation_strict: column with more than one 1");
        }
        column_used[image[i]] = true;
    }
    return PermutationMapping(std::move(image));
}

} // namespace lexalign
