#include "lexalign/qap.hpp"

#include "lexalign/errors.hpp"

namespace lexalign {

namespace {

void require_square_equal(const DenseMatrix& gx, const DenseMatrix& gy, std::size_t p_size) {
    if (!gx.is_square() || !gy.is_square() || gx.rows() != gy.rows() || gx.rows() != p_size) {
        throw ShapeError("graph matching objective: matrices must be square with equal size");
    }
}

} // namespace

double qap_objective(const DenseMatrix& gx, const DenseMatrix& gy, const DenseMatrix& p) {
    if (!p.is_square()) {
        throw ShapeError("qap_objective: P must be square");
    }
    require_square_equal(gx, gy, p.rows());
    // Two products, then an elementwise trace against Gx; no further square temporary.
    RowMajorMatrix t = p.view() * gy.view();
    t = t * p.view().transpose();
    return (gx.view().cwiseProduct(t)).sum();
}

double edge_disagreement(const DenseMatrix& gx, const DenseMatrix& gy,
                         const PermutationMapping& p) {
    require_square_equal(gx, gy, p.size());
    const std::size_t n = p.size();
    // (P Gy P^T)(i, j) = Gy(image(i), image(j)); gather directly.
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = gx(i, j) - gy(p(i), p(j));
            total += d * d;
        }
    }
    return total;
}

} // namespace lexalign
