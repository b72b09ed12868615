#include "lexalign/doubly_stochastic.hpp"

#include <cmath>
#include <limits>

#include "lexalign/errors.hpp"

namespace lexalign {

double doubly_stochastic_violation(const DenseMatrix& m) {
    if (!m.is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    const std::size_t n = m.rows();
    double worst = 0.0;
    std::vector<double> col_sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v < 0.0) {
                worst = std::max(worst, -v);
            }
            row_sum += v;
            col_sums[j] += v;
        }
        worst = std::max(worst, std::abs(row_sum - 1.0));
    }
    for (double c : col_sums) {
        worst = std::max(worst, std::abs(c - 1.0));
    }
    return worst;
}

DoublyStochasticMatrix::DoublyStochasticMatrix(DenseMatrix values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
    if (!values_.is_square()) {
        throw ValidationError("DoublyStochasticMatrix: matrix not square");
    }
    if (doubly_stochastic_violation(values_) > tolerance_) {
        throw ValidationError("DoublyStochasticMatrix: marginals violate tolerance");
    }
}

DoublyStochasticMatrix barycenter(std::size_t n) {
    if (n == 0) {
        throw DomainError("barycenter: n must be at least 1");
    }
    return DoublyStochasticMatrix(DenseMatrix::constant(n, n, 1.0 / static_cast<double>(n)));
}

} // namespace lexalign
