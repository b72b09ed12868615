#pragma once

#include <cstddef>

#include "lexalign/dense_matrix.hpp"

namespace lexalign {

/// Largest deviation of any row or column sum of `m` from 1, or of any
/// entry below 0. Infinity for non-square input.
double doubly_stochastic_violation(const DenseMatrix& m);

/// Square nonnegative matrix whose row and column sums are within
/// `tolerance` of 1: the relaxed matching state and the transport step
/// direction live here.
class DoublyStochasticMatrix {
public:
    DoublyStochasticMatrix() = default;

    /// Validates nonnegativity and marginals against `tolerance`.
    explicit DoublyStochasticMatrix(DenseMatrix values, double tolerance = 1e-6);

    std::size_t size() const { return values_.rows(); }
    const DenseMatrix& matrix() const { return values_; }
    double tolerance() const { return tolerance_; }

    double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

    bool operator==(const DoublyStochasticMatrix& other) const = default;

private:
    DenseMatrix values_;
    double tolerance_ = 1e-6;
};

/// The flat matrix J/n: every entry 1/n. Default start of the relaxation.
DoublyStochasticMatrix barycenter(std::size_t n);

} // namespace lexalign
