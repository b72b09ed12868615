#include "lexalign/dense_matrix.hpp"

#include <cmath>

#include "lexalign/errors.hpp"

namespace lexalign {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) {
        throw ShapeError("DenseMatrix: values length does not match rows * cols");
    }
    check_finite();
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    values_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("DenseMatrix: ragged initializer");
        }
        values_.insert(values_.end(), row.begin(), row.end());
    }
    check_finite();
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::constant(std::size_t rows, std::size_t cols, double value) {
    if (!std::isfinite(value)) {
        throw ValidationError("DenseMatrix: non-finite fill value");
    }
    DenseMatrix m(rows, cols);
    std::fill(m.values_.begin(), m.values_.end(), value);
    return m;
}

DenseMatrix DenseMatrix::from_eigen(const Eigen::Ref<const RowMajorMatrix>& m) {
    DenseMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    out.view() = m;
    out.check_finite();
    return out;
}

ConstMatrixView DenseMatrix::view() const {
    return ConstMatrixView(values_.data(), static_cast<Eigen::Index>(rows_),
                           static_cast<Eigen::Index>(cols_));
}

MatrixView DenseMatrix::view() {
    return MatrixView(values_.data(), static_cast<Eigen::Index>(rows_),
                      static_cast<Eigen::Index>(cols_));
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix out(cols_, rows_);
    out.view() = view().transpose();
    return out;
}

double DenseMatrix::frobenius_norm() const {
    return view().norm();
}

double DenseMatrix::max_abs() const {
    if (values_.empty()) {
        return 0.0;
    }
    return view().cwiseAbs().maxCoeff();
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool DenseMatrix::approx_equal(const DenseMatrix& other, double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        return false;
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (std::abs(values_[i] - other.values_[i]) > tol) {
            return false;
        }
    }
    return true;
}

void DenseMatrix::check_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw ValidationError("DenseMatrix: non-finite entry");
        }
    }
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("multiply: inner dimensions differ");
    }
    DenseMatrix out(a.rows(), b.cols());
    out.view().noalias() = a.view() * b.view();
    return out;
}

DenseMatrix gather_square(const DenseMatrix& m, const std::vector<std::size_t>& order) {
    if (!m.is_square()) {
        throw ShapeError("gather_square: matrix must be square");
    }
    for (std::size_t idx : order) {
        if (idx >= m.rows()) {
            throw LookupError("gather_square: index out of range");
        }
    }
    DenseMatrix out(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < order.size(); ++j) {
            out.at(i, j) = m(order[i], order[j]);
        }
    }
    return out;
}

} // namespace lexalign
