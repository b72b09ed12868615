#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lexalign {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixView = Eigen::Map<const RowMajorMatrix>;
using MatrixView = Eigen::Map<RowMajorMatrix>;

/// Row-major dense real matrix: the carrier for embeddings, graphs,
/// transport plans and gradients. Constructors reject non-finite entries;
/// reductions are always accumulated in double precision.
class DenseMatrix {
public:
    DenseMatrix() = default;

    /// Zero-filled rows x cols matrix.
    DenseMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of row-major `values`; length must be rows * cols.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix constant(std::size_t rows, std::size_t cols, double value);
    static DenseMatrix from_eigen(const Eigen::Ref<const RowMajorMatrix>& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return values_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    double& at(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }

    const std::vector<double>& values() const { return values_; }

    ConstMatrixView view() const;
    MatrixView view();

    DenseMatrix transposed() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_symmetric(double tol = 0.0) const;
    bool approx_equal(const DenseMatrix& other, double tol) const;

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;

    void check_finite() const;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Gathers the square submatrix m[order, order].
DenseMatrix gather_square(const DenseMatrix& m, const std::vector<std::size_t>& order);

} // namespace lexalign
