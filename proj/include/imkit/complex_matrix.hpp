#ifndef IMKIT_COMPLEX_MATRIX_HPP
#define IMKIT_COMPLEX_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "imkit/types.hpp"

namespace imkit {

/// Dense complex matrix, row-major. Small and immutable in spirit: every
/// algebraic operation returns a fresh value. Sized for dimensions up to a
/// few thousand (the n-copy operators), typically d <= 16.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const cplx> entries() const { return data_; }
    std::span<cplx> entries() { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const; // matmul
    ComplexMatrix operator*(cplx s) const;
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix kron(const ComplexMatrix& o) const;

    cplx trace() const;
    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& o) const;

    /// Exact equality up to an explicit absolute tolerance, entrywise.
    bool approx_equal(const ComplexMatrix& o, double eps) const;

    /// max |(M^dag M - I)_jk|; 0 for a perfect unitary.
    double unitarity_residual() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

/// Eigenvalues of a Hermitian matrix, ascending. The input is assumed
/// Hermitian up to round-off; only the lower triangle is trusted.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

} // namespace imkit

#endif
