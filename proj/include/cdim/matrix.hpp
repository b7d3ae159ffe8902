#ifndef CDIM_MATRIX_HPP
#define CDIM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>

#include "cdim/rational.hpp"

namespace cdim {

// Dense rational matrix. Row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix from_rows(const std::vector<QVec>& rows);
    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QVec row(size_t i) const;
    QVec col(size_t j) const;
    Matrix transposed() const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(Matrix& m);

// Exact rank over the rationals.
size_t rank(const Matrix& m);

// Canonical basis of the right kernel {x : m x = 0}: one vector per free
// column of the RREF, in increasing column order, with entry 1 at the free
// column (the identity block sits on the free columns). Deterministic.
std::vector<QVec> kernel_basis(const Matrix& m);

// Determinant of a square matrix (Gauss with exact pivoting).
Rational det(const Matrix& m);

// Affine rank helpers: dimension of the affine hull of a point list.
size_t affine_dim(const std::vector<QVec>& points);

}  // namespace cdim

#endif
