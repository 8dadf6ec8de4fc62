#pragma once

#include "ddbar/rational.hpp"

#include <vector>

namespace ddbar {

// Dense row-major matrix over the Gaussian rationals. Zero-row and
// zero-column shapes are first-class: they appear at the boundary of every
// bigraded range, and all operations (rank, products, stacking) must stay
// total on them.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& at(int r, int c) const {
        return entries_[static_cast<size_t>(r) * cols_ + c];
    }

    Matrix operator*(const Matrix& rhs) const; // DimensionError on mismatch
    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);

    Matrix conjugate() const;
    Matrix transpose() const;
    bool is_zero() const;

    std::vector<Complex> column(int c) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Complex> entries_;
};

Matrix vstack(const Matrix& a, const Matrix& b); // column counts must agree
Matrix hstack(const Matrix& a, const Matrix& b); // row counts must agree

// Column-space dimension by fraction-preserving Gaussian elimination.
int rank(const Matrix& m);
int kernel_dim(const Matrix& m); // cols - rank

// Columns form a basis of ker m, built from the reduced echelon form with
// free columns taken in ascending order. Deterministic.
Matrix kernel_basis(const Matrix& m);

// Incremental span of a growing set of vectors, kept as echelon rows with
// ascending pivots. insert() reports whether the vector enlarged the span;
// used to pick deterministic quotient representatives.
class SpanTracker {
public:
    explicit SpanTracker(int dim) : dim_(dim) {}

    bool insert(std::vector<Complex> v);
    int rank() const { return static_cast<int>(echelon_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<std::pair<int, std::vector<Complex>>> echelon_; // sorted by pivot
};

} // namespace ddbar
