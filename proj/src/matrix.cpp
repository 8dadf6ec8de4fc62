#include "ddbar/matrix.hpp"

#include "ddbar/errors.hpp"

#include <algorithm>
#include <string>

namespace ddbar {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DimensionError("negative matrix shape");
    entries_.assign(static_cast<size_t>(rows) * cols, Complex());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Complex(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product shape mismatch: " + std::to_string(rows_) +
                             "x" + std::to_string(cols_) + " * " +
                             std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Complex& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Complex& b = rhs.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum shape mismatch");
    Matrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].conj();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex& z) { return z.is_zero(); });
}

std::vector<Complex> Matrix::column(int c) const {
    std::vector<Complex> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw DimensionError("vstack column mismatch: " + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.cols()));
    Matrix out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("hstack row mismatch: " + std::to_string(a.rows()) +
                             " vs " + std::to_string(b.rows()));
    Matrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

int rank(const Matrix& m) {
    Matrix w = m;
    int r = 0;
    for (int c = 0; c < w.cols() && r < w.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < w.rows(); ++i)
            if (!w.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < w.cols(); ++j) std::swap(w.at(r, j), w.at(pivot, j));
        for (int i = r + 1; i < w.rows(); ++i) {
            if (w.at(i, c).is_zero()) continue;
            Complex f = w.at(i, c) / w.at(r, c);
            for (int j = c; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

int kernel_dim(const Matrix& m) { return m.cols() - rank(m); }

Matrix kernel_basis(const Matrix& m) {
    // reduced row echelon form, tracking pivot columns
    Matrix w = m;
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < w.cols() && r < w.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < w.rows(); ++i)
            if (!w.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < w.cols(); ++j) std::swap(w.at(r, j), w.at(pivot, j));
        Complex inv = Complex(1) / w.at(r, c);
        for (int j = 0; j < w.cols(); ++j) w.at(r, j) *= inv;
        for (int i = 0; i < w.rows(); ++i) {
            if (i == r || w.at(i, c).is_zero()) continue;
            Complex f = w.at(i, c);
            for (int j = 0; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(w.cols(), false);
        for (int c : pivot_col_of_row) is_pivot[c] = true;
        for (int c = 0; c < w.cols(); ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        basis.at(f, static_cast<int>(k)) = Complex(1);
        for (size_t row = 0; row < pivot_col_of_row.size(); ++row)
            basis.at(pivot_col_of_row[row], static_cast<int>(k)) = -w.at(static_cast<int>(row), f);
    }
    return basis;
}

bool SpanTracker::insert(std::vector<Complex> v) {
    if (static_cast<int>(v.size()) != dim_)
        throw DimensionError("span tracker vector length mismatch");
    for (const auto& [pivot, row] : echelon_) {
        if (v[pivot].is_zero()) continue;
        Complex f = v[pivot]; // rows are normalized, row[pivot] == 1
        for (int j = pivot; j < dim_; ++j) v[j] -= f * row[j];
    }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    Complex inv = Complex(1) / v[pivot];
    for (int j = pivot; j < dim_; ++j) v[j] *= inv;
    auto pos = std::lower_bound(echelon_.begin(), echelon_.end(), pivot,
                                [](const auto& e, int p) { return e.first < p; });
    echelon_.insert(pos, {pivot, std::move(v)});
    return true;
}

} // namespace ddbar
