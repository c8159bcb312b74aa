#include "sofic/int_matrix.hpp"

#include <stdexcept>

#include "sofic/errors.hpp"

namespace sofic {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw ShapeError("integer matrix must have positive dimensions");
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<long long> entries)
    : IntegerMatrix(rows, cols) {
    if (entries.size() != rows * cols) throw ShapeError("entry count does not match shape");
    for (long long v : entries)
        if (v < 0) throw std::invalid_argument("integer matrices are nonnegative");
    e_ = std::move(entries);
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void IntegerMatrix::set(std::size_t i, std::size_t j, long long v) {
    if (v < 0) throw std::invalid_argument("integer matrices are nonnegative");
    e_[i * cols_ + j] = v;
}

bool IntegerMatrix::is_zero() const {
    for (long long v : e_)
        if (v != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool IntegerMatrix::is_division_matrix() const {
    for (long long v : e_)
        if (v != 0 && v != 1) return false;
    for (std::size_t j = 0; j < cols_; ++j) {
        long long col = 0;
        for (std::size_t i = 0; i < rows_; ++i) col += at(i, j);
        if (col != 1) return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        long long row = 0;
        for (std::size_t j = 0; j < cols_; ++j) row += at(i, j);
        if (row < 1) return false;
    }
    return true;
}

bool IntegerMatrix::is_amalgamation_matrix() const { return transpose().is_division_matrix(); }

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool IntegerMatrix::is_non_degenerate() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < cols_; ++j) any = any || at(i, j) != 0;
        if (!any) return false;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < rows_; ++i) any = any || at(i, j) != 0;
        if (!any) return false;
    }
    return true;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum: shape mismatch");
    IntegerMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            long long aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.set(i, j, out.at(i, j) + aik * b.at(k, j));
        }
    return out;
}

}  // namespace sofic
