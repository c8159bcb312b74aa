#include "sofic/rational_matrix.hpp"

#include "sofic/errors.hpp"

namespace sofic {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0) throw ShapeError("rational matrix must have positive dimensions");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

RationalMatrix RationalMatrix::from_integer(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, Rational(static_cast<long>(m.at(i, j))));
    return out;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
    RationalMatrix out(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out.set(i, i, entries[i]);
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const Rational& v : e_)
        if (v != 0) return false;
    return true;
}

bool RationalMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool RationalMatrix::is_invertible() const {
    if (rows_ != cols_) return false;
    RationalMatrix a = *this;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return false;
        if (pivot != col)
            for (std::size_t j = 0; j < cols_; ++j) {
                Rational tmp = a.at(col, j);
                a.set(col, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
        Rational inv = 1 / a.at(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            Rational factor = a.at(i, col) * inv;
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) a.set(i, j, a.at(i, j) - factor * a.at(col, j));
        }
    }
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != other.e_[i]) return false;
    return true;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum: shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product: shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, out.at(i, j) + aik * b.at(k, j));
        }
    return out;
}

}  // namespace sofic
