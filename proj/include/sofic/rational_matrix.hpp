#ifndef SOFIC_RATIONAL_MATRIX_HPP
#define SOFIC_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sofic/int_matrix.hpp"

namespace sofic {

/// Exact rational number; all GL(n, Q) checks in the library run over this.
using Rational = mpq_class;

/// Dense matrix over exact rationals. Used for conjugating matrices,
/// signed internals of certificates, and invertibility checks; never for
/// symbolic entries, which stay nonnegative.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_integer(const IntegerMatrix& m);
    static RationalMatrix diagonal(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Rational v) { e_[i * cols_ + j] = std::move(v); }

    bool is_zero() const;
    bool is_diagonal() const;
    /// Exact Gaussian elimination; true iff square with nonzero determinant.
    bool is_invertible() const;

    bool operator==(const RationalMatrix& other) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace sofic

#endif
