#ifndef SOFIC_INT_MATRIX_HPP
#define SOFIC_INT_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace sofic {

/// Dense matrix of nonnegative integers: adjacency sub-matrices and the
/// structured division/amalgamation/diagonal variants.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<long long> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    long long at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long long v);

    bool is_zero() const;
    IntegerMatrix transpose() const;

    /// 0/1, exactly one 1 per column, at least one 1 per row.
    bool is_division_matrix() const;
    /// 0/1, exactly one 1 per row, at least one 1 per column.
    bool is_amalgamation_matrix() const;
    bool is_diagonal() const;
    /// No zero row and no zero column.
    bool is_non_degenerate() const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<long long> e_;
};

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace sofic

#endif
