#ifndef SOFIC_SYMBOLIC_MATRIX_HPP
#define SOFIC_SYMBOLIC_MATRIX_HPP

#include <map>
#include <optional>
#include <vector>

#include "sofic/alphabet.hpp"
#include "sofic/formal_sum.hpp"
#include "sofic/int_matrix.hpp"

namespace sofic {

/// Matrix whose entries are formal sums of label words over one alphabet:
/// the symbolic adjacency matrix A = sum_i a_i A_i of a labeled graph.
///
/// Every stored word has length exactly degree(); freshly constructed
/// matrices have degree 1 and mixing degrees within one matrix is rejected.
/// Rectangular shapes are allowed (symbolic edge matrices).
class SymbolicMatrix {
public:
    SymbolicMatrix(std::size_t rows, std::size_t cols, Alphabet alphabet, std::size_t degree = 1);

    static SymbolicMatrix square(std::size_t n, Alphabet alphabet, std::size_t degree = 1);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t degree() const { return degree_; }
    bool is_square() const { return rows_ == cols_; }
    const Alphabet& alphabet() const { return alphabet_; }

    const FormalSum& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    /// Validates labels against the alphabet and word lengths against degree().
    void set(std::size_t i, std::size_t j, FormalSum value);
    void add(std::size_t i, std::size_t j, const Word& w, long long coeff);

    bool is_all_empty() const;
    /// True iff some row or some column is all-empty.
    bool is_degenerate() const;
    bool is_diagonal() const;

    SymbolicMatrix transpose() const;
    /// Entrywise relabeling into `target`; bijection maps this alphabet's ids
    /// to target ids.
    SymbolicMatrix relabeled(const LabelBijection& b, Alphabet target) const;
    SymbolicMatrix relabeled(const LabelBijection& b) const { return relabeled(b, alphabet_); }

    bool operator==(const SymbolicMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::size_t degree_;
    Alphabet alphabet_;
    std::vector<FormalSum> entries_;
};

/// --- Core symbolic-matrix algebra -----------------------------------------

/// Splits a degree-1 matrix into its integral sub-matrices, one per label;
/// labels whose sub-matrix is zero are omitted.
std::map<Label, IntegerMatrix> decompose(const SymbolicMatrix& A);

/// Rebuilds sum_i a_i A_i. All matrices must share one shape.
SymbolicMatrix recompose(const Alphabet& alphabet, const std::map<Label, IntegerMatrix>& parts);
SymbolicMatrix recompose(const Alphabet& alphabet, const std::map<Label, IntegerMatrix>& parts,
                         std::size_t rows, std::size_t cols);

/// Word-semiring product; degree(out) = degree(A) + degree(B).
SymbolicMatrix sym_mul(const SymbolicMatrix& A, const SymbolicMatrix& B);

enum class Side { Left, Right };

/// Product with a constant integral matrix: S*A (Left) or A*S (Right).
/// Degree is preserved.
SymbolicMatrix mixed_mul(const IntegerMatrix& S, const SymbolicMatrix& A, Side side);

/// Entrywise coefficient mass; for degree 1 this is the total adjacency
/// matrix sum_i A_i.
IntegerMatrix total_matrix(const SymbolicMatrix& A);

/// Number of labeled cycles of length n, with multiplicity: the coefficient
/// mass of trace(A^n). Mass is multiplicative, so this equals trace(T^n) for
/// the total matrix T.
unsigned long long count_periodic_words(const SymbolicMatrix& A, unsigned n);

/// Searches for a label bijection beta with beta(A) = B entrywise.
/// Exhaustive over bijections of the two (equal-sized) alphabets, pruned by
/// per-label occurrence fingerprints; returns the lexicographically least
/// bijection (ordered by image ids in source label order) when several exist.
std::optional<LabelBijection> sym_equal_mod_bijection(const SymbolicMatrix& A,
                                                      const SymbolicMatrix& B);

/// log of the spectral radius of the total matrix, by power iteration to
/// relative tolerance 1e-12; -infinity when the spectral radius is zero.
double entropy(const SymbolicMatrix& A);

}  // namespace sofic

#endif
