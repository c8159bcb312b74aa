#ifndef SOFIC_EQUIVALENCE_HPP
#define SOFIC_EQUIVALENCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sofic/rational_matrix.hpp"
#include "sofic/splitting.hpp"
#include "sofic/symbolic_matrix.hpp"

namespace sofic {

/// Which product of the pair (R, S) yields which matrix.
enum class EsseOrientation {
    RsSr,  // A = R*S and B = S*R
    SrRs,  // A = S*R and B = R*S
};

/// Elementary strong shift equivalence witness: a symbolic matrix R of
/// degree 1 together with an integral division matrix S.
struct EsseWitness {
    SymbolicMatrix R;
    IntegerMatrix S;
    EsseOrientation orientation = EsseOrientation::RsSr;
};

/// True iff both products hold entrywise and S is a valid division matrix.
bool verify_esse(const SymbolicMatrix& A, const SymbolicMatrix& B, const EsseWitness& w);

/// Lag-l strong shift equivalence: l+2 matrices chained by l+1 elementary
/// witnesses; adjacent links share the intermediate matrix exactly.
struct SseChain {
    std::vector<SymbolicMatrix> matrices;  // lag+2 entries, endpoints included
    std::vector<EsseWitness> links;        // lag+1 entries

    std::size_t lag() const { return links.empty() ? 0 : links.size() - 1; }
};

bool verify_sse_chain(const SymbolicMatrix& A, const SymbolicMatrix& B, const SseChain& chain);

struct SearchBounds {
    std::size_t max_inner_dimension = 4;
    long long max_coefficient = 4;
    std::size_t max_lag = 0;
};

/// Exhaustive witness search. A division matrix pins R entrywise, so the
/// space is the set of column-assignment surjections for each orientation;
/// candidates are enumerated in lexicographic order and the first witness
/// found is returned, making the result deterministic. Searches whose
/// candidate count exceeds 10^8 raise BudgetError.
std::optional<EsseWitness> search_esse(const SymbolicMatrix& A, const SymbolicMatrix& B,
                                       const SearchBounds& bounds);

/// M = U * D * V with U a division matrix, D the diagonal of M's nonzero
/// entries in row-major order, V an amalgamation matrix.
struct WilliamsFactorization {
    IntegerMatrix U;
    SymbolicMatrix D;
    IntegerMatrix V;
    std::vector<std::pair<std::size_t, std::size_t>> entry_order;
};

WilliamsFactorization williams_factorize(const SymbolicMatrix& M);

/// Integral counterpart used when one ESSE factor is an integral matrix.
struct IntegerWilliamsFactorization {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    std::vector<std::pair<std::size_t, std::size_t>> entry_order;
};

IntegerWilliamsFactorization williams_factorize_integral(const IntegerMatrix& M);

/// C1 = D*X and C2 = X*D with D a non-degenerate symbolic diagonal matrix
/// and X integral.
struct DiagonalRefactorization {
    SymbolicMatrix D;
    IntegerMatrix X;
    SymbolicMatrix C1;
    SymbolicMatrix C2;
};

struct SseDrResult {
    SymbolicMatrix C1;
    SymbolicMatrix C2;
    DiagonalRefactorization refactorization;
    SplitWitness row_split;     // C1 as an elementary row splitting of A
    SplitWitness column_split;  // C2 as an elementary column splitting of B
};

/// Given A = R*S, B = S*R (orientation RsSr), assembles
///   C1 = D_R V_R U_S D_S V_S U_R,  C2 = V_R U_S D_S V_S U_R D_R,
///   D = D_R,                       X = V_R U_S D_S V_S U_R
/// from the Williams factorizations of R and S, verifies all three
/// conclusions, and returns the witnesses.
SseDrResult sse_dr_construct(const SymbolicMatrix& A, const SymbolicMatrix& B,
                             const EsseWitness& w);

/// Certificate of the fixed-diagonal conjugacy construction. Per label,
/// A_i = D*C_i and B_i = C_i*D with one shared D = diag(E, I_{n-k}); the
/// outputs satisfy A = U*X, A' = X*U, B = Y*V, B' = V*Y and A'W = WB' mod
/// the recorded bijection, with W invertible over the rationals.
struct MainThmCertificate {
    Alphabet alphabet;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<long long> e_diag;    // k positive diagonal entries of E
    std::vector<IntegerMatrix> c;     // one C_i per label, n x n
    SymbolicMatrix A, B;              // assembled inputs
    SymbolicMatrix X, Y;              // stacked split factors
    IntegerMatrix U, V;               // division / amalgamation
    SymbolicMatrix A_prime, B_prime;  // the split matrices
    RationalMatrix W;                 // signed integral conjugator
    LabelBijection bijection;         // realizes A'W = WB'
};

MainThmCertificate main_thm_construct(const Alphabet& alphabet,
                                      const std::vector<IntegerMatrix>& per_label_c,
                                      const std::vector<long long>& e_diag);

/// Re-checks every identity of a certificate.
bool verify_main_thm_certificate(const MainThmCertificate& cert);

/// True iff W is invertible over the rationals and A*W equals W*B modulo a
/// label bijection, products taken by scaling each label's sub-matrix.
bool matrix_conjugate_check(const SymbolicMatrix& A, const SymbolicMatrix& B,
                            const RationalMatrix& W);

/// Variant that also reports the bijection found.
std::optional<LabelBijection> matrix_conjugacy_bijection(const SymbolicMatrix& A,
                                                         const SymbolicMatrix& B,
                                                         const RationalMatrix& W);

/// Attempts to lift per-label diagonal conjugators W_i (each with
/// W_i^{-1} A_i W_i = B_i) to one diagonal W with A*W = W*B mod bijection.
/// Candidate W's follow the proof's block recipe (entries 1 where all W_i
/// agree on 1, sum-then-invert elsewhere) plus natural variants; each is
/// verified exactly and the first success is returned. No candidate passing
/// is a valid result (nullopt), not an error.
std::optional<std::vector<Rational>> conj_lift_diagonal(
    const SymbolicMatrix& A, const SymbolicMatrix& B,
    const std::vector<std::vector<Rational>>& per_label_w);

}  // namespace sofic

#endif
