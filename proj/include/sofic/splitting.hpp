#ifndef SOFIC_SPLITTING_HPP
#define SOFIC_SPLITTING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sofic/symbolic_matrix.hpp"

namespace sofic {

enum class SplitDirection { In, Out };
enum class SplitKind { Row, Column };

/// One edge of the labeled graph of a degree-1 symbolic matrix. Parallel
/// edges with identical (source, target, label) are distinguished by an
/// occurrence index 0..multiplicity-1, so partition blocks like {a1, a1}
/// are expressible.
struct EdgeRef {
    std::size_t source = 0;
    std::size_t target = 0;
    Label label;
    std::size_t occurrence = 0;

    bool is_cycle() const { return source == target; }
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Ordered partition of the in-edges (resp. out-edges) at one vertex.
/// Blocks must be nonempty, disjoint, and cover the full edge multiset.
struct EdgePartition {
    std::size_t vertex = 0;
    SplitDirection direction = SplitDirection::In;
    std::vector<std::vector<EdgeRef>> blocks;
};

/// Certifies an elementary splitting relation between two symbolic matrices.
/// R is the symbolic edge matrix, S the structural integral matrix:
///   Row splitting (out):    A = S*R and B = R*S, S a division matrix;
///   Column splitting (in):  A = R*S and B = S*R, S an amalgamation matrix.
/// A is the pre-split (smaller) matrix and B the post-split one.
struct SplitWitness {
    SplitKind kind = SplitKind::Row;
    SplitDirection direction = SplitDirection::Out;
    SymbolicMatrix R;
    IntegerMatrix S;
    SymbolicMatrix A;
    SymbolicMatrix B;
};

/// Checks the factorization identities entrywise, the structural shape of S,
/// and that R has degree 1.
bool verify_split_witness(const SplitWitness& w);

SplitWitness identity_split_witness(const SymbolicMatrix& A, SplitKind kind);

/// Edges terminating at / leaving v, in canonical order.
std::vector<EdgeRef> in_edges(const SymbolicMatrix& A, std::size_t v);
std::vector<EdgeRef> out_edges(const SymbolicMatrix& A, std::size_t v);

/// Labeled in-neighbours of v as a sorted multiset of (source, label);
/// read off column v across all sub-matrices.
std::vector<std::pair<std::size_t, Label>> predecessor_set(const SymbolicMatrix& A, std::size_t v);
/// Dual row read: sorted multiset of (target, label).
std::vector<std::pair<std::size_t, Label>> follower_set(const SymbolicMatrix& A, std::size_t v);

struct SplitResult {
    SymbolicMatrix matrix;
    SplitWitness witness;
};

/// In-splitting at p.vertex: the split copies occupy consecutive indices at
/// the original vertex's position, remaining vertices keep relative order.
/// The returned witness is verified before returning.
SplitResult in_split(const SymbolicMatrix& A, const EdgePartition& p);

/// Out-splitting (Prop. 1): witness satisfies A = S*R, B = R*S exactly.
SplitResult out_split(const SymbolicMatrix& A, const EdgePartition& p);

/// Merges vertices u and v of A.
///   In:  requires equal predecessor columns per sub-matrix; the shared
///        column is kept once and the two rows are summed. The witness shows
///        A as a row (out-) splitting of the result.
///   Out: dual; requires equal follower rows, columns are summed, and the
///        witness shows A as a column (in-) splitting of the result.
/// The merged vertex sits at min(u,v); other vertices keep relative order.
SplitResult amalgamate(const SymbolicMatrix& A, std::size_t u, std::size_t v,
                       SplitDirection direction);

struct CommonAmalgamationResult {
    SymbolicMatrix C;
    SplitWitness from_b1;
    SplitWitness from_b2;
};

/// Given two elementary amalgamation witnesses of the same matrix A (each
/// with witness.B == A), produces a common amalgamation C of both results,
/// including the three-way merge when the merged pairs share a vertex.
CommonAmalgamationResult common_amalgamation(const SymbolicMatrix& A, const SplitWitness& w1,
                                             const SplitWitness& w2);

struct Move {
    enum class Op { Split, Amalgamate };
    Op op = Op::Split;
    SplitDirection direction = SplitDirection::In;
    // Split moves carry a partition; amalgamate moves a vertex pair.
    std::optional<EdgePartition> partition;
    std::optional<std::pair<std::size_t, std::size_t>> merge;
};

using MoveSequence = std::vector<Move>;

/// Result of applying a move sequence: the final matrix plus, for every
/// alphabet label, the integral sub-matrix after each step (index 0 is the
/// input matrix). Per-label traces are computed by applying each move to the
/// sub-matrices independently; the lockstep guarantee that they recompose to
/// the symbolic matrix at every step is checked internally.
struct MoveTrace {
    SymbolicMatrix final;
    std::map<Label, std::vector<IntegerMatrix>> traces;
    std::vector<SplitWitness> witnesses;
};

MoveTrace apply_move_sequence(const SymbolicMatrix& A, const MoveSequence& moves);

}  // namespace sofic

#endif
