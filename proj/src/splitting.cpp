#include "sofic/splitting.hpp"

#include <algorithm>

#include "sofic/errors.hpp"

namespace sofic {

namespace {

void require_square_degree1(const SymbolicMatrix& A, const char* who) {
    if (!A.is_square()) throw ShapeError(std::string(who) + " requires a square matrix");
    if (A.degree() != 1) throw DegreeError(std::string(who) + " requires a degree-1 matrix");
}

/// All sub-matrices including zero ones, indexed by label id.
std::vector<IntegerMatrix> decompose_full(const SymbolicMatrix& A) {
    std::vector<IntegerMatrix> out(A.alphabet().size(), IntegerMatrix(A.rows(), A.cols()));
    for (const auto& [label, m] : decompose(A)) out[label.id] = m;
    return out;
}

std::vector<EdgeRef> edges_of_entry(const FormalSum& s, std::size_t i, std::size_t j) {
    std::vector<EdgeRef> out;
    for (const auto& term : s.terms())
        for (long long occ = 0; occ < term.second; ++occ)
            out.push_back(EdgeRef{i, j, term.first.front(), static_cast<std::size_t>(occ)});
    return out;
}

void validate_partition(const SymbolicMatrix& A, const EdgePartition& p, SplitDirection expected) {
    if (p.direction != expected) throw PartitionError("partition direction does not match the move");
    if (p.vertex >= A.rows()) throw PartitionError("partition vertex out of range");
    if (p.blocks.empty()) throw PartitionError("partition needs at least one block");
    for (const auto& block : p.blocks)
        if (block.empty()) throw PartitionError("partition blocks must be nonempty");
    std::vector<EdgeRef> mentioned;
    for (const auto& block : p.blocks) mentioned.insert(mentioned.end(), block.begin(), block.end());
    std::sort(mentioned.begin(), mentioned.end());
    std::vector<EdgeRef> expected_edges = expected == SplitDirection::In
                                              ? in_edges(A, p.vertex)
                                              : out_edges(A, p.vertex);
    if (mentioned != expected_edges)
        throw PartitionError("partition blocks must be disjoint and cover the edge multiset");
}

long long count_block(const std::vector<EdgeRef>& block, Label l, bool cycles,
                      std::optional<std::size_t> endpoint, SplitDirection dir) {
    long long c = 0;
    for (const EdgeRef& e : block) {
        if (e.label != l) continue;
        if (e.is_cycle() != cycles) continue;
        if (endpoint) {
            std::size_t other = dir == SplitDirection::In ? e.source : e.target;
            if (other != *endpoint) continue;
        }
        ++c;
    }
    return c;
}

}  // namespace

std::vector<EdgeRef> in_edges(const SymbolicMatrix& A, std::size_t v) {
    require_square_degree1(A, "in_edges");
    if (v >= A.rows()) throw ShapeError("vertex out of range");
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        auto es = edges_of_entry(A.at(i, v), i, v);
        out.insert(out.end(), es.begin(), es.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeRef> out_edges(const SymbolicMatrix& A, std::size_t v) {
    require_square_degree1(A, "out_edges");
    if (v >= A.rows()) throw ShapeError("vertex out of range");
    std::vector<EdgeRef> out;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        auto es = edges_of_entry(A.at(v, j), v, j);
        out.insert(out.end(), es.begin(), es.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, Label>> predecessor_set(const SymbolicMatrix& A,
                                                           std::size_t v) {
    std::vector<std::pair<std::size_t, Label>> out;
    for (const EdgeRef& e : in_edges(A, v)) out.emplace_back(e.source, e.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, Label>> follower_set(const SymbolicMatrix& A, std::size_t v) {
    std::vector<std::pair<std::size_t, Label>> out;
    for (const EdgeRef& e : out_edges(A, v)) out.emplace_back(e.target, e.label);
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_split_witness(const SplitWitness& w) {
    if (w.R.degree() != 1 || w.A.degree() != 1 || w.B.degree() != 1) return false;
    if (!(w.A.alphabet() == w.B.alphabet()) || !(w.A.alphabet() == w.R.alphabet())) return false;
    if (!w.A.is_square() || !w.B.is_square()) return false;
    const std::size_t n = w.A.rows();
    const std::size_t big = w.B.rows();
    try {
        if (w.kind == SplitKind::Row) {
            // A = S*R, B = R*S with S a division matrix.
            if (w.S.rows() != n || w.S.cols() != big) return false;
            if (w.R.rows() != big || w.R.cols() != n) return false;
            if (!w.S.is_division_matrix()) return false;
            return mixed_mul(w.S, w.R, Side::Left) == w.A &&
                   mixed_mul(w.S, w.R, Side::Right) == w.B;
        }
        // Column: A = R*S, B = S*R with S an amalgamation matrix.
        if (w.S.rows() != big || w.S.cols() != n) return false;
        if (w.R.rows() != n || w.R.cols() != big) return false;
        if (!w.S.is_amalgamation_matrix()) return false;
        return mixed_mul(w.S, w.R, Side::Right) == w.A &&
               mixed_mul(w.S, w.R, Side::Left) == w.B;
    } catch (const ShapeError&) {
        return false;
    }
}

SplitWitness identity_split_witness(const SymbolicMatrix& A, SplitKind kind) {
    SplitWitness w{kind,
                   kind == SplitKind::Row ? SplitDirection::Out : SplitDirection::In,
                   A,
                   IntegerMatrix::identity(A.rows()),
                   A,
                   A};
    return w;
}

namespace {

/// Index bookkeeping shared by the splits: vertex v becomes copies
/// v..v+m-1, all other vertices keep relative order.
struct SplitIndexMap {
    std::size_t v, m, old_n;
    std::size_t new_size() const { return old_n + m - 1; }
    std::size_t map_old(std::size_t x) const { return x < v ? x : x + m - 1; }
};

IntegerMatrix in_split_sub_matrix(const IntegerMatrix& Aj, Label j, const EdgePartition& p,
                                  const SplitIndexMap& ix) {
    IntegerMatrix Bj(ix.new_size(), ix.new_size());
    for (std::size_t k = 0; k < ix.m; ++k) {
        // (1) cycle counts per block fill the split columns, the same in
        //     every split row.
        long long cyc = count_block(p.blocks[k], j, true, std::nullopt, p.direction);
        for (std::size_t beta = 0; beta < ix.m; ++beta) Bj.set(ix.v + beta, ix.v + k, cyc);
        // (2) non-cycle in-edge counts per block, per source row.
        for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
            if (alpha == ix.v) continue;
            long long c = count_block(p.blocks[k], j, false, alpha, p.direction);
            Bj.set(ix.map_old(alpha), ix.v + k, c);
        }
    }
    for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
        if (alpha == ix.v) continue;
        // (3) the split vertex's out-row is copied verbatim into each copy.
        for (std::size_t beta = 0; beta < ix.m; ++beta)
            Bj.set(ix.v + beta, ix.map_old(alpha), Aj.at(ix.v, alpha));
        // (4) entries not involving the split vertex are unchanged.
        for (std::size_t alpha2 = 0; alpha2 < ix.old_n; ++alpha2) {
            if (alpha2 == ix.v) continue;
            Bj.set(ix.map_old(alpha), ix.map_old(alpha2), Aj.at(alpha, alpha2));
        }
    }
    return Bj;
}

IntegerMatrix out_split_sub_matrix(const IntegerMatrix& Aj, Label j, const EdgePartition& p,
                                   const SplitIndexMap& ix) {
    IntegerMatrix Bj(ix.new_size(), ix.new_size());
    for (std::size_t k = 0; k < ix.m; ++k) {
        long long cyc = count_block(p.blocks[k], j, true, std::nullopt, p.direction);
        for (std::size_t beta = 0; beta < ix.m; ++beta) Bj.set(ix.v + k, ix.v + beta, cyc);
        for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
            if (alpha == ix.v) continue;
            long long c = count_block(p.blocks[k], j, false, alpha, p.direction);
            Bj.set(ix.v + k, ix.map_old(alpha), c);
        }
    }
    for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
        if (alpha == ix.v) continue;
        for (std::size_t beta = 0; beta < ix.m; ++beta)
            Bj.set(ix.map_old(alpha), ix.v + beta, Aj.at(alpha, ix.v));
        for (std::size_t alpha2 = 0; alpha2 < ix.old_n; ++alpha2) {
            if (alpha2 == ix.v) continue;
            Bj.set(ix.map_old(alpha), ix.map_old(alpha2), Aj.at(alpha, alpha2));
        }
    }
    return Bj;
}

/// Assembles the symbolic split matrix directly from the partition by
/// FormalSum arithmetic; per-label traces use the *_sub_matrix routines, so
/// the two code paths cross-check each other (the lockstep guarantee).
SymbolicMatrix in_split_symbolic(const SymbolicMatrix& A, const EdgePartition& p,
                                 const SplitIndexMap& ix) {
    SymbolicMatrix B(ix.new_size(), ix.new_size(), A.alphabet(), 1);
    for (std::size_t k = 0; k < ix.m; ++k) {
        FormalSum cycles;
        FormalSum per_source[64];  // old_n <= 64 is plenty for this library
        for (const EdgeRef& e : p.blocks[k]) {
            if (e.is_cycle())
                cycles.add(Word{e.label}, 1);
            else
                per_source[e.source].add(Word{e.label}, 1);
        }
        for (std::size_t beta = 0; beta < ix.m; ++beta) B.set(ix.v + beta, ix.v + k, cycles);
        for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
            if (alpha == ix.v) continue;
            B.set(ix.map_old(alpha), ix.v + k, per_source[alpha]);
        }
    }
    for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
        if (alpha == ix.v) continue;
        for (std::size_t beta = 0; beta < ix.m; ++beta)
            B.set(ix.v + beta, ix.map_old(alpha), A.at(ix.v, alpha));
        for (std::size_t alpha2 = 0; alpha2 < ix.old_n; ++alpha2) {
            if (alpha2 == ix.v) continue;
            B.set(ix.map_old(alpha), ix.map_old(alpha2), A.at(alpha, alpha2));
        }
    }
    return B;
}

SymbolicMatrix out_split_symbolic(const SymbolicMatrix& A, const EdgePartition& p,
                                  const SplitIndexMap& ix) {
    SymbolicMatrix B(ix.new_size(), ix.new_size(), A.alphabet(), 1);
    for (std::size_t k = 0; k < ix.m; ++k) {
        FormalSum cycles;
        FormalSum per_target[64];
        for (const EdgeRef& e : p.blocks[k]) {
            if (e.is_cycle())
                cycles.add(Word{e.label}, 1);
            else
                per_target[e.target].add(Word{e.label}, 1);
        }
        for (std::size_t beta = 0; beta < ix.m; ++beta) B.set(ix.v + k, ix.v + beta, cycles);
        for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
            if (alpha == ix.v) continue;
            B.set(ix.v + k, ix.map_old(alpha), per_target[alpha]);
        }
    }
    for (std::size_t alpha = 0; alpha < ix.old_n; ++alpha) {
        if (alpha == ix.v) continue;
        for (std::size_t beta = 0; beta < ix.m; ++beta)
            B.set(ix.map_old(alpha), ix.v + beta, A.at(alpha, ix.v));
        for (std::size_t alpha2 = 0; alpha2 < ix.old_n; ++alpha2) {
            if (alpha2 == ix.v) continue;
            B.set(ix.map_old(alpha), ix.map_old(alpha2), A.at(alpha, alpha2));
        }
    }
    return B;
}

}  // namespace

SplitResult in_split(const SymbolicMatrix& A, const EdgePartition& p) {
    require_square_degree1(A, "in_split");
    validate_partition(A, p, SplitDirection::In);
    if (A.rows() > 64) throw ShapeError("in_split supports matrices up to 64x64");
    SplitIndexMap ix{p.vertex, p.blocks.size(), A.rows()};
    SymbolicMatrix B = in_split_symbolic(A, p, ix);

    // Witness: the split copies of an in-splitting share their out-rows, so
    // collapsing duplicate rows yields the symbolic edge matrix R, and the
    // row-class map gives the amalgamation matrix S.
    const std::size_t N = ix.new_size();
    SymbolicMatrix R(ix.old_n, N, A.alphabet(), 1);
    for (std::size_t x = 0; x < ix.old_n; ++x) {
        std::size_t row = x == ix.v ? ix.v : ix.map_old(x);
        for (std::size_t y = 0; y < N; ++y) R.set(x, y, B.at(row, y));
    }
    IntegerMatrix S(N, ix.old_n);
    for (std::size_t y = 0; y < N; ++y) {
        std::size_t cls = y < ix.v ? y : (y < ix.v + ix.m ? ix.v : y - ix.m + 1);
        S.set(y, cls, 1);
    }
    SplitWitness w{SplitKind::Column, SplitDirection::In, R, S, A, B};
    if (!verify_split_witness(w))
        throw SoficError("internal: in-splitting witness failed to verify");
    return SplitResult{B, w};
}

SplitResult out_split(const SymbolicMatrix& A, const EdgePartition& p) {
    require_square_degree1(A, "out_split");
    validate_partition(A, p, SplitDirection::Out);
    if (A.rows() > 64) throw ShapeError("out_split supports matrices up to 64x64");
    SplitIndexMap ix{p.vertex, p.blocks.size(), A.rows()};
    SymbolicMatrix B = out_split_symbolic(A, p, ix);

    // Witness per Prop. 1: copies share their in-columns; collapsing them
    // gives the symbolic edge matrix R, the column-class map the division
    // matrix S, and A = S*R, B = R*S.
    const std::size_t N = ix.new_size();
    SymbolicMatrix R(N, ix.old_n, A.alphabet(), 1);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < ix.old_n; ++y) {
            std::size_t col = y == ix.v ? ix.v : ix.map_old(y);
            R.set(x, y, B.at(x, col));
        }
    IntegerMatrix S(ix.old_n, N);
    for (std::size_t y = 0; y < N; ++y) {
        std::size_t cls = y < ix.v ? y : (y < ix.v + ix.m ? ix.v : y - ix.m + 1);
        S.set(cls, y, 1);
    }
    SplitWitness w{SplitKind::Row, SplitDirection::Out, R, S, A, B};
    if (!verify_split_witness(w))
        throw SoficError("internal: out-splitting witness failed to verify");
    return SplitResult{B, w};
}

namespace {

IntegerMatrix amalgamate_sub_matrix(const IntegerMatrix& Aj, std::size_t u, std::size_t v,
                                    SplitDirection direction) {
    const std::size_t n = Aj.rows();
    auto map_old = [&](std::size_t x) { return x < v ? x : x - 1; };
    IntegerMatrix Cj(n - 1, n - 1);
    for (std::size_t x = 0; x < n; ++x) {
        if (x == v) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (y == v) continue;
            long long val = Aj.at(x, y);
            if (direction == SplitDirection::In && x == u) val += Aj.at(v, y);
            if (direction == SplitDirection::Out && y == u) val += Aj.at(x, v);
            Cj.set(map_old(x), map_old(y), val);
        }
    }
    return Cj;
}

}  // namespace

SplitResult amalgamate(const SymbolicMatrix& A, std::size_t u, std::size_t v,
                       SplitDirection direction) {
    require_square_degree1(A, "amalgamate");
    const std::size_t n = A.rows();
    if (u >= n || v >= n) throw ShapeError("merge vertex out of range");
    if (u == v) throw AmalgamationError("cannot merge a vertex with itself");
    if (u > v) std::swap(u, v);

    // Legality is label-wise: every sub-matrix must have equal predecessor
    // columns (in) resp. equal follower rows (out) at u and v.
    const auto subs = decompose_full(A);
    for (std::size_t id = 0; id < subs.size(); ++id) {
        const IntegerMatrix& m = subs[id];
        for (std::size_t t = 0; t < n; ++t) {
            bool ok = direction == SplitDirection::In ? m.at(t, u) == m.at(t, v)
                                                      : m.at(u, t) == m.at(v, t);
            if (!ok)
                throw AmalgamationError(
                    std::string(direction == SplitDirection::In ? "predecessor columns"
                                                                : "follower rows") +
                    " differ in sub-matrix '" + A.alphabet().name(Label{(std::uint32_t)id}) + "'");
        }
    }

    auto map_old = [&](std::size_t x) { return x < v ? x : x - 1; };
    SymbolicMatrix C(n - 1, n - 1, A.alphabet(), 1);
    for (std::size_t x = 0; x < n; ++x) {
        if (x == v) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (y == v) continue;
            FormalSum val = A.at(x, y);
            if (direction == SplitDirection::In && x == u) val = val + A.at(v, y);
            if (direction == SplitDirection::Out && y == u) val = val + A.at(x, v);
            C.set(map_old(x), map_old(y), std::move(val));
        }
    }

    auto cls = [&](std::size_t x) { return x == v ? u : map_old(x); };
    SplitWitness w{SplitKind::Row, SplitDirection::Out, A, IntegerMatrix(1, 1), C, A};
    if (direction == SplitDirection::In) {
        // A is a row (out-) splitting of C: shared columns collapse into R.
        SymbolicMatrix R(n, n - 1, A.alphabet(), 1);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (y == v) continue;
                R.set(x, map_old(y), A.at(x, y));
            }
        IntegerMatrix S(n - 1, n);
        for (std::size_t x = 0; x < n; ++x) S.set(cls(x), x, 1);
        w = SplitWitness{SplitKind::Row, SplitDirection::Out, R, S, C, A};
    } else {
        // A is a column (in-) splitting of C: shared rows collapse into R.
        SymbolicMatrix R(n - 1, n, A.alphabet(), 1);
        for (std::size_t x = 0; x < n; ++x) {
            if (x == v) continue;
            for (std::size_t y = 0; y < n; ++y) R.set(map_old(x), y, A.at(x, y));
        }
        IntegerMatrix S(n, n - 1);
        for (std::size_t x = 0; x < n; ++x) S.set(x, cls(x), 1);
        w = SplitWitness{SplitKind::Column, SplitDirection::In, R, S, C, A};
    }
    if (!verify_split_witness(w))
        throw SoficError("internal: amalgamation witness failed to verify");
    return SplitResult{C, w};
}

namespace {

/// The merged pair of an elementary amalgamation witness, read off the class
/// structure of its integral matrix.
std::pair<std::size_t, std::size_t> merged_pair_of(const SplitWitness& w) {
    const IntegerMatrix& S = w.S;
    const std::size_t big = w.B.rows();
    std::vector<std::vector<std::size_t>> classes(w.A.rows());
    for (std::size_t x = 0; x < big; ++x) {
        std::size_t c = 0;
        bool found = false;
        for (std::size_t j = 0; j < w.A.rows(); ++j) {
            long long val = w.kind == SplitKind::Row ? S.at(j, x) : S.at(x, j);
            if (val == 1) {
                c = j;
                found = true;
            }
        }
        if (!found) throw LemmaPreconditionError("witness class map is not total");
        classes[c].push_back(x);
    }
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (const auto& cl : classes) {
        if (cl.size() == 1) continue;
        if (cl.size() == 2 && !pair) {
            pair = {cl[0], cl[1]};
            continue;
        }
        throw LemmaPreconditionError("witness is not an elementary amalgamation");
    }
    if (!pair) throw LemmaPreconditionError("witness merges no vertices");
    return *pair;
}

}  // namespace

CommonAmalgamationResult common_amalgamation(const SymbolicMatrix& A, const SplitWitness& w1,
                                             const SplitWitness& w2) {
    if (!(w1.B == A) || !(w2.B == A))
        throw LemmaPreconditionError("witnesses must amalgamate the given matrix");
    if (w1.kind != w2.kind || w1.direction != w2.direction)
        throw LemmaPreconditionError("witnesses must amalgamate in the same direction");
    if (!verify_split_witness(w1) || !verify_split_witness(w2))
        throw LemmaPreconditionError("witness does not verify");
    const SplitDirection dir =
        w1.kind == SplitKind::Row ? SplitDirection::In : SplitDirection::Out;

    auto [u1, v1] = merged_pair_of(w1);
    auto [u2, v2] = merged_pair_of(w2);

    if (u1 == u2 && v1 == v2)
        return CommonAmalgamationResult{w1.A, identity_split_witness(w1.A, w1.kind),
                                        identity_split_witness(w2.A, w2.kind)};

    // Map an original vertex into the matrix obtained by merging (u,v).
    auto image = [](std::size_t x, std::size_t u, std::size_t v) {
        if (x == v) return u;
        return x < v ? x : x - 1;
    };

    try {
        SplitResult from1 =
            amalgamate(w1.A, image(u2, u1, v1), image(v2, u1, v1), dir);
        SplitResult from2 =
            amalgamate(w2.A, image(u1, u2, v2), image(v1, u2, v2), dir);
        if (!(from1.matrix == from2.matrix))
            throw SoficError("internal: common amalgamation paths disagree");
        return CommonAmalgamationResult{from1.matrix, from1.witness, from2.witness};
    } catch (const AmalgamationError& e) {
        throw LemmaPreconditionError(std::string("second merge is illegal: ") + e.what());
    }
}

MoveTrace apply_move_sequence(const SymbolicMatrix& A, const MoveSequence& moves) {
    require_square_degree1(A, "apply_move_sequence");
    SymbolicMatrix current = A;
    std::vector<std::vector<IntegerMatrix>> traces(A.alphabet().size());
    {
        auto subs = decompose_full(A);
        for (std::size_t id = 0; id < subs.size(); ++id) traces[id].push_back(subs[id]);
    }
    std::vector<SplitWitness> witnesses;

    for (std::size_t step = 0; step < moves.size(); ++step) {
        const Move& mv = moves[step];
        try {
            if (mv.op == Move::Op::Split) {
                if (!mv.partition) throw MoveError(step, "split move needs a partition");
                const EdgePartition& p = *mv.partition;
                SplitIndexMap ix{p.vertex, p.blocks.size(), current.rows()};
                SplitResult r = mv.direction == SplitDirection::In ? in_split(current, p)
                                                                   : out_split(current, p);
                // Per-label lockstep: each sub-matrix is split independently.
                for (std::size_t id = 0; id < traces.size(); ++id) {
                    Label l{static_cast<std::uint32_t>(id)};
                    const IntegerMatrix& prev = traces[id].back();
                    traces[id].push_back(mv.direction == SplitDirection::In
                                             ? in_split_sub_matrix(prev, l, p, ix)
                                             : out_split_sub_matrix(prev, l, p, ix));
                }
                current = r.matrix;
                witnesses.push_back(std::move(r.witness));
            } else {
                if (!mv.merge) throw MoveError(step, "amalgamate move needs a vertex pair");
                auto [u, v] = *mv.merge;
                if (u > v) std::swap(u, v);
                SplitResult r = amalgamate(current, u, v, mv.direction);
                for (auto& tr : traces)
                    tr.push_back(amalgamate_sub_matrix(tr.back(), u, v, mv.direction));
                current = r.matrix;
                witnesses.push_back(std::move(r.witness));
            }
        } catch (const MoveError&) {
            throw;
        } catch (const SoficError& e) {
            throw MoveError(step, e.what());
        }
        // Lockstep guarantee: the per-label traces recompose to the running
        // symbolic matrix after every move.
        auto subs = decompose_full(current);
        for (std::size_t id = 0; id < traces.size(); ++id)
            if (!(traces[id].back() == subs[id]))
                throw SoficError("internal: per-label trace fell out of lockstep");
    }

    MoveTrace out{current, {}, std::move(witnesses)};
    for (std::size_t id = 0; id < traces.size(); ++id)
        out.traces.emplace(Label{static_cast<std::uint32_t>(id)}, std::move(traces[id]));
    return out;
}

}  // namespace sofic
