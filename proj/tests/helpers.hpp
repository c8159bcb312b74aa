#ifndef SOFIC_TESTS_HELPERS_HPP
#define SOFIC_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sofic/splitting.hpp"
#include "sofic/symbolic_matrix.hpp"
#include "sofic/text_format.hpp"

namespace sofic::testing {

inline SymbolicMatrix mat(const std::string& text) { return parse_matrix(text); }

inline IntegerMatrix imat(std::size_t rows, std::size_t cols, std::vector<long long> e) {
    return IntegerMatrix(rows, cols, std::move(e));
}

/// The running 2x2 example: [[2a1+a2, a2+a3],[a4, a4]].
inline SymbolicMatrix example_matrix() {
    return mat("labels: a1 a2 a3 a4\n2a1+a2|a2+a3\na4|a4\n");
}

/// Base of the out-splitting worked example: [[2a1, a2+a3],[a4, a4]].
inline SymbolicMatrix out_split_base() {
    return mat("labels: a1 a2 a3 a4\n2a1|a2+a3\na4|a4\n");
}

/// The Williams factorization worked example.
inline SymbolicMatrix williams_example() {
    return mat("labels: a b c d\na|.|c\nb|a|.\n.|.|d\n");
}

/// The bi-closing example matrices.
inline SymbolicMatrix closing_example_a() {
    return mat("labels: a b c d\na|a|.\n.|c|b+c\nd|.|a\n");
}
inline SymbolicMatrix closing_example_b() {
    return mat("labels: a b c d\nb|d|.\na|.|a\n.|c|b\n");
}

/// The sub-matrix-conjugate but symbolically inequivalent pair.
inline SymbolicMatrix counterexample_a() { return mat("labels: a1 a2\na1|.\n.|a2\n"); }
inline SymbolicMatrix counterexample_b() { return mat("labels: a1 a2\n.|.\n.|a1+a2\n"); }

/// In-splitting partition at vertex 0 of example_matrix() given as block
/// lists of edges; occurrences disambiguate the doubled a1 cycle.
inline EdgePartition example_in_partition_a() {
    Label a1{0}, a2{1};
    Label a4{3};
    return EdgePartition{0,
                         SplitDirection::In,
                         {{EdgeRef{0, 0, a1, 0}, EdgeRef{0, 0, a2, 0}},
                          {EdgeRef{0, 0, a1, 1}, EdgeRef{1, 0, a4, 0}}}};
}

inline EdgePartition example_in_partition_b() {
    Label a1{0}, a2{1}, a4{3};
    return EdgePartition{0,
                         SplitDirection::In,
                         {{EdgeRef{0, 0, a1, 0}, EdgeRef{0, 0, a1, 1}},
                          {EdgeRef{0, 0, a2, 0}, EdgeRef{1, 0, a4, 0}}}};
}

/// Out-splitting partition at vertex 0 of out_split_base().
inline EdgePartition example_out_partition() {
    Label a1{0}, a2{1}, a3{2};
    return EdgePartition{0,
                         SplitDirection::Out,
                         {{EdgeRef{0, 0, a1, 0}, EdgeRef{0, 1, a2, 0}},
                          {EdgeRef{0, 0, a1, 1}, EdgeRef{0, 1, a3, 0}}}};
}

inline IntegerMatrix decompose_full_label(const SymbolicMatrix& m, Label l) {
    auto parts = decompose(m);
    auto it = parts.find(l);
    return it != parts.end() ? it->second : IntegerMatrix(m.rows(), m.cols());
}

inline Alphabet small_alphabet(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("a" + std::to_string(i + 1));
    return Alphabet(names);
}

/// Random degree-1 matrix with entries drawn label by label.
inline SymbolicMatrix random_symbolic(std::mt19937& rng, std::size_t n, std::size_t labels,
                                      long long max_coeff, double density = 0.5) {
    Alphabet alphabet = small_alphabet(labels);
    SymbolicMatrix m(n, n, alphabet, 1);
    std::uniform_real_distribution<double> flip(0.0, 1.0);
    std::uniform_int_distribution<long long> coeff(1, max_coeff);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < labels; ++l)
                if (flip(rng) < density)
                    m.add(i, j, Word{Label{static_cast<std::uint32_t>(l)}}, coeff(rng));
    return m;
}

/// Random partition of the in-/out-edges at a vertex with at least one edge;
/// returns blocks of a random count in 1..max_blocks.
inline EdgePartition random_partition(std::mt19937& rng, const SymbolicMatrix& m, std::size_t v,
                                      SplitDirection dir, std::size_t max_blocks = 3) {
    std::vector<EdgeRef> edges = dir == SplitDirection::In ? in_edges(m, v) : out_edges(m, v);
    std::uniform_int_distribution<std::size_t> pick_blocks(1, std::min(max_blocks, edges.size()));
    std::size_t blocks = pick_blocks(rng);
    EdgePartition p{v, dir, std::vector<std::vector<EdgeRef>>(blocks)};
    // Guarantee nonempty blocks, then scatter the rest.
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t b = 0; b < blocks; ++b) p.blocks[b].push_back(edges[b]);
    std::uniform_int_distribution<std::size_t> pick(0, blocks - 1);
    for (std::size_t e = blocks; e < edges.size(); ++e) p.blocks[pick(rng)].push_back(edges[e]);
    return p;
}

}  // namespace sofic::testing

#endif
