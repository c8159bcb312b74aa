#ifndef SOFIC_TESTS_ORACLES_HPP
#define SOFIC_TESTS_ORACLES_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sofic/symbolic_matrix.hpp"

namespace sofic::testing {

/// Brute-force right-closing delay, independent of the pair-graph
/// implementation: level-by-level closure of the set of ordered vertex pairs
/// reachable by two equally-labeled paths with distinct first edges. Two
/// parallel edges sharing source, target, and label (a sub-matrix entry of 2
/// or more) can never be separated by any future, so they make the graph not
/// right-closing outright; other than that, the delay is the largest path
/// length still admitting such a pair, and the graph is not right-closing
/// when pairs survive past length n^2 + 1 (the pair walk is then pumpable).
inline std::optional<unsigned> brute_force_right_closing_delay(const SymbolicMatrix& A) {
    const std::size_t n = A.rows();
    const auto parts = decompose(A);
    for (const auto& [label, m] : parts)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m.at(i, j) >= 2) return std::nullopt;

    std::set<std::pair<std::size_t, std::size_t>> reach;
    for (const auto& [label, m] : parts)
        for (std::size_t src = 0; src < n; ++src)
            for (std::size_t t1 = 0; t1 < n; ++t1) {
                if (m.at(src, t1) == 0) continue;
                for (std::size_t t2 = 0; t2 < n; ++t2) {
                    if (t2 == t1 || m.at(src, t2) == 0) continue;
                    reach.insert({t1, t2});
                }
            }
    if (reach.empty()) return 0;

    const unsigned limit = static_cast<unsigned>(n * n + 1);
    unsigned level = 1;
    while (level <= limit && !reach.empty()) {
        std::set<std::pair<std::size_t, std::size_t>> next;
        for (const auto& [u, v] : reach)
            for (const auto& [label, m] : parts)
                for (std::size_t x = 0; x < n; ++x) {
                    if (m.at(u, x) == 0) continue;
                    for (std::size_t y = 0; y < n; ++y)
                        if (m.at(v, y) != 0) next.insert({x, y});
                }
        if (next.empty()) return level;
        reach = std::move(next);
        ++level;
    }
    return std::nullopt;
}

inline std::optional<unsigned> brute_force_left_closing_delay(const SymbolicMatrix& A) {
    return brute_force_right_closing_delay(A.transpose());
}

}  // namespace sofic::testing

#endif
