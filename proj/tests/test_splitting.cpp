#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sofic/errors.hpp"
#include "sofic/splitting.hpp"

using namespace sofic;
using namespace sofic::testing;

TEST_CASE("in-splitting the running example with the first partition") {
    auto [b, w] = in_split(example_matrix(), example_in_partition_a());
    CHECK(b == mat("labels: a1 a2 a3 a4\n"
                   "a1+a2|a1|a2+a3\n"
                   "a1+a2|a1|a2+a3\n"
                   ".|a4|a4\n"));
    CHECK(verify_split_witness(w));
    CHECK(w.kind == SplitKind::Column);
}

TEST_CASE("in-splitting with the doubled-cycle partition matches the sub-matrix displays") {
    auto [b, w] = in_split(example_matrix(), example_in_partition_b());
    auto parts = decompose(b);
    CHECK(parts.at(Label{0}) == imat(3, 3, {2, 0, 0, 2, 0, 0, 0, 0, 0}));
    CHECK(parts.at(Label{1}) == imat(3, 3, {0, 1, 1, 0, 1, 1, 0, 0, 0}));
    CHECK(parts.at(Label{2}) == imat(3, 3, {0, 0, 1, 0, 0, 1, 0, 0, 0}));
    CHECK(parts.at(Label{3}) == imat(3, 3, {0, 0, 0, 0, 0, 0, 0, 1, 1}));
    CHECK(verify_split_witness(w));
}

TEST_CASE("a single-block partition splits nothing") {
    auto m = example_matrix();
    EdgePartition p{0, SplitDirection::In, {in_edges(m, 0)}};
    auto [b, w] = in_split(m, p);
    CHECK(b == m);
    CHECK(verify_split_witness(w));
}

TEST_CASE("invalid partitions are rejected") {
    auto m = example_matrix();
    SUBCASE("not covering") {
        EdgePartition p{0, SplitDirection::In, {{EdgeRef{0, 0, Label{0}, 0}}}};
        CHECK_THROWS_AS(in_split(m, p), PartitionError);
    }
    SUBCASE("overlapping") {
        auto edges = in_edges(m, 0);
        EdgePartition p{0, SplitDirection::In, {edges, {edges.front()}}};
        CHECK_THROWS_AS(in_split(m, p), PartitionError);
    }
    SUBCASE("wrong direction") {
        EdgePartition p{0, SplitDirection::Out, {in_edges(m, 0)}};
        CHECK_THROWS_AS(in_split(m, p), PartitionError);
    }
    SUBCASE("empty block") {
        EdgePartition p{0, SplitDirection::In, {in_edges(m, 0), {}}};
        CHECK_THROWS_AS(in_split(m, p), PartitionError);
    }
}

TEST_CASE("the worked out-splitting example") {
    auto [b, w] = out_split(out_split_base(), example_out_partition());
    CHECK(b == mat("labels: a1 a2 a3 a4\n"
                   "a1|a1|a2\n"
                   "a1|a1|a3\n"
                   "a4|a4|a4\n"));
    CHECK(w.S == imat(2, 3, {1, 1, 0, 0, 0, 1}));
    CHECK(w.R == mat("labels: a1 a2 a3 a4\na1|a2\na1|a3\na4|a4\n"));
    auto r_parts = decompose(w.R);
    CHECK(r_parts.at(Label{0}) == imat(3, 2, {1, 0, 1, 0, 0, 0}));
    CHECK(r_parts.at(Label{1}) == imat(3, 2, {0, 1, 0, 0, 0, 0}));
    CHECK(r_parts.at(Label{2}) == imat(3, 2, {0, 0, 0, 1, 0, 0}));
    CHECK(r_parts.at(Label{3}) == imat(3, 2, {0, 0, 0, 0, 1, 1}));
    CHECK(verify_split_witness(w));
    CHECK(mixed_mul(w.S, w.R, Side::Left) == out_split_base());
    CHECK(mixed_mul(w.S, w.R, Side::Right) == b);
}

TEST_CASE("witness verification catches corruption") {
    auto [b, w] = out_split(out_split_base(), example_out_partition());
    SUBCASE("intact witness verifies") { CHECK(verify_split_witness(w)); }
    SUBCASE("perturbed R fails") {
        SplitWitness bad = w;
        FormalSum s = bad.R.at(0, 0);
        s.add(Word{Label{0}}, 1);
        bad.R.set(0, 0, s);
        CHECK_FALSE(verify_split_witness(bad));
    }
    SUBCASE("identity witness verifies") {
        CHECK(verify_split_witness(identity_split_witness(example_matrix(), SplitKind::Row)));
        CHECK(verify_split_witness(identity_split_witness(example_matrix(), SplitKind::Column)));
    }
}

TEST_CASE("predecessor and follower sets of the running example") {
    auto m = example_matrix();
    using P = std::pair<std::size_t, Label>;
    CHECK(predecessor_set(m, 0) ==
          std::vector<P>{{0, Label{0}}, {0, Label{0}}, {0, Label{1}}, {1, Label{3}}});
    CHECK(predecessor_set(m, 1) == std::vector<P>{{0, Label{1}}, {0, Label{2}}, {1, Label{3}}});
    CHECK(follower_set(m, 1) == std::vector<P>{{0, Label{3}}, {1, Label{3}}});
    CHECK(follower_set(m, 0) == std::vector<P>{{0, Label{0}},
                                               {0, Label{0}},
                                               {0, Label{1}},
                                               {1, Label{1}},
                                               {1, Label{2}}});
    auto iso = mat("labels: a\na|.\n.|.\n");
    CHECK(predecessor_set(iso, 1).empty());
    CHECK(follower_set(iso, 1).empty());
}

TEST_CASE("amalgamation undoes the in-splitting of the running example") {
    auto [split, sw] = in_split(example_matrix(), example_in_partition_a());
    auto [merged, w] = amalgamate(split, 0, 1, SplitDirection::Out);
    CHECK(merged == example_matrix());
    CHECK(verify_split_witness(w));
    CHECK(w.B == split);
    CHECK(w.A == merged);
}

TEST_CASE("merging the running example's two vertices is illegal") {
    CHECK_THROWS_WITH_AS(amalgamate(example_matrix(), 0, 1, SplitDirection::In),
                         doctest::Contains("sub-matrix 'a1'"), AmalgamationError);
    CHECK_THROWS_AS(amalgamate(example_matrix(), 0, 1, SplitDirection::Out), AmalgamationError);
}

TEST_CASE("merging a doubled one-vertex matrix restores the original") {
    auto doubled_rows = mat("labels: a\na|.\na|.\n");
    auto [m1, w1] = amalgamate(doubled_rows, 0, 1, SplitDirection::Out);
    CHECK(m1 == mat("labels: a\na\n"));
    CHECK(verify_split_witness(w1));
    auto doubled_cols = mat("labels: a\na|a\n.|.\n");
    auto [m2, w2] = amalgamate(doubled_cols, 0, 1, SplitDirection::In);
    CHECK(m2 == mat("labels: a\na\n"));
    CHECK(verify_split_witness(w2));
}

TEST_CASE("amalgamation inverts the out-splitting of the worked example") {
    auto [split, sw] = out_split(out_split_base(), example_out_partition());
    auto [merged, w] = amalgamate(split, 0, 1, SplitDirection::In);
    CHECK(merged == out_split_base());
    CHECK(verify_split_witness(w));
}

TEST_CASE("common amalgamation of disjoint merge pairs") {
    // Split the running example twice so the result has two disjoint
    // out-mergeable pairs {0,1} and {2,3}.
    auto a_prime = in_split(example_matrix(), example_in_partition_a()).matrix;
    Label a2{1}, a3{2}, a4{3};
    EdgePartition second{2,
                         SplitDirection::In,
                         {{EdgeRef{0, 2, a2, 0}, EdgeRef{1, 2, a2, 0}},
                          {EdgeRef{0, 2, a3, 0}, EdgeRef{1, 2, a3, 0}, EdgeRef{2, 2, a4, 0}}}};
    auto twice = in_split(a_prime, second).matrix;
    REQUIRE(twice.rows() == 4);
    auto w1 = amalgamate(twice, 0, 1, SplitDirection::Out).witness;
    auto w2 = amalgamate(twice, 2, 3, SplitDirection::Out).witness;
    auto common = common_amalgamation(twice, w1, w2);
    CHECK(common.C == example_matrix());
    CHECK(verify_split_witness(common.from_b1));
    CHECK(verify_split_witness(common.from_b2));
}

TEST_CASE("common amalgamation with a shared vertex performs the three-way merge") {
    auto triple = mat("labels: a\na|.|.\na|.|.\na|.|.\n");
    auto w1 = amalgamate(triple, 0, 1, SplitDirection::Out).witness;
    auto w2 = amalgamate(triple, 1, 2, SplitDirection::Out).witness;
    auto common = common_amalgamation(triple, w1, w2);
    CHECK(common.C == mat("labels: a\na\n"));
    CHECK(verify_split_witness(common.from_b1));
    CHECK(verify_split_witness(common.from_b2));
}

TEST_CASE("common amalgamation of one witness with itself") {
    auto doubled = mat("labels: a\na|.\na|.\n");
    auto w = amalgamate(doubled, 0, 1, SplitDirection::Out).witness;
    auto common = common_amalgamation(doubled, w, w);
    CHECK(common.C == w.A);
    CHECK(verify_split_witness(common.from_b1));
}

TEST_CASE("common amalgamation rejects incompatible witnesses") {
    auto doubled = mat("labels: a\na|.\na|.\n");
    auto w = amalgamate(doubled, 0, 1, SplitDirection::Out).witness;
    auto other = identity_split_witness(example_matrix(), SplitKind::Row);
    CHECK_THROWS_AS(common_amalgamation(doubled, w, other), LemmaPreconditionError);
}

TEST_CASE("per-label splitting identities hold") {
    auto [split, w] = in_split(example_matrix(), example_in_partition_b());
    auto r_parts = decompose(w.R);
    for (const auto& [label, a_part] : decompose(example_matrix())) {
        CHECK(r_parts.at(label) * w.S == a_part);
        CHECK(w.S * r_parts.at(label) == decompose(split).at(label));
    }
}

TEST_CASE("in-splitting copies the split vertex's rows") {
    std::mt19937 rng(314);
    for (int t = 0; t < 25; ++t) {
        auto m = random_symbolic(rng, 2 + t % 3, 2, 2, 0.7);
        std::size_t v = t % m.rows();
        if (in_edges(m, v).empty()) continue;
        auto p = random_partition(rng, m, v, SplitDirection::In);
        auto [b, w] = in_split(m, p);
        std::size_t copies = p.blocks.size();
        for (std::size_t beta = 1; beta < copies; ++beta)
            for (std::size_t y = 0; y < b.cols(); ++y) {
                if (y >= v && y < v + copies) continue;  // the split columns
                CHECK(b.at(v, y) == b.at(v + beta, y));
            }
    }
}

TEST_CASE("apply_move_sequence tracks per-label sub-matrices in lockstep") {
    Move split_move{Move::Op::Split, SplitDirection::In, example_in_partition_a(), std::nullopt};
    auto trace = apply_move_sequence(example_matrix(), {split_move});
    CHECK(trace.final == in_split(example_matrix(), example_in_partition_a()).matrix);
    CHECK(trace.traces.size() == 4);
    for (const auto& [label, steps] : trace.traces) {
        CHECK(steps.size() == 2);
        CHECK(steps.back() ==
              decompose_full_label(trace.final, label));
    }
}

TEST_CASE("an empty move sequence returns the matrix unchanged") {
    auto trace = apply_move_sequence(example_matrix(), {});
    CHECK(trace.final == example_matrix());
    for (const auto& [label, steps] : trace.traces) CHECK(steps.size() == 1);
}

TEST_CASE("split then amalgamate is the identity and preserves cycle counts") {
    Move split_move{Move::Op::Split, SplitDirection::In, example_in_partition_a(), std::nullopt};
    Move merge_move{Move::Op::Amalgamate, SplitDirection::Out, std::nullopt,
                    std::make_pair<std::size_t, std::size_t>(0, 1)};
    auto trace = apply_move_sequence(example_matrix(), {split_move, merge_move});
    CHECK(trace.final == example_matrix());
    auto a_prime = in_split(example_matrix(), example_in_partition_a()).matrix;
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(count_periodic_words(example_matrix(), n) == count_periodic_words(a_prime, n));
        CHECK(count_periodic_words(trace.final, n) == count_periodic_words(example_matrix(), n));
    }
}

TEST_CASE("illegal moves report their step index") {
    Move bad{Move::Op::Amalgamate, SplitDirection::In, std::nullopt,
             std::make_pair<std::size_t, std::size_t>(0, 1)};
    try {
        apply_move_sequence(example_matrix(), {bad});
        FAIL("expected MoveError");
    } catch (const MoveError& e) {
        CHECK(e.step() == 0);
    }
}
