#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "sofic/errors.hpp"
#include "sofic/symbolic_matrix.hpp"

using namespace sofic;
using namespace sofic::testing;

TEST_CASE("decompose reproduces the four sub-matrices of the running example") {
    auto parts = decompose(example_matrix());
    REQUIRE(parts.size() == 4);
    CHECK(parts.at(Label{0}) == imat(2, 2, {2, 0, 0, 0}));
    CHECK(parts.at(Label{1}) == imat(2, 2, {1, 1, 0, 0}));
    CHECK(parts.at(Label{2}) == imat(2, 2, {0, 1, 0, 0}));
    CHECK(parts.at(Label{3}) == imat(2, 2, {0, 0, 1, 1}));
}

TEST_CASE("decompose of an all-empty matrix is the empty association") {
    auto m = mat("labels: a1 a2\n.|.\n.|.\n");
    CHECK(decompose(m).empty());
}

TEST_CASE("decompose reads entries directly") {
    auto m = mat("labels: a b\na+b|.\n.|a\n");
    auto parts = decompose(m);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(Label{0}) == imat(2, 2, {1, 0, 0, 1}));
    CHECK(parts.at(Label{1}) == imat(2, 2, {1, 0, 0, 0}));
}

TEST_CASE("decompose rejects higher-degree matrices") {
    auto m = example_matrix();
    CHECK_THROWS_AS(decompose(sym_mul(m, m)), DegreeError);
}

TEST_CASE("recompose inverts decompose") {
    SUBCASE("singleton") {
        std::map<Label, IntegerMatrix> parts{{Label{0}, imat(1, 1, {1})}};
        CHECK(recompose(Alphabet({"a1"}), parts) == mat("labels: a1\na1\n"));
    }
    SUBCASE("running example") {
        auto m = example_matrix();
        CHECK(recompose(m.alphabet(), decompose(m)) == m);
    }
    SUBCASE("zero sub-matrix yields the all-empty matrix") {
        std::map<Label, IntegerMatrix> parts{{Label{0}, IntegerMatrix(2, 2)}};
        auto m = recompose(Alphabet({"a"}), parts);
        CHECK(m.is_all_empty());
        CHECK(m.rows() == 2);
    }
    SUBCASE("shape mismatch raises") {
        std::map<Label, IntegerMatrix> parts{{Label{0}, IntegerMatrix(2, 2)},
                                             {Label{1}, IntegerMatrix(3, 3)}};
        CHECK_THROWS_AS(recompose(Alphabet({"a", "b"}), parts), ShapeError);
    }
}

TEST_CASE("sym_mul concatenates words") {
    auto x = mat("labels: a b\na\n");
    auto y = mat("labels: a b\nb\n");
    auto p = sym_mul(x, y);
    CHECK(p.degree() == 2);
    CHECK(p.at(0, 0) == FormalSum::of_word(Word{Label{0}, Label{1}}));
}

TEST_CASE("squared example matrix expands as computed by hand") {
    auto m = example_matrix();
    auto sq = sym_mul(m, m);
    Label a1{0}, a2{1}, a3{2}, a4{3};
    FormalSum expected;
    expected.add(Word{a1, a1}, 4);
    expected.add(Word{a1, a2}, 2);
    expected.add(Word{a2, a1}, 2);
    expected.add(Word{a2, a2}, 1);
    expected.add(Word{a2, a4}, 1);
    expected.add(Word{a3, a4}, 1);
    CHECK(sq.at(0, 0) == expected);
}

TEST_CASE("the all-empty matrix annihilates products") {
    auto m = example_matrix();
    SymbolicMatrix zero(2, 2, m.alphabet(), 1);
    CHECK(sym_mul(m, zero).is_all_empty());
    CHECK(sym_mul(zero, m).is_all_empty());
}

TEST_CASE("mixed products with the identity and with zero") {
    auto m = example_matrix();
    CHECK(mixed_mul(IntegerMatrix::identity(2), m, Side::Left) == m);
    CHECK(mixed_mul(IntegerMatrix(2, 2), m, Side::Left).is_all_empty());
}

TEST_CASE("the out-splitting example's S*R product") {
    auto r = mat("labels: a1 a2 a3 a4\na1|a2\na1|a3\na4|a4\n");
    IntegerMatrix s = imat(2, 3, {1, 1, 0, 0, 0, 1});
    CHECK(mixed_mul(s, r, Side::Left) == out_split_base());
}

TEST_CASE("count_periodic_words counts labeled cycles with multiplicity") {
    CHECK(count_periodic_words(counterexample_a(), 2) == 2);
    CHECK(count_periodic_words(counterexample_b(), 2) == 4);
    CHECK(count_periodic_words(example_matrix(), 1) == 4);
}

TEST_CASE("sym_equal_mod_bijection") {
    SUBCASE("identity on equal matrices") {
        auto m = example_matrix();
        auto b = sym_equal_mod_bijection(m, m);
        REQUIRE(b.has_value());
        CHECK(b->is_identity());
    }
    SUBCASE("single swap") {
        auto x = mat("labels: a1 a2\na1\n");
        auto y = mat("labels: a1 a2\na2\n");
        auto b = sym_equal_mod_bijection(x, y);
        REQUIRE(b.has_value());
        CHECK((*b)(Label{0}) == Label{1});
    }
    SUBCASE("the counterexample pair admits no bijection") {
        CHECK_FALSE(sym_equal_mod_bijection(counterexample_a(), counterexample_b()).has_value());
    }
}

TEST_CASE("entropy of known matrices") {
    CHECK(entropy(mat("labels: a1\n2a1\n")) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(entropy(example_matrix()) ==
          doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-12));
    CHECK(entropy(mat("labels: a b\na+b\n")) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(entropy(mat("labels: a\n.\n")) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("round trip holds on random degree-1 matrices") {
    std::mt19937 rng(20240811);
    for (int t = 0; t < 60; ++t) {
        auto m = random_symbolic(rng, 1 + t % 4, 1 + t % 3, 3);
        CHECK(recompose(m.alphabet(), decompose(m), m.rows(), m.cols()) == m);
    }
}

TEST_CASE("mixed products distribute over sub-matrices") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        auto m = random_symbolic(rng, 2 + t % 3, 2, 2);
        IntegerMatrix s(m.rows(), m.rows());
        std::uniform_int_distribution<long long> entry(0, 2);
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j) s.set(i, j, entry(rng));
        std::map<Label, IntegerMatrix> scaled;
        for (const auto& [label, part] : decompose(m)) scaled.emplace(label, s * part);
        CHECK(mixed_mul(s, m, Side::Left) ==
              recompose(m.alphabet(), scaled, m.rows(), m.cols()));
    }
}

TEST_CASE("sym_mul is associative on random matrices") {
    std::mt19937 rng(99);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 2;
        auto a = random_symbolic(rng, n, 2, 2);
        auto b = random_symbolic(rng, n, 2, 2);
        auto c = random_symbolic(rng, n, 2, 2);
        CHECK(sym_mul(sym_mul(a, b), c) == sym_mul(a, sym_mul(b, c)));
    }
}

TEST_CASE("count_periodic_words is invariant under relabeling") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 30; ++t) {
        auto m = random_symbolic(rng, 2 + t % 3, 3, 2);
        std::vector<std::uint32_t> perm{0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        LabelBijection b;
        for (std::uint32_t p : perm) b.to.push_back(Label{p});
        auto relabeled = m.relabeled(b);
        for (unsigned n = 1; n <= 5; ++n)
            CHECK(count_periodic_words(m, n) == count_periodic_words(relabeled, n));
        auto found = sym_equal_mod_bijection(m, relabeled);
        CHECK(found.has_value());
    }
}

TEST_CASE("entropy is nonnegative on irreducible matrices with a cycle") {
    auto m = mat("labels: a b\na|b\nb|.\n");
    CHECK(entropy(m) >= 0.0);
}

TEST_CASE("entropy of a block-diagonal matrix is the maximum of the blocks") {
    auto blockdiag = mat("labels: a b\n2a|.\n.|3b\n");
    CHECK(entropy(blockdiag) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    auto top = mat("labels: a b\n2a\n");
    auto bottom = mat("labels: a b\n3b\n");
    CHECK(entropy(blockdiag) ==
          doctest::Approx(std::max(entropy(top), entropy(bottom))).epsilon(1e-12));
}
