#ifndef SOFIC_FORMAL_SUM_HPP
#define SOFIC_FORMAL_SUM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sofic/alphabet.hpp"

namespace sofic {

/// A formal nonnegative-integer combination of words, stored as a sorted
/// association word -> positive coefficient. The empty association is the
/// empty-set entry of a symbolic matrix. There is no empty word and no
/// negative coefficient; identity behaviour only ever comes from integral
/// matrices acting on symbolic ones.
class FormalSum {
public:
    using Term = std::pair<Word, long long>;

    FormalSum() = default;

    static FormalSum single(Label l, long long coeff = 1);
    static FormalSum of_word(Word w, long long coeff = 1);

    /// Folds `coeff` copies of `w` into the sum. coeff == 0 is a no-op;
    /// negative coefficients are rejected.
    void add(const Word& w, long long coeff);

    bool is_empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long long coeff(const Word& w) const;
    /// Sum of all coefficients.
    long long mass() const;
    /// Common word length, or 0 for the empty sum.
    std::size_t word_length() const { return terms_.empty() ? 0 : terms_.front().first.size(); }

    const std::vector<Term>& terms() const { return terms_; }

    FormalSum relabeled(const LabelBijection& b) const;

    bool operator==(const FormalSum&) const = default;

private:
    std::vector<Term> terms_;
};

FormalSum operator+(const FormalSum& a, const FormalSum& b);
/// Non-commutative product: words concatenate, coefficients multiply.
FormalSum operator*(const FormalSum& a, const FormalSum& b);
/// Scale by a nonnegative integer; k == 0 yields the empty sum.
FormalSum scale(const FormalSum& a, long long k);

}  // namespace sofic

#endif
