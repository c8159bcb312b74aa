#include "sofic/formal_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace sofic {

FormalSum FormalSum::single(Label l, long long coeff) { return of_word(Word{l}, coeff); }

FormalSum FormalSum::of_word(Word w, long long coeff) {
    FormalSum s;
    s.add(w, coeff);
    return s;
}

void FormalSum::add(const Word& w, long long coeff) {
    if (coeff == 0) return;
    if (coeff < 0) throw std::invalid_argument("formal sums have nonnegative coefficients");
    if (w.empty()) throw std::invalid_argument("the empty word is not a valid monomial");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w)
        it->second += coeff;
    else
        terms_.insert(it, Term{w, coeff});
}

long long FormalSum::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w) return it->second;
    return 0;
}

long long FormalSum::mass() const {
    long long m = 0;
    for (const Term& t : terms_) m += t.second;
    return m;
}

FormalSum FormalSum::relabeled(const LabelBijection& b) const {
    FormalSum out;
    for (const Term& t : terms_) out.add(b(t.first), t.second);
    return out;
}

FormalSum operator+(const FormalSum& a, const FormalSum& b) {
    FormalSum out = a;
    for (const auto& t : b.terms()) out.add(t.first, t.second);
    return out;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Word w = ta.first;
            w.insert(w.end(), tb.first.begin(), tb.first.end());
            out.add(w, ta.second * tb.second);
        }
    }
    return out;
}

FormalSum scale(const FormalSum& a, long long k) {
    if (k == 0) return FormalSum{};
    FormalSum out;
    for (const auto& t : a.terms()) out.add(t.first, t.second * k);
    return out;
}

}  // namespace sofic
