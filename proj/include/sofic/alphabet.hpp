#ifndef SOFIC_ALPHABET_HPP
#define SOFIC_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sofic {

/// Index into an Alphabet. Labels are dense 0..k-1 within one alphabet.
struct Label {
    std::uint32_t id = 0;
    friend auto operator<=>(const Label&, const Label&) = default;
};

/// A word is a nonempty sequence of labels; comparison is id-lexicographic.
using Word = std::vector<Label>;

/// Ordered set of label display names. The canonical order is lexicographic
/// on the display name and is fixed at construction; every iteration,
/// serialization and tie-break in the library uses it.
///
/// Names must match [a-z][a-z0-9]* and be prefix-free, so that concatenated
/// words ("a1a2") tokenize unambiguously by greedy longest match.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Label l) const { return names_.at(l.id); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Label> find(std::string_view name) const;
    std::vector<Label> labels() const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

/// Total injective pairing between two alphabets of equal size;
/// to[i] is the image of source label i.
struct LabelBijection {
    std::vector<Label> to;

    Label operator()(Label l) const { return to.at(l.id); }
    Word operator()(const Word& w) const;
    bool is_identity() const;
    static LabelBijection identity(std::size_t k);
};

std::string word_to_string(const Alphabet& alphabet, const Word& w);

}  // namespace sofic

#endif
