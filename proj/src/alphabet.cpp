#include "sofic/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

#include "sofic/errors.hpp"

namespace sofic {

namespace {

bool valid_label_name(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_label_name(names_[i]))
            throw std::invalid_argument("invalid label name: '" + names_[i] + "'");
        if (i > 0 && names_[i] == names_[i - 1])
            throw std::invalid_argument("duplicate label name: '" + names_[i] + "'");
    }
    // Prefix-freeness keeps concatenated words uniquely tokenizable.
    for (std::size_t i = 0; i + 1 < names_.size(); ++i) {
        const std::string& a = names_[i];
        const std::string& b = names_[i + 1];
        if (b.size() > a.size() && b.compare(0, a.size(), a) == 0)
            throw std::invalid_argument("label name '" + a + "' is a prefix of '" + b + "'");
    }
}

std::optional<Label> Alphabet::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it != names_.end() && *it == name)
        return Label{static_cast<std::uint32_t>(it - names_.begin())};
    return std::nullopt;
}

std::vector<Label> Alphabet::labels() const {
    std::vector<Label> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = Label{static_cast<std::uint32_t>(i)};
    return out;
}

Word LabelBijection::operator()(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Label l : w) out.push_back((*this)(l));
    return out;
}

bool LabelBijection::is_identity() const {
    for (std::size_t i = 0; i < to.size(); ++i)
        if (to[i].id != i) return false;
    return true;
}

LabelBijection LabelBijection::identity(std::size_t k) {
    LabelBijection b;
    b.to.resize(k);
    for (std::size_t i = 0; i < k; ++i) b.to[i] = Label{static_cast<std::uint32_t>(i)};
    return b;
}

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
    std::string out;
    for (Label l : w) out += alphabet.name(l);
    return out;
}

}  // namespace sofic
