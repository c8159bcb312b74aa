#include "sofic/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "sofic/errors.hpp"

namespace sofic {

namespace {

struct Line {
    std::size_t number;  // 1-based position in the input
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        std::size_t a = raw.find_first_not_of(" \t\r");
        if (a != std::string_view::npos && raw[a] != '#') {
            std::size_t b = raw.find_last_not_of(" \t\r");
            lines.push_back(Line{number, std::string(raw.substr(a, b - a + 1))});
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t end = s.find(sep, start);
        parts.push_back(s.substr(start, end == std::string::npos ? end : end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return parts;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

/// Greedy longest-match tokenization of a concatenated word.
Word tokenize_word(const Alphabet& alphabet, const std::string& s, std::size_t line,
                   std::size_t col) {
    Word w;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t best = 0;
        for (const std::string& name : alphabet.names())
            if (s.compare(pos, name.size(), name) == 0) best = std::max(best, name.size());
        if (best == 0)
            throw ParseError(line, col + pos, "unknown label starting at '" + s.substr(pos) + "'");
        w.push_back(*alphabet.find(s.substr(pos, best)));
        pos += best;
    }
    if (w.empty()) throw ParseError(line, col, "empty word");
    return w;
}

FormalSum parse_entry(const Alphabet& alphabet, const std::string& raw, std::size_t line,
                      std::size_t col) {
    std::string s = trimmed(raw);
    if (s.empty()) throw ParseError(line, col, "empty entry (use '.' for the empty set)");
    if (s == ".") return FormalSum{};
    FormalSum sum;
    for (const std::string& part : split_on(s, '+')) {
        std::string term = trimmed(part);
        if (term.empty()) throw ParseError(line, col, "empty term in sum");
        if (term[0] == '-') throw ParseError(line, col, "negative coefficients are not allowed");
        std::size_t pos = 0;
        long long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            coeff = 0;
            while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
                coeff = coeff * 10 + (term[pos] - '0');
                ++pos;
            }
            if (coeff == 0) throw ParseError(line, col, "zero coefficient");
        }
        if (pos == term.size()) throw ParseError(line, col, "coefficient without a word");
        sum.add(tokenize_word(alphabet, term.substr(pos), line, col), coeff);
    }
    return sum;
}

}  // namespace

SymbolicMatrix parse_matrix(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    const std::string& header = lines.front().text;
    const std::string prefix = "labels:";
    if (header.compare(0, prefix.size(), prefix) != 0)
        throw ParseError(lines.front().number, 1, "expected a 'labels:' header line");
    std::vector<std::string> names;
    {
        std::istringstream in(header.substr(prefix.size()));
        std::string name;
        while (in >> name) names.push_back(name);
    }
    if (names.empty()) throw ParseError(lines.front().number, 1, "alphabet must be nonempty");
    Alphabet alphabet = [&] {
        try {
            return Alphabet(std::move(names));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines.front().number, 1, e.what());
        }
    }();

    if (lines.size() < 2) throw ParseError(lines.front().number, 1, "matrix body is missing");
    std::vector<std::vector<FormalSum>> rows;
    std::size_t cols = 0;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [number, text_line] = lines[r];
        std::vector<FormalSum> row;
        std::size_t col_pos = 1;
        for (const std::string& cell : split_on(text_line, '|')) {
            row.push_back(parse_entry(alphabet, cell, number, col_pos));
            col_pos += cell.size() + 1;
        }
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError(number, 1, "rows must have equal length");
        rows.push_back(std::move(row));
    }

    std::size_t degree = 1;
    for (const auto& row : rows)
        for (const FormalSum& s : row)
            if (!s.is_empty()) degree = s.word_length();
    SymbolicMatrix m(rows.size(), cols, alphabet, degree);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m.set(i, j, rows[i][j]);
            } catch (const DegreeError&) {
                throw ParseError(lines[i + 1].number, 1, "mixed word lengths in one matrix");
            }
        }
    return m;
}

std::string serialize_matrix(const SymbolicMatrix& A) {
    std::string out = "labels:";
    for (const std::string& name : A.alphabet().names()) out += " " + name;
    out += "\n";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j > 0) out += "|";
            const FormalSum& s = A.at(i, j);
            if (s.is_empty()) {
                out += ".";
                continue;
            }
            bool first = true;
            for (const auto& [word, coeff] : s.terms()) {
                if (!first) out += "+";
                first = false;
                if (coeff != 1) out += std::to_string(coeff);
                out += word_to_string(A.alphabet(), word);
            }
        }
        out += "\n";
    }
    return out;
}

IntegerMatrix parse_integer_matrix(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    std::vector<std::vector<long long>> rows;
    std::size_t cols = 0;
    for (const auto& [number, text_line] : lines) {
        std::vector<long long> row;
        for (const std::string& cell : split_on(text_line, '|')) {
            std::string t = trimmed(cell);
            if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw ParseError(number, 1, "expected a nonnegative integer, got '" + t + "'");
            row.push_back(std::stoll(t));
        }
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError(number, 1, "rows must have equal length");
        rows.push_back(std::move(row));
    }
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    return m;
}

std::string serialize_integer_matrix(const IntegerMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += "|";
            out += std::to_string(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace sofic
