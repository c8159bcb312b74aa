#include "sofic/dot_export.hpp"

namespace sofic {

std::string to_dot(const SymbolicMatrix& A) {
    std::string out = "digraph G {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < A.rows(); ++i)
        out += "  V" + std::to_string(i + 1) + ";\n";
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (const auto& [word, coeff] : A.at(i, j).terms())
                for (long long c = 0; c < coeff; ++c)
                    out += "  V" + std::to_string(i + 1) + " -> V" + std::to_string(j + 1) +
                           " [label=\"" + word_to_string(A.alphabet(), word) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace sofic
