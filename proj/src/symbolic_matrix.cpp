#include "sofic/symbolic_matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include <gmpxx.h>

#include "sofic/errors.hpp"

namespace sofic {

SymbolicMatrix::SymbolicMatrix(std::size_t rows, std::size_t cols, Alphabet alphabet,
                               std::size_t degree)
    : rows_(rows), cols_(cols), degree_(degree), alphabet_(std::move(alphabet)),
      entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("symbolic matrix must have positive dimensions");
    if (degree == 0) throw DegreeError("symbolic matrix degree must be at least 1");
}

SymbolicMatrix SymbolicMatrix::square(std::size_t n, Alphabet alphabet, std::size_t degree) {
    return SymbolicMatrix(n, n, std::move(alphabet), degree);
}

void SymbolicMatrix::set(std::size_t i, std::size_t j, FormalSum value) {
    for (const auto& term : value.terms()) {
        if (term.first.size() != degree_)
            throw DegreeError("word length does not match matrix degree");
        for (Label l : term.first)
            if (l.id >= alphabet_.size()) throw std::invalid_argument("label outside alphabet");
    }
    entries_[i * cols_ + j] = std::move(value);
}

void SymbolicMatrix::add(std::size_t i, std::size_t j, const Word& w, long long coeff) {
    FormalSum s = at(i, j);
    s.add(w, coeff);
    set(i, j, std::move(s));
}

bool SymbolicMatrix::is_all_empty() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const FormalSum& s) { return s.is_empty(); });
}

bool SymbolicMatrix::is_degenerate() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < cols_; ++j) any = any || !at(i, j).is_empty();
        if (!any) return true;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < rows_; ++i) any = any || !at(i, j).is_empty();
        if (!any) return true;
    }
    return false;
}

bool SymbolicMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_empty()) return false;
    return true;
}

SymbolicMatrix SymbolicMatrix::transpose() const {
    SymbolicMatrix t(cols_, rows_, alphabet_, degree_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

SymbolicMatrix SymbolicMatrix::relabeled(const LabelBijection& b, Alphabet target) const {
    if (b.to.size() != alphabet_.size() || target.size() != alphabet_.size())
        throw std::invalid_argument("label bijection must pair equal-sized alphabets");
    SymbolicMatrix out(rows_, cols_, std::move(target), degree_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j).relabeled(b));
    return out;
}

std::map<Label, IntegerMatrix> decompose(const SymbolicMatrix& A) {
    if (A.degree() != 1) throw DegreeError("decompose requires a degree-1 matrix");
    std::map<Label, IntegerMatrix> parts;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            for (const auto& term : A.at(i, j).terms()) {
                Label l = term.first.front();
                auto [it, inserted] = parts.try_emplace(l, A.rows(), A.cols());
                it->second.set(i, j, term.second);
            }
    return parts;
}

SymbolicMatrix recompose(const Alphabet& alphabet, const std::map<Label, IntegerMatrix>& parts) {
    if (parts.empty())
        throw ShapeError("recompose of an empty association needs an explicit shape");
    const IntegerMatrix& first = parts.begin()->second;
    return recompose(alphabet, parts, first.rows(), first.cols());
}

SymbolicMatrix recompose(const Alphabet& alphabet, const std::map<Label, IntegerMatrix>& parts,
                         std::size_t rows, std::size_t cols) {
    SymbolicMatrix out(rows, cols, alphabet, 1);
    for (const auto& [label, m] : parts) {
        if (m.rows() != rows || m.cols() != cols)
            throw ShapeError("recompose: sub-matrix shape mismatch");
        if (label.id >= alphabet.size()) throw std::invalid_argument("label outside alphabet");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (m.at(i, j) != 0) out.add(i, j, Word{label}, m.at(i, j));
    }
    return out;
}

SymbolicMatrix sym_mul(const SymbolicMatrix& A, const SymbolicMatrix& B) {
    if (A.cols() != B.rows()) throw ShapeError("sym_mul: shape mismatch");
    if (!(A.alphabet() == B.alphabet()))
        throw std::invalid_argument("sym_mul: factors must share one alphabet");
    SymbolicMatrix out(A.rows(), B.cols(), A.alphabet(), A.degree() + B.degree());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            FormalSum acc;
            for (std::size_t k = 0; k < A.cols(); ++k) acc = acc + A.at(i, k) * B.at(k, j);
            out.set(i, j, std::move(acc));
        }
    return out;
}

SymbolicMatrix mixed_mul(const IntegerMatrix& S, const SymbolicMatrix& A, Side side) {
    if (side == Side::Left) {
        if (S.cols() != A.rows()) throw ShapeError("mixed_mul: shape mismatch");
        SymbolicMatrix out(S.rows(), A.cols(), A.alphabet(), A.degree());
        for (std::size_t i = 0; i < S.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) {
                FormalSum acc;
                for (std::size_t k = 0; k < S.cols(); ++k)
                    acc = acc + scale(A.at(k, j), S.at(i, k));
                out.set(i, j, std::move(acc));
            }
        return out;
    }
    if (A.cols() != S.rows()) throw ShapeError("mixed_mul: shape mismatch");
    SymbolicMatrix out(A.rows(), S.cols(), A.alphabet(), A.degree());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < S.cols(); ++j) {
            FormalSum acc;
            for (std::size_t k = 0; k < A.cols(); ++k) acc = acc + scale(A.at(i, k), S.at(k, j));
            out.set(i, j, std::move(acc));
        }
    return out;
}

IntegerMatrix total_matrix(const SymbolicMatrix& A) {
    IntegerMatrix t(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) t.set(i, j, A.at(i, j).mass());
    return t;
}

unsigned long long count_periodic_words(const SymbolicMatrix& A, unsigned n) {
    if (!A.is_square()) throw ShapeError("count_periodic_words requires a square matrix");
    if (A.degree() != 1) throw DegreeError("count_periodic_words requires a degree-1 matrix");
    if (n == 0) throw std::invalid_argument("cycle length must be positive");
    // Coefficient mass is a semiring homomorphism onto Z+, so the mass of
    // trace(A^n) equals trace(T^n) for the total matrix T. Computed in
    // arbitrary precision, then narrowed.
    const IntegerMatrix t = total_matrix(A);
    const std::size_t dim = t.rows();
    std::vector<mpz_class> power(dim * dim), base(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            base[i * dim + j] = static_cast<long>(t.at(i, j));
            power[i * dim + j] = (i == j) ? 1 : 0;
        }
    for (unsigned step = 0; step < n; ++step) {
        std::vector<mpz_class> next(dim * dim, mpz_class(0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                if (power[i * dim + k] == 0) continue;
                for (std::size_t j = 0; j < dim; ++j)
                    next[i * dim + j] += power[i * dim + k] * base[k * dim + j];
            }
        power = std::move(next);
    }
    mpz_class trace(0);
    for (std::size_t i = 0; i < dim; ++i) trace += power[i * dim + i];
    if (!trace.fits_ulong_p()) throw std::overflow_error("periodic word count exceeds 64 bits");
    return trace.get_ui();
}

namespace {

/// Per-label occurrence fingerprint: sorted multiset of
/// (cell index, position in word, coefficient) describing where a label
/// occurs. Bijection candidates must have identical fingerprints.
std::vector<std::vector<std::array<long long, 3>>> label_fingerprints(const SymbolicMatrix& M) {
    std::vector<std::vector<std::array<long long, 3>>> fp(M.alphabet().size());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            for (const auto& term : M.at(i, j).terms())
                for (std::size_t pos = 0; pos < term.first.size(); ++pos)
                    fp[term.first[pos].id].push_back(
                        {static_cast<long long>(i * M.cols() + j), static_cast<long long>(pos),
                         term.second});
    for (auto& v : fp) std::sort(v.begin(), v.end());
    return fp;
}

}  // namespace

std::optional<LabelBijection> sym_equal_mod_bijection(const SymbolicMatrix& A,
                                                      const SymbolicMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw ShapeError("same shape required");
    const std::size_t k = A.alphabet().size();
    if (B.alphabet().size() != k) return std::nullopt;
    if (A.degree() != B.degree()) return std::nullopt;

    const auto fp_a = label_fingerprints(A);
    const auto fp_b = label_fingerprints(B);

    std::vector<std::vector<std::uint32_t>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (fp_a[i] == fp_b[j]) candidates[i].push_back(static_cast<std::uint32_t>(j));

    std::vector<std::uint32_t> image(k, 0);
    std::vector<bool> used(k, false);
    // Depth-first over source labels in canonical order, candidates ascending,
    // so the first full assignment that checks out is the least one.
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) {
            LabelBijection b;
            b.to.reserve(k);
            for (std::uint32_t t : image) b.to.push_back(Label{t});
            return A.relabeled(b, B.alphabet()) == B;
        }
        for (std::uint32_t cand : candidates[depth]) {
            if (used[cand]) continue;
            used[cand] = true;
            image[depth] = cand;
            if (self(self, depth + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    LabelBijection b;
    b.to.reserve(k);
    for (std::uint32_t t : image) b.to.push_back(Label{t});
    return b;
}

namespace {

/// True iff the digraph with an edge i->j whenever t(i,j) > 0 has a cycle.
/// Spectral radius of a nonnegative integer matrix is zero exactly when the
/// digraph is acyclic, and at least 1 otherwise.
bool has_cycle(const IntegerMatrix& t) {
    const std::size_t n = t.rows();
    std::vector<int> color(n, 0);  // 0 unvisited, 1 on stack, 2 done
    auto dfs = [&](auto&& self, std::size_t u) -> bool {
        color[u] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (t.at(u, v) == 0) continue;
            if (color[v] == 1) return true;
            if (color[v] == 0 && self(self, v)) return true;
        }
        color[u] = 2;
        return false;
    };
    for (std::size_t u = 0; u < n; ++u)
        if (color[u] == 0 && dfs(dfs, u)) return true;
    return false;
}

}  // namespace

double entropy(const SymbolicMatrix& A) {
    if (!A.is_square()) throw ShapeError("entropy requires a square matrix");
    if (A.degree() != 1) throw DegreeError("entropy requires a degree-1 matrix");
    const IntegerMatrix t = total_matrix(A);
    const std::size_t n = t.rows();
    // rho = 0 (no cycle at all) has entropy -infinity; afterwards rho >= 1.
    if (!has_cycle(t)) return -std::numeric_limits<double>::infinity();

    // Power iteration by repeated squaring: log rho(T) = lim 2^-J log||T^(2^J)||.
    // Each squaring renormalizes by the largest entry; the accumulated sum of
    // 2^-j log s_j converges well past relative tolerance 1e-12 by J = 64,
    // including defective and reducible cases.
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = static_cast<double>(t.at(i, j));
    double log_rho = 0.0;
    for (int step = 0; step < 64; ++step) {
        double s = 0.0;
        for (double x : m) s = std::max(s, x);
        log_rho += std::ldexp(std::log(s), -step);
        const double inv = 1.0 / s;
        for (double& x : m) x *= inv;
        std::vector<double> sq(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const double mik = m[i * n + k];
                if (mik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) sq[i * n + j] += mik * m[k * n + j];
            }
        m = std::move(sq);
    }
    return log_rho;
}

}  // namespace sofic
