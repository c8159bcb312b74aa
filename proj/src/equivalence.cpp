#include "sofic/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sofic/errors.hpp"

namespace sofic {

namespace {

std::vector<IntegerMatrix> decompose_full(const SymbolicMatrix& A) {
    std::vector<IntegerMatrix> out(A.alphabet().size(), IntegerMatrix(A.rows(), A.cols()));
    for (const auto& [label, m] : decompose(A)) out[label.id] = m;
    return out;
}

}  // namespace

bool verify_esse(const SymbolicMatrix& A, const SymbolicMatrix& B, const EsseWitness& w) {
    if (w.R.degree() != 1) return false;
    if (!(A.alphabet() == B.alphabet()) || !(A.alphabet() == w.R.alphabet())) return false;
    if (!A.is_square() || !B.is_square()) return false;
    const std::size_t n = A.rows();
    const std::size_t m = B.rows();
    if (!w.S.is_division_matrix()) return false;
    try {
        if (w.orientation == EsseOrientation::RsSr) {
            if (w.R.rows() != n || w.R.cols() != m) return false;
            if (w.S.rows() != m || w.S.cols() != n) return false;
            return mixed_mul(w.S, w.R, Side::Right) == A && mixed_mul(w.S, w.R, Side::Left) == B;
        }
        if (w.S.rows() != n || w.S.cols() != m) return false;
        if (w.R.rows() != m || w.R.cols() != n) return false;
        return mixed_mul(w.S, w.R, Side::Left) == A && mixed_mul(w.S, w.R, Side::Right) == B;
    } catch (const ShapeError&) {
        return false;
    }
}

bool verify_sse_chain(const SymbolicMatrix& A, const SymbolicMatrix& B, const SseChain& chain) {
    if (chain.links.empty()) return false;
    if (chain.matrices.size() != chain.links.size() + 1) return false;
    if (!(chain.matrices.front() == A) || !(chain.matrices.back() == B)) return false;
    for (std::size_t i = 0; i < chain.links.size(); ++i)
        if (!verify_esse(chain.matrices[i], chain.matrices[i + 1], chain.links[i])) return false;
    return true;
}

namespace {

/// Enumerates surjections sigma: [domain] -> [codomain] in lexicographic
/// order, invoking fn on each; fn returns true to stop.
bool for_each_surjection(std::size_t domain, std::size_t codomain,
                         const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> sigma(domain, 0);
    while (true) {
        std::vector<bool> hit(codomain, false);
        for (std::size_t x : sigma) hit[x] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            if (fn(sigma)) return true;
        std::size_t pos = domain;
        while (pos > 0) {
            --pos;
            if (++sigma[pos] < codomain) break;
            sigma[pos] = 0;
            if (pos == 0) return false;
        }
    }
}

double surjection_space(std::size_t domain, std::size_t codomain) {
    double total = 1.0;
    for (std::size_t i = 0; i < domain; ++i) total *= static_cast<double>(codomain);
    return total;
}

long long max_coefficient(const SymbolicMatrix& M) {
    long long best = 0;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            for (const auto& t : M.at(i, j).terms()) best = std::max(best, t.second);
    return best;
}

}  // namespace

std::optional<EsseWitness> search_esse(const SymbolicMatrix& A, const SymbolicMatrix& B,
                                       const SearchBounds& bounds) {
    if (!A.is_square() || !B.is_square()) throw ShapeError("search_esse needs square matrices");
    if (A.degree() != 1 || B.degree() != 1)
        throw DegreeError("search_esse needs degree-1 matrices");
    if (!(A.alphabet() == B.alphabet())) return std::nullopt;
    const std::size_t n = A.rows();
    const std::size_t m = B.rows();

    double space = 0.0;
    if (m <= n) space += surjection_space(n, m);
    if (n <= m) space += surjection_space(m, n);
    if (space > 1e8) throw BudgetError("search space exceeds 10^8 candidates");

    std::optional<EsseWitness> found;

    // Orientation A = R*S, B = S*R: S is an m x n division matrix given by a
    // surjection sigma mapping columns of A onto rows of B; R is then pinned
    // entrywise by A, and only B = S*R remains to check.
    if (m <= n && m <= bounds.max_inner_dimension) {
        for_each_surjection(n, m, [&](const std::vector<std::size_t>& sigma) {
            SymbolicMatrix R(n, m, A.alphabet(), 1);
            std::vector<long long> rep(m, -1);
            for (std::size_t j = 0; j < n; ++j) {
                if (rep[sigma[j]] < 0) rep[sigma[j]] = static_cast<long long>(j);
            }
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    if (!(A.at(i, j) == A.at(i, static_cast<std::size_t>(rep[sigma[j]]))))
                        return false;  // columns inconsistent within a fiber
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < m; ++k)
                    R.set(i, k, A.at(i, static_cast<std::size_t>(rep[k])));
            if (max_coefficient(R) > bounds.max_coefficient) return false;
            IntegerMatrix S(m, n);
            for (std::size_t j = 0; j < n; ++j) S.set(sigma[j], j, 1);
            EsseWitness w{R, S, EsseOrientation::RsSr};
            if (verify_esse(A, B, w)) {
                found = std::move(w);
                return true;
            }
            return false;
        });
        if (found) return found;
    }

    // Orientation A = S*R, B = R*S: dual, with R pinned by B's columns.
    if (n <= m && n <= bounds.max_inner_dimension) {
        for_each_surjection(m, n, [&](const std::vector<std::size_t>& sigma) {
            SymbolicMatrix R(m, n, B.alphabet(), 1);
            std::vector<long long> rep(n, -1);
            for (std::size_t j = 0; j < m; ++j)
                if (rep[sigma[j]] < 0) rep[sigma[j]] = static_cast<long long>(j);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t i = 0; i < m; ++i)
                    if (!(B.at(i, j) == B.at(i, static_cast<std::size_t>(rep[sigma[j]]))))
                        return false;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    R.set(i, k, B.at(i, static_cast<std::size_t>(rep[k])));
            if (max_coefficient(R) > bounds.max_coefficient) return false;
            IntegerMatrix S(n, m);
            for (std::size_t j = 0; j < m; ++j) S.set(sigma[j], j, 1);
            EsseWitness w{R, S, EsseOrientation::SrRs};
            if (verify_esse(A, B, w)) {
                found = std::move(w);
                return true;
            }
            return false;
        });
    }
    return found;
}

WilliamsFactorization williams_factorize(const SymbolicMatrix& M) {
    if (M.is_degenerate()) throw DegeneracyError("Williams factorization needs a non-degenerate matrix");
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M.at(i, j).is_empty()) entries.emplace_back(i, j);
    const std::size_t e = entries.size();
    IntegerMatrix U(M.rows(), e);
    IntegerMatrix V(e, M.cols());
    SymbolicMatrix D(e, e, M.alphabet(), M.degree());
    for (std::size_t idx = 0; idx < e; ++idx) {
        auto [i, j] = entries[idx];
        U.set(i, idx, 1);
        V.set(idx, j, 1);
        D.set(idx, idx, M.at(i, j));
    }
    WilliamsFactorization wf{U, D, V, entries};
    if (!(mixed_mul(U, mixed_mul(V, D, Side::Right), Side::Left) == M))
        throw SoficError("internal: Williams factorization failed to verify");
    return wf;
}

IntegerWilliamsFactorization williams_factorize_integral(const IntegerMatrix& M) {
    if (!M.is_non_degenerate())
        throw DegeneracyError("Williams factorization needs a non-degenerate matrix");
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (M.at(i, j) != 0) entries.emplace_back(i, j);
    const std::size_t e = entries.size();
    IntegerMatrix U(M.rows(), e);
    IntegerMatrix V(e, M.cols());
    IntegerMatrix D(e, e);
    for (std::size_t idx = 0; idx < e; ++idx) {
        auto [i, j] = entries[idx];
        U.set(i, idx, 1);
        V.set(idx, j, 1);
        D.set(idx, idx, M.at(i, j));
    }
    IntegerWilliamsFactorization wf{U, D, V, entries};
    if (!(U * D * V == M)) throw SoficError("internal: integral Williams factorization failed");
    return wf;
}

SseDrResult sse_dr_construct(const SymbolicMatrix& A, const SymbolicMatrix& B,
                             const EsseWitness& w) {
    if (w.orientation != EsseOrientation::RsSr)
        throw std::invalid_argument("sse_dr_construct needs a witness with A = R*S, B = S*R");
    if (!verify_esse(A, B, w)) throw std::invalid_argument("ESSE witness does not verify");
    if (A.is_degenerate() || B.is_degenerate())
        throw DegeneracyError("sse_dr_construct needs non-degenerate endpoint matrices");
    if (w.R.is_degenerate() || !w.S.is_non_degenerate())
        throw DegeneracyError("sse_dr_construct needs non-degenerate factors");

    const WilliamsFactorization fr = williams_factorize(w.R);
    const IntegerWilliamsFactorization fs = williams_factorize_integral(w.S);

    const IntegerMatrix inner = fs.U * fs.D * fs.V;      // recovers S
    const IntegerMatrix X = fr.V * inner * fr.U;         // V_R U_S D_S V_S U_R
    const SymbolicMatrix& D = fr.D;
    const SymbolicMatrix C1 = mixed_mul(X, D, Side::Right);  // D*X
    const SymbolicMatrix C2 = mixed_mul(X, D, Side::Left);   // X*D

    // Row splitting of A: A = U_R * X1 and C1 = X1 * U_R.
    const SymbolicMatrix X1 = mixed_mul(fr.V * inner, D, Side::Right);
    SplitWitness row{SplitKind::Row, SplitDirection::Out, X1, fr.U, A, C1};
    // Column splitting of B: B = Y * V_R and C2 = V_R * Y.
    const SymbolicMatrix Y = mixed_mul(inner * fr.U, D, Side::Left);
    SplitWitness col{SplitKind::Column, SplitDirection::In, Y, fr.V, B, C2};

    if (!verify_split_witness(row) || !verify_split_witness(col))
        throw SoficError("internal: SSE-DR split witnesses failed to verify");
    DiagonalRefactorization refac{D, X, C1, C2};
    return SseDrResult{C1, C2, refac, row, col};
}

namespace {

std::vector<RationalMatrix> label_matrices_rational(const SymbolicMatrix& M) {
    std::vector<RationalMatrix> out;
    out.reserve(M.alphabet().size());
    for (const IntegerMatrix& m : decompose_full(M)) out.push_back(RationalMatrix::from_integer(m));
    return out;
}

/// Least bijection beta with lhs[i] == rhs[beta(i)] for all i, if any.
std::optional<LabelBijection> rational_equal_mod_bijection(
    const std::vector<RationalMatrix>& lhs, const std::vector<RationalMatrix>& rhs) {
    const std::size_t k = lhs.size();
    if (rhs.size() != k) return std::nullopt;
    std::vector<std::vector<std::uint32_t>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (lhs[i] == rhs[j]) candidates[i].push_back(static_cast<std::uint32_t>(j));
    std::vector<std::uint32_t> image(k, 0);
    std::vector<bool> used(k, false);
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) return true;
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

}  // namespace

std::optional<LabelBijection> matrix_conjugacy_bijection(const SymbolicMatrix& A,
                                                         const SymbolicMatrix& B,
                                                         const RationalMatrix& W) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
        throw ShapeError("conjugacy check needs square matrices of one size");
    if (W.rows() != A.rows() || W.cols() != A.rows())
        throw ShapeError("conjugating matrix has the wrong shape");
    if (A.degree() != 1 || B.degree() != 1) throw DegreeError("conjugacy check needs degree 1");
    if (!W.is_invertible()) return std::nullopt;
    std::vector<RationalMatrix> lhs, rhs;
    for (const RationalMatrix& m : label_matrices_rational(A)) lhs.push_back(m * W);
    for (const RationalMatrix& m : label_matrices_rational(B)) rhs.push_back(W * m);
    return rational_equal_mod_bijection(lhs, rhs);
}

bool matrix_conjugate_check(const SymbolicMatrix& A, const SymbolicMatrix& B,
                            const RationalMatrix& W) {
    return matrix_conjugacy_bijection(A, B, W).has_value();
}

MainThmCertificate main_thm_construct(const Alphabet& alphabet,
                                      const std::vector<IntegerMatrix>& per_label_c,
                                      const std::vector<long long>& e_diag) {
    if (per_label_c.size() != alphabet.size())
        throw ShapeError("one C matrix per alphabet label is required");
    const std::size_t n = per_label_c.front().rows();
    for (const IntegerMatrix& c : per_label_c)
        if (c.rows() != n || c.cols() != n) throw ShapeError("C matrices must be square, one size");
    const std::size_t k = e_diag.size();
    if (k == 0 || k > n) throw FormError("D = diag(E, I) needs 1 <= k <= n");
    for (long long e : e_diag) {
        if (e == 0) throw SingularError("E must be invertible over the rationals");
        if (e < 0) throw FormError("E entries must be positive to keep sub-matrices nonnegative");
    }
    const std::size_t N = n + k;
    auto d_entry = [&](std::size_t r) { return r < k ? e_diag[r] : 1; };

    std::map<Label, IntegerMatrix> a_parts, b_parts, x_parts, y_parts;
    for (std::size_t id = 0; id < alphabet.size(); ++id) {
        const IntegerMatrix& c = per_label_c[id];
        IntegerMatrix a(n, n), b(n, n), x(N, n), y(n, N);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a.set(i, j, d_entry(i) * c.at(i, j));
                b.set(i, j, c.at(i, j) * d_entry(j));
            }
        // X stacks [C_top; (E - I) C_top; C_bottom].
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                x.set(i, j, c.at(i, j));
                x.set(k + i, j, (e_diag[i] - 1) * c.at(i, j));
            }
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x.set(k + i, j, c.at(i, j));
        // Y lays out [C_left, C_left (E - I), C_right].
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                y.set(i, j, c.at(i, j));
                y.set(i, k + j, c.at(i, j) * (e_diag[j] - 1));
            }
            for (std::size_t j = k; j < n; ++j) y.set(i, k + j, c.at(i, j));
        }
        Label l{static_cast<std::uint32_t>(id)};
        a_parts.emplace(l, std::move(a));
        b_parts.emplace(l, std::move(b));
        x_parts.emplace(l, std::move(x));
        y_parts.emplace(l, std::move(y));
    }

    IntegerMatrix U(n, N);
    for (std::size_t r = 0; r < k; ++r) {
        U.set(r, r, 1);
        U.set(r, k + r, 1);
    }
    for (std::size_t r = k; r < n; ++r) U.set(r, k + r, 1);
    IntegerMatrix V(N, n);
    for (std::size_t r = 0; r < k; ++r) {
        V.set(r, r, 1);
        V.set(k + r, r, 1);
    }
    for (std::size_t r = 2 * k; r < N; ++r) V.set(r, r - k, 1);

    RationalMatrix W(N, N);
    for (std::size_t r = 0; r < k; ++r) {
        W.set(r, k + r, Rational(1));
        W.set(k + r, r, Rational(1));
        W.set(k + r, k + r, Rational(static_cast<long>(e_diag[r] - 2)));
    }
    for (std::size_t r = 2 * k; r < N; ++r) W.set(r, r, Rational(1));

    SymbolicMatrix A = recompose(alphabet, a_parts, n, n);
    SymbolicMatrix B = recompose(alphabet, b_parts, n, n);
    SymbolicMatrix X = recompose(alphabet, x_parts, N, n);
    SymbolicMatrix Y = recompose(alphabet, y_parts, n, N);
    SymbolicMatrix A_prime = mixed_mul(U, X, Side::Right);  // X*U
    SymbolicMatrix B_prime = mixed_mul(V, Y, Side::Left);   // V*Y

    auto bijection = matrix_conjugacy_bijection(A_prime, B_prime, W);
    if (!bijection) throw SoficError("internal: main construction conjugacy failed");

    MainThmCertificate cert{alphabet, n,       k, e_diag,  per_label_c, A, B, X, Y,
                            U,        V,       A_prime, B_prime, W, *bijection};
    if (!verify_main_thm_certificate(cert))
        throw SoficError("internal: main construction certificate failed to verify");
    return cert;
}

bool verify_main_thm_certificate(const MainThmCertificate& cert) {
    const std::size_t n = cert.n;
    const std::size_t k = cert.k;
    if (cert.e_diag.size() != k || k == 0 || k > n) return false;
    for (long long e : cert.e_diag)
        if (e <= 0) return false;
    if (cert.c.size() != cert.alphabet.size()) return false;
    // Rebuild the inputs A_i = D C_i, B_i = C_i D from C and E.
    std::map<Label, IntegerMatrix> a_parts, b_parts;
    for (std::size_t id = 0; id < cert.c.size(); ++id) {
        const IntegerMatrix& c = cert.c[id];
        if (c.rows() != n || c.cols() != n) return false;
        IntegerMatrix a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long long di = i < k ? cert.e_diag[i] : 1;
                long long dj = j < k ? cert.e_diag[j] : 1;
                a.set(i, j, di * c.at(i, j));
                b.set(i, j, c.at(i, j) * dj);
            }
        a_parts.emplace(Label{static_cast<std::uint32_t>(id)}, std::move(a));
        b_parts.emplace(Label{static_cast<std::uint32_t>(id)}, std::move(b));
    }
    try {
        if (!(recompose(cert.alphabet, a_parts, n, n) == cert.A)) return false;
        if (!(recompose(cert.alphabet, b_parts, n, n) == cert.B)) return false;
        if (!cert.U.is_division_matrix() || !cert.V.is_amalgamation_matrix()) return false;
        if (!(mixed_mul(cert.U, cert.X, Side::Left) == cert.A)) return false;           // A = U X
        if (!(mixed_mul(cert.U, cert.X, Side::Right) == cert.A_prime)) return false;    // A' = X U
        if (!(mixed_mul(cert.V, cert.Y, Side::Right) == cert.B)) return false;          // B = Y V
        if (!(mixed_mul(cert.V, cert.Y, Side::Left) == cert.B_prime)) return false;     // B' = V Y
        if (!cert.W.is_invertible()) return false;
        std::vector<RationalMatrix> lhs, rhs;
        for (const IntegerMatrix& m : decompose_full(cert.A_prime))
            lhs.push_back(RationalMatrix::from_integer(m) * cert.W);
        for (const IntegerMatrix& m : decompose_full(cert.B_prime))
            rhs.push_back(cert.W * RationalMatrix::from_integer(m));
        if (cert.bijection.to.size() != lhs.size()) return false;
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (!(lhs[i] == rhs[cert.bijection(Label{(std::uint32_t)i}).id])) return false;
        return true;
    } catch (const SoficError&) {
        return false;
    }
}

std::optional<std::vector<Rational>> conj_lift_diagonal(
    const SymbolicMatrix& A, const SymbolicMatrix& B,
    const std::vector<std::vector<Rational>>& per_label_w) {
    if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
        throw ShapeError("conj_lift_diagonal needs square matrices of one size");
    const std::size_t n = A.rows();
    for (const auto& w : per_label_w) {
        if (w.size() != n) throw ShapeError("each W_i must be an n x n diagonal");
        for (const Rational& x : w)
            if (x == 0) throw SingularError("W_i must be invertible");
    }

    std::vector<std::vector<Rational>> candidates;
    auto push = [&](std::vector<Rational> cand) {
        for (const Rational& x : cand)
            if (x == 0) return;
        if (std::find(candidates.begin(), candidates.end(), cand) == candidates.end())
            candidates.push_back(std::move(cand));
    };

    if (!per_label_w.empty()) {
        // The proof's recipe: keep 1 where every W_i is 1, otherwise invert
        // the sum of the diagonal blocks; plus the uninverted and everywhere-
        // inverted readings of the same display.
        std::vector<Rational> recipe(n), sum_inv(n), inv_sum(n), product(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum(0), isum(0), prod(1);
            bool all_one = true;
            for (const auto& w : per_label_w) {
                sum += w[j];
                isum += 1 / w[j];
                prod *= w[j];
                all_one = all_one && w[j] == 1;
            }
            recipe[j] = all_one || sum == 0 ? Rational(1) : 1 / sum;
            sum_inv[j] = sum == 0 ? Rational(0) : 1 / sum;
            inv_sum[j] = isum;
            product[j] = prod;
        }
        push(recipe);
        push(sum_inv);
        push(inv_sum);
        push(product);
        for (const auto& w : per_label_w) push(w);
    }
    std::vector<Rational> ident(n, Rational(1));
    push(ident);

    for (const auto& cand : candidates) {
        RationalMatrix W = RationalMatrix::diagonal(cand);
        if (matrix_conjugate_check(A, B, W)) return cand;
    }
    return std::nullopt;
}

}  // namespace sofic
