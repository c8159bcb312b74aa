// soficalc: command-line front end for the sofic symbolic-matrix library.
//
// Subcommands: decompose, split, amalgamate, esse-verify, esse-search,
// sse-verify, williams, sse-dr, mainthm, conj-lift, closing, words, entropy,
// dot. Exit codes: 0 = property holds / construction succeeded, 1 = property
// fails / no witness, 2 = input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sofic/certificates.hpp"
#include "sofic/closing.hpp"
#include "sofic/dot_export.hpp"
#include "sofic/equivalence.hpp"
#include "sofic/errors.hpp"
#include "sofic/splitting.hpp"
#include "sofic/symbolic_matrix.hpp"
#include "sofic/text_format.hpp"

using nlohmann::json;
using namespace sofic;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw SoficError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SymbolicMatrix load_matrix(const std::string& path) { return parse_matrix(read_input(path)); }

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/' || path == "-") return path;
    const char* dir = std::getenv("SOFICALC_OUT_DIR");
    if (dir && *dir) return std::string(dir) + "/" + path;
    return path;
}

void write_output(const std::string& path, const std::string& content) {
    std::string resolved = resolve_out_path(path);
    if (resolved == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(resolved);
    if (!out) throw SoficError("cannot write '" + resolved + "'");
    out << content;
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        write_output(*out_path, content);
    else
        std::cout << content;
}

json load_certificate(const std::string& path) {
    return json::parse(read_input(path), nullptr, true, true);
}

SplitDirection parse_direction(const std::string& s) {
    if (s == "in") return SplitDirection::In;
    if (s == "out") return SplitDirection::Out;
    throw SoficError("direction must be 'in' or 'out'");
}

/// Partition spec: blocks separated by ';', edge tokens by ','. A token is
/// LABEL, LABEL@V, or LABEL@V#K with V the other endpoint (1-based) and K a
/// 1-based occurrence among parallel edges; unconstrained fields take the
/// first unused matching edge in canonical order.
EdgePartition parse_partition(const SymbolicMatrix& m, std::size_t vertex, SplitDirection dir,
                              const std::string& spec) {
    std::vector<EdgeRef> pool =
        dir == SplitDirection::In ? in_edges(m, vertex) : out_edges(m, vertex);
    std::vector<bool> used(pool.size(), false);
    EdgePartition p{vertex, dir, {}};
    std::istringstream blocks(spec);
    std::string block;
    while (std::getline(blocks, block, ';')) {
        std::vector<EdgeRef> edges;
        std::istringstream tokens(block);
        std::string token;
        while (std::getline(tokens, token, ',')) {
            std::string t;
            for (char c : token)
                if (c != ' ' && c != '\t') t += c;
            if (t.empty()) throw SoficError("empty edge token in partition spec");
            std::optional<std::size_t> other, occurrence;
            std::string label_name = t;
            if (auto hash = label_name.find('#'); hash != std::string::npos) {
                occurrence = std::stoul(label_name.substr(hash + 1));
                if (*occurrence == 0) throw SoficError("occurrences are 1-based");
                label_name = label_name.substr(0, hash);
            }
            if (auto at = label_name.find('@'); at != std::string::npos) {
                other = std::stoul(label_name.substr(at + 1));
                if (*other == 0) throw SoficError("vertices are 1-based");
                label_name = label_name.substr(0, at);
            }
            auto label = m.alphabet().find(label_name);
            if (!label) throw SoficError("unknown label '" + label_name + "'");
            bool found = false;
            for (std::size_t i = 0; i < pool.size() && !found; ++i) {
                if (used[i] || pool[i].label != *label) continue;
                std::size_t endpoint = dir == SplitDirection::In ? pool[i].source : pool[i].target;
                if (other && endpoint != *other - 1) continue;
                if (occurrence && pool[i].occurrence != *occurrence - 1) continue;
                used[i] = true;
                edges.push_back(pool[i]);
                found = true;
            }
            if (!found) throw SoficError("no unused edge matches token '" + t + "'");
        }
        p.blocks.push_back(std::move(edges));
    }
    return p;
}

int verify_certificate_file(const std::string& path, const std::string& expected_kind) {
    json cert = load_certificate(path);
    if (certificate_kind(cert) != expected_kind)
        throw SoficError("expected a " + expected_kind + " certificate, found '" +
                         certificate_kind(cert) + "'");
    bool ok = reverify_certificate(cert);
    std::cout << (ok ? "certificate verifies" : "certificate does NOT verify") << "\n";
    return ok ? 0 : 1;
}

json integer_matrix_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

std::string delay_text(const std::optional<unsigned>& d) {
    return d ? std::to_string(*d) : std::string("none");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic-matrix calculus for sofic shifts"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string matrix_path, matrix_path_b, out_path_raw, verify_path;
    std::optional<std::string> out_path;

    auto* cmd_decompose = app.add_subcommand("decompose", "split into integral sub-matrices");
    cmd_decompose->add_option("matrix", matrix_path, "matrix file or -")->required();
    cmd_decompose->add_option("--out", out_path_raw, "write the output here");

    auto* cmd_split = app.add_subcommand("split", "in-/out-split at a vertex");
    std::string direction_str = "in", partition_spec, merge_spec;
    std::size_t vertex = 1;
    cmd_split->add_option("matrix", matrix_path, "matrix file or -");
    cmd_split->add_option("--direction", direction_str, "in|out");
    cmd_split->add_option("--vertex", vertex, "vertex to split, 1-based");
    cmd_split->add_option("--partition", partition_spec, "blocks like 'a1,a2;a1,a4'");
    cmd_split->add_option("--out", out_path_raw, "write the split certificate here");
    cmd_split->add_option("--verify", verify_path, "re-verify a split certificate instead");

    auto* cmd_amalg = app.add_subcommand("amalgamate", "merge two vertices");
    cmd_amalg->add_option("matrix", matrix_path, "matrix file or -");
    cmd_amalg->add_option("--direction", direction_str, "in|out");
    cmd_amalg->add_option("--merge", merge_spec, "vertex pair 'u,v', 1-based");
    cmd_amalg->add_option("--out", out_path_raw, "write the split certificate here");
    cmd_amalg->add_option("--verify", verify_path, "re-verify a split certificate instead");

    auto* cmd_esse_verify = app.add_subcommand("esse-verify", "verify an ESSE certificate");
    cmd_esse_verify->add_option("certificate", verify_path, "certificate file")->required();

    auto* cmd_esse_search = app.add_subcommand("esse-search", "search for an ESSE witness");
    std::size_t max_dim = 4;
    long long max_coef = 4;
    std::size_t max_lag = 0;
    cmd_esse_search->add_option("matrixA", matrix_path, "matrix file or -")->required();
    cmd_esse_search->add_option("matrixB", matrix_path_b, "matrix file or -")->required();
    cmd_esse_search->add_option("--max-dim", max_dim, "max inner dimension");
    cmd_esse_search->add_option("--max-coef", max_coef, "max coefficient in R");
    cmd_esse_search->add_option("--max-lag", max_lag, "reserved; single links only");
    cmd_esse_search->add_option("--out", out_path_raw, "write the witness certificate here");

    auto* cmd_sse_verify = app.add_subcommand("sse-verify", "verify an SSE chain certificate");
    cmd_sse_verify->add_option("certificate", verify_path, "certificate file")->required();

    auto* cmd_williams = app.add_subcommand("williams", "Williams factorization M = U D V");
    cmd_williams->add_option("matrix", matrix_path, "matrix file or -");
    cmd_williams->add_option("--out", out_path_raw, "write the certificate here");
    cmd_williams->add_option("--verify", verify_path, "re-verify a williams certificate instead");

    auto* cmd_sse_dr = app.add_subcommand("sse-dr", "diagonal refactorization from an ESSE pair");
    std::string witness_path;
    cmd_sse_dr->add_option("matrixA", matrix_path, "matrix file or -");
    cmd_sse_dr->add_option("matrixB", matrix_path_b, "matrix file or -");
    cmd_sse_dr->add_option("--witness", witness_path, "ESSE certificate with A = R*S, B = S*R");
    cmd_sse_dr->add_option("--out", out_path_raw, "write the sse-dr certificate here");
    cmd_sse_dr->add_option("--verify", verify_path, "re-verify an sse-dr certificate instead");

    auto* cmd_mainthm =
        app.add_subcommand("mainthm", "fixed-diagonal conjugacy construction certificate");
    std::string e_spec, labels_spec;
    std::vector<std::string> c_paths;
    cmd_mainthm->add_option("--e", e_spec, "diagonal of E, e.g. '2,3'");
    cmd_mainthm->add_option("--labels", labels_spec, "label names, e.g. 'a,b'");
    cmd_mainthm->add_option("--c", c_paths, "integer matrix file per label, in label order");
    cmd_mainthm->add_option("--out", out_path_raw, "write the certificate here");
    cmd_mainthm->add_option("--verify", verify_path, "re-verify a mainthm certificate instead");

    auto* cmd_conj = app.add_subcommand("conj-lift", "lift per-label diagonal conjugators");
    std::vector<std::string> w_specs;
    cmd_conj->add_option("matrixA", matrix_path, "matrix file or -")->required();
    cmd_conj->add_option("matrixB", matrix_path_b, "matrix file or -")->required();
    cmd_conj->add_option("--w", w_specs, "diagonal of W_i as rationals '2,1/3' in label order");

    auto* cmd_closing = app.add_subcommand("closing", "right-/left-/bi-closing analysis");
    cmd_closing->add_option("matrix", matrix_path, "matrix file or -");
    cmd_closing->add_option("--out", out_path_raw, "write the closing-report certificate here");
    cmd_closing->add_option("--verify", verify_path,
                            "re-verify a closing-report certificate instead");

    auto* cmd_words = app.add_subcommand("words", "count labeled cycles of length n");
    unsigned cycle_len = 1;
    cmd_words->add_option("matrix", matrix_path, "matrix file or -")->required();
    cmd_words->add_option("-n", cycle_len, "cycle length")->required();

    auto* cmd_entropy = app.add_subcommand("entropy", "log spectral radius of the total matrix");
    cmd_entropy->add_option("matrix", matrix_path, "matrix file or -")->required();

    auto* cmd_dot = app.add_subcommand("dot", "graph-description export");
    cmd_dot->add_option("matrix", matrix_path, "matrix file or -")->required();
    cmd_dot->add_option("--out", out_path_raw, "write the export here");

    CLI11_PARSE(app, argc, argv);
    if (!out_path_raw.empty()) out_path = out_path_raw;

    try {
        if (*cmd_decompose) {
            auto m = load_matrix(matrix_path);
            auto parts = decompose(m);
            if (as_json) {
                json labels = json::object();
                for (const auto& [label, part] : parts)
                    labels[m.alphabet().name(label)] = integer_matrix_json(part);
                emit(out_path, json{{"kind", "decomposition"}, {"labels", labels}}.dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& [label, part] : parts)
                    text += "label " + m.alphabet().name(label) + ":\n" +
                            serialize_integer_matrix(part);
                emit(out_path, text);
            }
            return 0;
        }

        if (*cmd_split) {
            if (!verify_path.empty()) return verify_certificate_file(verify_path, "split");
            auto m = load_matrix(matrix_path);
            if (vertex == 0 || vertex > m.rows()) throw SoficError("vertex is 1-based");
            SplitDirection dir = parse_direction(direction_str);
            auto p = parse_partition(m, vertex - 1, dir, partition_spec);
            SplitResult r = dir == SplitDirection::In ? in_split(m, p) : out_split(m, p);
            json cert = split_certificate(r.witness);
            if (as_json)
                emit(out_path, cert.dump(2) + "\n");
            else {
                std::cout << serialize_matrix(r.matrix);
                if (out_path) write_output(*out_path, cert.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_amalg) {
            if (!verify_path.empty()) return verify_certificate_file(verify_path, "split");
            auto m = load_matrix(matrix_path);
            auto comma = merge_spec.find(',');
            if (comma == std::string::npos) throw SoficError("--merge expects 'u,v'");
            std::size_t u = std::stoul(merge_spec.substr(0, comma));
            std::size_t v = std::stoul(merge_spec.substr(comma + 1));
            if (u == 0 || v == 0) throw SoficError("vertices are 1-based");
            SplitResult r = amalgamate(m, u - 1, v - 1, parse_direction(direction_str));
            json cert = split_certificate(r.witness);
            if (as_json)
                emit(out_path, cert.dump(2) + "\n");
            else {
                std::cout << serialize_matrix(r.matrix);
                if (out_path) write_output(*out_path, cert.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_esse_verify) return verify_certificate_file(verify_path, "esse");
        if (*cmd_sse_verify) return verify_certificate_file(verify_path, "sse-chain");

        if (*cmd_esse_search) {
            auto a = load_matrix(matrix_path);
            auto b = load_matrix(matrix_path_b);
            auto witness = search_esse(a, b, SearchBounds{max_dim, max_coef, max_lag});
            if (!witness) {
                std::cout << (as_json ? json{{"kind", "esse"}, {"witness", nullptr}}.dump(2) + "\n"
                                      : "no witness\n");
                return 1;
            }
            json cert = esse_certificate(a, b, *witness);
            if (as_json)
                emit(out_path, cert.dump(2) + "\n");
            else {
                std::cout << "witness found\nR =\n"
                          << serialize_matrix(witness->R) << "S =\n"
                          << serialize_integer_matrix(witness->S);
                if (out_path) write_output(*out_path, cert.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_williams) {
            if (!verify_path.empty()) return verify_certificate_file(verify_path, "williams");
            auto m = load_matrix(matrix_path);
            auto wf = williams_factorize(m);
            json cert = williams_certificate(m, wf);
            if (as_json)
                emit(out_path, cert.dump(2) + "\n");
            else {
                std::cout << "U =\n"
                          << serialize_integer_matrix(wf.U) << "D =\n"
                          << serialize_matrix(wf.D) << "V =\n"
                          << serialize_integer_matrix(wf.V);
                if (out_path) write_output(*out_path, cert.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_sse_dr) {
            if (!verify_path.empty()) return verify_certificate_file(verify_path, "sse-dr");
            auto a = load_matrix(matrix_path);
            auto b = load_matrix(matrix_path_b);
            json wj = load_certificate(witness_path);
            if (certificate_kind(wj) != "esse")
                throw SoficError("--witness must be an esse certificate");
            const std::string orient = wj.at("metadata").at("orientation").get<std::string>();
            EsseWitness w{parse_matrix(wj.at("matrices").at("R").get<std::string>()),
                          parse_integer_matrix(wj.at("matrices").at("S").get<std::string>()),
                          orient == "rs-sr" ? EsseOrientation::RsSr : EsseOrientation::SrRs};
            auto r = sse_dr_construct(a, b, w);
            json cert = sse_dr_certificate(a, b, w, r);
            if (as_json)
                emit(out_path, cert.dump(2) + "\n");
            else {
                std::cout << "C1 =\n"
                          << serialize_matrix(r.C1) << "C2 =\n"
                          << serialize_matrix(r.C2) << "D =\n"
                          << serialize_matrix(r.refactorization.D) << "X =\n"
                          << serialize_integer_matrix(r.refactorization.X);
                if (out_path) write_output(*out_path, cert.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_mainthm) {
            if (!verify_path.empty()) return verify_certificate_file(verify_path, "mainthm");
            std::vector<std::string> names;
            {
                std::istringstream in(labels_spec);
                std::string name;
                while (std::getline(in, name, ',')) names.push_back(name);
            }
            Alphabet alphabet(names);
            if (c_paths.size() != alphabet.size()) throw SoficError("need one --c matrix per label");
            std::vector<IntegerMatrix> cs;
            for (const std::string& path : c_paths)
                cs.push_back(parse_integer_matrix(read_input(path)));
            std::vector<long long> e;
            {
                std::istringstream in(e_spec);
                std::string item;
                while (std::getline(in, item, ',')) e.push_back(std::stoll(item));
            }
            auto cert = main_thm_construct(alphabet, cs, e);
            json j = mainthm_certificate(cert);
            if (as_json)
                emit(out_path, j.dump(2) + "\n");
            else {
                std::cout << "A =\n"
                          << serialize_matrix(cert.A) << "B =\n"
                          << serialize_matrix(cert.B) << "A' =\n"
                          << serialize_matrix(cert.A_prime) << "B' =\n"
                          << serialize_matrix(cert.B_prime) << "conjugacy A'W = WB' verified\n";
                if (out_path) write_output(*out_path, j.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_conj) {
            auto a = load_matrix(matrix_path);
            auto b = load_matrix(matrix_path_b);
            std::vector<std::vector<Rational>> ws;
            for (const std::string& spec : w_specs) {
                std::vector<Rational> w;
                std::istringstream in(spec);
                std::string item;
                while (std::getline(in, item, ',')) {
                    Rational q(item);
                    q.canonicalize();
                    w.push_back(q);
                }
                ws.push_back(std::move(w));
            }
            auto lifted = conj_lift_diagonal(a, b, ws);
            if (!lifted) {
                std::cout << (as_json ? json{{"kind", "conj-lift"}, {"w", nullptr}}.dump(2) + "\n"
                                      : "no witness\n");
                return 1;
            }
            if (as_json) {
                json entries = json::array();
                for (const Rational& q : *lifted) entries.push_back(q.get_str());
                std::cout << json{{"kind", "conj-lift"}, {"w", entries}}.dump(2) << "\n";
            } else {
                std::cout << "W = diag(";
                for (std::size_t i = 0; i < lifted->size(); ++i)
                    std::cout << (i ? ", " : "") << (*lifted)[i].get_str();
                std::cout << ")\n";
            }
            return 0;
        }

        if (*cmd_closing) {
            if (!verify_path.empty())
                return verify_certificate_file(verify_path, "closing-report");
            auto m = load_matrix(matrix_path);
            auto rep = bi_closing_report(m);
            json cert = closing_report_certificate(m, rep);
            if (as_json)
                emit(out_path, cert.dump(2) + "\n");
            else {
                std::cout << "bi-closing: " << (rep.bi_closing ? "true" : "false")
                          << "; right delay " << delay_text(rep.right_delay) << "; left delay "
                          << delay_text(rep.left_delay) << "\n"
                          << "heuristic: " << to_string(rep.heuristic_verdict)
                          << (rep.heuristic_agrees ? " (agrees with pair-graph oracle)"
                                                   : " (WARNING: disagrees with oracle)")
                          << "\n";
                if (out_path) write_output(*out_path, cert.dump(2) + "\n");
            }
            return rep.bi_closing ? 0 : 1;
        }

        if (*cmd_words) {
            auto m = load_matrix(matrix_path);
            auto count = count_periodic_words(m, cycle_len);
            if (as_json)
                std::cout << json{{"kind", "periodic-word-count"}, {"n", cycle_len}, {"count", count}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << count << "\n";
            return 0;
        }

        if (*cmd_entropy) {
            auto m = load_matrix(matrix_path);
            double h = entropy(m);
            if (as_json) {
                json value = std::isinf(h) ? json(nullptr) : json(h);
                std::cout << json{{"kind", "entropy"}, {"value", value}}.dump(2) << "\n";
            } else {
                if (std::isinf(h)) {
                    std::cout << "-inf\n";
                } else {
                    std::cout.precision(15);
                    std::cout << h << "\n";
                }
            }
            return 0;
        }

        if (*cmd_dot) {
            auto m = load_matrix(matrix_path);
            std::string dot = to_dot(m);
            if (as_json)
                emit(out_path, json{{"kind", "dot"}, {"dot", dot}}.dump(2) + "\n");
            else
                emit(out_path, dot);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
