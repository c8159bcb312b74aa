#include "sofic/certificates.hpp"

#include "sofic/errors.hpp"
#include "sofic/text_format.hpp"

namespace sofic {

using nlohmann::json;

namespace {

json bijection_to_json(const Alphabet& from, const Alphabet& to, const LabelBijection& b) {
    json out = json::object();
    for (std::size_t i = 0; i < b.to.size(); ++i)
        out[from.name(Label{static_cast<std::uint32_t>(i)})] = to.name(b.to[i]);
    return out;
}

LabelBijection bijection_from_json(const Alphabet& from, const Alphabet& to, const json& j) {
    LabelBijection b;
    b.to.resize(from.size());
    for (const auto& [key, value] : j.items()) {
        auto src = from.find(key);
        auto dst = to.find(value.get<std::string>());
        if (!src || !dst) throw SoficError("certificate bijection names unknown labels");
        b.to[src->id] = *dst;
    }
    return b;
}

json rational_matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

RationalMatrix rational_matrix_from_json(const json& j) {
    RationalMatrix m(j.size(), j.at(0).size());
    for (std::size_t i = 0; i < j.size(); ++i)
        for (std::size_t c = 0; c < j.at(i).size(); ++c) {
            Rational q(j.at(i).at(c).get<std::string>());
            q.canonicalize();
            m.set(i, c, q);
        }
    return m;
}

std::string kind_to_string(SplitKind k) { return k == SplitKind::Row ? "row" : "column"; }
std::string direction_to_string(SplitDirection d) { return d == SplitDirection::In ? "in" : "out"; }

SplitKind kind_from_string(const std::string& s) {
    if (s == "row") return SplitKind::Row;
    if (s == "column") return SplitKind::Column;
    throw SoficError("unknown split kind '" + s + "'");
}

SplitDirection direction_from_string(const std::string& s) {
    if (s == "in") return SplitDirection::In;
    if (s == "out") return SplitDirection::Out;
    throw SoficError("unknown split direction '" + s + "'");
}

json esse_witness_fields(const EsseWitness& w) {
    return json{{"R", serialize_matrix(w.R)},
                {"S", serialize_integer_matrix(w.S)},
                {"orientation", w.orientation == EsseOrientation::RsSr ? "rs-sr" : "sr-rs"}};
}

EsseWitness esse_witness_from_fields(const json& j) {
    const std::string orient = j.at("orientation").get<std::string>();
    if (orient != "rs-sr" && orient != "sr-rs")
        throw SoficError("unknown ESSE orientation '" + orient + "'");
    return EsseWitness{parse_matrix(j.at("R").get<std::string>()),
                       parse_integer_matrix(j.at("S").get<std::string>()),
                       orient == "rs-sr" ? EsseOrientation::RsSr : EsseOrientation::SrRs};
}

}  // namespace

json split_certificate(const SplitWitness& w) {
    return json{{"kind", "split"},
                {"matrices",
                 {{"A", serialize_matrix(w.A)},
                  {"B", serialize_matrix(w.B)},
                  {"R", serialize_matrix(w.R)},
                  {"S", serialize_integer_matrix(w.S)}}},
                {"metadata",
                 {{"split_kind", kind_to_string(w.kind)},
                  {"direction", direction_to_string(w.direction)}}}};
}

SplitWitness split_witness_from_certificate(const json& j) {
    const json& m = j.at("matrices");
    const json& meta = j.at("metadata");
    return SplitWitness{kind_from_string(meta.at("split_kind").get<std::string>()),
                        direction_from_string(meta.at("direction").get<std::string>()),
                        parse_matrix(m.at("R").get<std::string>()),
                        parse_integer_matrix(m.at("S").get<std::string>()),
                        parse_matrix(m.at("A").get<std::string>()),
                        parse_matrix(m.at("B").get<std::string>())};
}

json esse_certificate(const SymbolicMatrix& A, const SymbolicMatrix& B, const EsseWitness& w) {
    json fields = esse_witness_fields(w);
    return json{{"kind", "esse"},
                {"matrices",
                 {{"A", serialize_matrix(A)},
                  {"B", serialize_matrix(B)},
                  {"R", fields.at("R")},
                  {"S", fields.at("S")}}},
                {"metadata", {{"orientation", fields.at("orientation")}}}};
}

json sse_chain_certificate(const SseChain& chain) {
    json mats = json::object();
    for (std::size_t i = 0; i < chain.matrices.size(); ++i)
        mats["m" + std::to_string(i)] = serialize_matrix(chain.matrices[i]);
    json links = json::array();
    for (const EsseWitness& w : chain.links) links.push_back(esse_witness_fields(w));
    return json{{"kind", "sse-chain"},
                {"matrices", mats},
                {"metadata", {{"lag", chain.lag()}, {"links", links}}}};
}

namespace {

SseChain sse_chain_from_certificate(const json& j) {
    const json& meta = j.at("metadata");
    SseChain chain;
    const json& mats = j.at("matrices");
    for (std::size_t i = 0; i < mats.size(); ++i)
        chain.matrices.push_back(parse_matrix(mats.at("m" + std::to_string(i)).get<std::string>()));
    for (const json& link : meta.at("links")) chain.links.push_back(esse_witness_from_fields(link));
    return chain;
}

}  // namespace

json williams_certificate(const SymbolicMatrix& M, const WilliamsFactorization& wf) {
    json entries = json::array();
    for (const auto& [i, j] : wf.entry_order) entries.push_back(json::array({i, j}));
    return json{{"kind", "williams"},
                {"matrices",
                 {{"M", serialize_matrix(M)},
                  {"U", serialize_integer_matrix(wf.U)},
                  {"D", serialize_matrix(wf.D)},
                  {"V", serialize_integer_matrix(wf.V)}}},
                {"metadata", {{"entries", entries}}}};
}

json mainthm_certificate(const MainThmCertificate& cert) {
    json mats = json::object();
    mats["A"] = serialize_matrix(cert.A);
    mats["B"] = serialize_matrix(cert.B);
    mats["X"] = serialize_matrix(cert.X);
    mats["Y"] = serialize_matrix(cert.Y);
    mats["A_prime"] = serialize_matrix(cert.A_prime);
    mats["B_prime"] = serialize_matrix(cert.B_prime);
    mats["U"] = serialize_integer_matrix(cert.U);
    mats["V"] = serialize_integer_matrix(cert.V);
    for (std::size_t id = 0; id < cert.c.size(); ++id)
        mats["C:" + cert.alphabet.name(Label{static_cast<std::uint32_t>(id)})] =
            serialize_integer_matrix(cert.c[id]);
    return json{{"kind", "mainthm"},
                {"matrices", mats},
                {"metadata",
                 {{"n", cert.n},
                  {"k", cert.k},
                  {"e", cert.e_diag},
                  {"W", rational_matrix_to_json(cert.W)},
                  {"bijection", bijection_to_json(cert.alphabet, cert.alphabet, cert.bijection)}}}};
}

MainThmCertificate mainthm_certificate_from_json(const json& j) {
    const json& mats = j.at("matrices");
    const json& meta = j.at("metadata");
    SymbolicMatrix A = parse_matrix(mats.at("A").get<std::string>());
    const Alphabet& alphabet = A.alphabet();
    std::vector<IntegerMatrix> c;
    for (std::size_t id = 0; id < alphabet.size(); ++id)
        c.push_back(parse_integer_matrix(
            mats.at("C:" + alphabet.name(Label{static_cast<std::uint32_t>(id)})).get<std::string>()));
    return MainThmCertificate{alphabet,
                              meta.at("n").get<std::size_t>(),
                              meta.at("k").get<std::size_t>(),
                              meta.at("e").get<std::vector<long long>>(),
                              std::move(c),
                              A,
                              parse_matrix(mats.at("B").get<std::string>()),
                              parse_matrix(mats.at("X").get<std::string>()),
                              parse_matrix(mats.at("Y").get<std::string>()),
                              parse_integer_matrix(mats.at("U").get<std::string>()),
                              parse_integer_matrix(mats.at("V").get<std::string>()),
                              parse_matrix(mats.at("A_prime").get<std::string>()),
                              parse_matrix(mats.at("B_prime").get<std::string>()),
                              rational_matrix_from_json(meta.at("W")),
                              bijection_from_json(alphabet, alphabet, meta.at("bijection"))};
}

json sse_dr_certificate(const SymbolicMatrix& A, const SymbolicMatrix& B, const EsseWitness& w,
                        const SseDrResult& r) {
    json fields = esse_witness_fields(w);
    return json{{"kind", "sse-dr"},
                {"matrices",
                 {{"A", serialize_matrix(A)},
                  {"B", serialize_matrix(B)},
                  {"R", fields.at("R")},
                  {"S", fields.at("S")},
                  {"C1", serialize_matrix(r.C1)},
                  {"C2", serialize_matrix(r.C2)},
                  {"D", serialize_matrix(r.refactorization.D)},
                  {"X", serialize_integer_matrix(r.refactorization.X)}}},
                {"metadata",
                 {{"orientation", fields.at("orientation")},
                  {"row_split", split_certificate(r.row_split)},
                  {"column_split", split_certificate(r.column_split)}}}};
}

json closing_report_certificate(const SymbolicMatrix& A, const ClosingReport& rep) {
    json delays = json::object();
    delays["right_closing"] = rep.right_closing;
    delays["right_delay"] = rep.right_delay ? json(*rep.right_delay) : json(nullptr);
    delays["left_closing"] = rep.left_closing;
    delays["left_delay"] = rep.left_delay ? json(*rep.left_delay) : json(nullptr);
    delays["bi_closing"] = rep.bi_closing;
    delays["heuristic_verdict"] = to_string(rep.heuristic_verdict);
    delays["heuristic_agrees"] = rep.heuristic_agrees;
    if (!rep.heuristic_note.empty()) delays["heuristic_note"] = rep.heuristic_note;
    return json{{"kind", "closing-report"},
                {"matrices", {{"A", serialize_matrix(A)}}},
                {"metadata", delays}};
}

std::string certificate_kind(const json& j) { return j.at("kind").get<std::string>(); }

bool reverify_certificate(const json& j) {
    const std::string kind = certificate_kind(j);
    try {
        if (kind == "split") return verify_split_witness(split_witness_from_certificate(j));
        if (kind == "esse") {
            SymbolicMatrix A = parse_matrix(j.at("matrices").at("A").get<std::string>());
            SymbolicMatrix B = parse_matrix(j.at("matrices").at("B").get<std::string>());
            json fields{{"R", j.at("matrices").at("R")},
                        {"S", j.at("matrices").at("S")},
                        {"orientation", j.at("metadata").at("orientation")}};
            return verify_esse(A, B, esse_witness_from_fields(fields));
        }
        if (kind == "sse-chain") {
            SseChain chain = sse_chain_from_certificate(j);
            if (chain.matrices.empty()) return false;
            return verify_sse_chain(chain.matrices.front(), chain.matrices.back(), chain);
        }
        if (kind == "williams") {
            SymbolicMatrix M = parse_matrix(j.at("matrices").at("M").get<std::string>());
            WilliamsFactorization wf = williams_factorize(M);
            return serialize_integer_matrix(wf.U) == j.at("matrices").at("U").get<std::string>() &&
                   serialize_matrix(wf.D) == j.at("matrices").at("D").get<std::string>() &&
                   serialize_integer_matrix(wf.V) == j.at("matrices").at("V").get<std::string>();
        }
        if (kind == "mainthm") return verify_main_thm_certificate(mainthm_certificate_from_json(j));
        if (kind == "sse-dr") {
            const json& m = j.at("matrices");
            SymbolicMatrix A = parse_matrix(m.at("A").get<std::string>());
            SymbolicMatrix B = parse_matrix(m.at("B").get<std::string>());
            json fields{{"R", m.at("R")},
                        {"S", m.at("S")},
                        {"orientation", j.at("metadata").at("orientation")}};
            EsseWitness w = esse_witness_from_fields(fields);
            SseDrResult r = sse_dr_construct(A, B, w);
            return serialize_matrix(r.C1) == m.at("C1").get<std::string>() &&
                   serialize_matrix(r.C2) == m.at("C2").get<std::string>() &&
                   serialize_matrix(r.refactorization.D) == m.at("D").get<std::string>() &&
                   serialize_integer_matrix(r.refactorization.X) == m.at("X").get<std::string>() &&
                   verify_split_witness(
                       split_witness_from_certificate(j.at("metadata").at("row_split"))) &&
                   verify_split_witness(
                       split_witness_from_certificate(j.at("metadata").at("column_split")));
        }
        if (kind == "closing-report") {
            SymbolicMatrix A = parse_matrix(j.at("matrices").at("A").get<std::string>());
            ClosingReport rep = bi_closing_report(A);
            const json& meta = j.at("metadata");
            json right = rep.right_delay ? json(*rep.right_delay) : json(nullptr);
            json left = rep.left_delay ? json(*rep.left_delay) : json(nullptr);
            return meta.at("right_closing").get<bool>() == rep.right_closing &&
                   meta.at("left_closing").get<bool>() == rep.left_closing &&
                   meta.at("right_delay") == right && meta.at("left_delay") == left &&
                   meta.at("bi_closing").get<bool>() == rep.bi_closing &&
                   meta.at("heuristic_verdict").get<std::string>() ==
                       to_string(rep.heuristic_verdict);
        }
    } catch (const SoficError&) {
        return false;
    } catch (const std::exception&) {
        return false;
    }
    throw SoficError("unknown certificate kind '" + kind + "'");
}

}  // namespace sofic
