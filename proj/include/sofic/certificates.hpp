#ifndef SOFIC_CERTIFICATES_HPP
#define SOFIC_CERTIFICATES_HPP

#include <string>

#include <json.hpp>

#include "sofic/closing.hpp"
#include "sofic/equivalence.hpp"
#include "sofic/splitting.hpp"

namespace sofic {

/// Certificates are JSON documents with a "kind" tag, a "matrices" object
/// holding every matrix in the text format, and a "metadata" object for
/// scalars (lag, delays, bijections, ...). Every certificate re-verifies on
/// load; see docs/certificate-schema.json.

nlohmann::json split_certificate(const SplitWitness& w);
SplitWitness split_witness_from_certificate(const nlohmann::json& j);

nlohmann::json esse_certificate(const SymbolicMatrix& A, const SymbolicMatrix& B,
                                const EsseWitness& w);
nlohmann::json sse_chain_certificate(const SseChain& chain);

nlohmann::json williams_certificate(const SymbolicMatrix& M, const WilliamsFactorization& wf);

nlohmann::json mainthm_certificate(const MainThmCertificate& cert);
MainThmCertificate mainthm_certificate_from_json(const nlohmann::json& j);

nlohmann::json sse_dr_certificate(const SymbolicMatrix& A, const SymbolicMatrix& B,
                                  const EsseWitness& w, const SseDrResult& r);

nlohmann::json closing_report_certificate(const SymbolicMatrix& A, const ClosingReport& rep);

std::string certificate_kind(const nlohmann::json& j);

/// Re-runs the verification appropriate to the certificate's kind.
bool reverify_certificate(const nlohmann::json& j);

}  // namespace sofic

#endif
