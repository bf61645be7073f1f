#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "noether/noether.hpp"

namespace noether {

inline constexpr char tool_version[] = "0.1.0";

using Json = nlohmann::json;

/// Malformed or schema-violating input; what() names the location.
class JsonFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Certificate file layout (keys sorted):
 *   {"alpha": ["-2", "1"], "conductor": 4, "norm": "5", "p": 5, "tool_version": "0.1.0"}
 * Big integers travel as decimal strings so no coefficient is ever
 * squeezed through a double. */
Json to_json(NormCertificate const& c);
NormCertificate certificate_from_json(Json const& j);

/// Parses text and decodes a certificate; JsonFormatError on any problem.
NormCertificate parse_certificate(std::string const& text);
/// Rendered certificate followed by a newline.
std::string render_certificate(NormCertificate const& c);

Json to_json(BoundReport const& r);
BoundReport bound_report_from_json(Json const& j);

Json to_json(SearchReport const& r);
SearchReport search_report_from_json(Json const& j);

Json to_json(Verdict const& v);
Verdict verdict_from_json(Json const& j);

Json to_json(ScanSummary const& s);

Json to_json(LemmaResult const& r);
LemmaResult lemma_result_from_json(Json const& j);

Json to_json(CutoffReport const& r);
CutoffReport cutoff_report_from_json(Json const& j);

}  // namespace noether
