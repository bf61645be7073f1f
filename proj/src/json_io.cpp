#include "noether/json_io.hpp"

#include <string>

namespace noether {

namespace {

Json const& require(Json const& j, char const* key, std::string const& where)
{
    if (!j.is_object())
        throw JsonFormatError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw JsonFormatError(where + ": missing key \"" + key + "\"");
    return *it;
}

std::uint64_t as_u64(Json const& j, std::string const& where)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw JsonFormatError(where + ": expected a non-negative integer");
    return j.get<std::uint64_t>();
}

BigInt as_bigint(Json const& j, std::string const& where)
{
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<std::int64_t>()));
    if (!j.is_string())
        throw JsonFormatError(where + ": expected a decimal string");
    BigInt v;
    auto const& s = j.get_ref<std::string const&>();
    if (s.empty() || v.set_str(s, 10) != 0)
        throw JsonFormatError(where + ": \"" + s + "\" is not a decimal integer");
    return v;
}

// Wraps nlohmann's own type/range errors for the less hand-checked payloads.
template <class F>
auto decoding(char const* what, F&& f)
{
    try {
        return f();
    } catch (Json::exception const& e) {
        throw JsonFormatError(std::string(what) + ": " + e.what());
    }
}

Elimination elimination_from_string(std::string const& s)
{
    if (s == "General")
        return Elimination::General;
    if (s == "Mod7")
        return Elimination::Mod7;
    if (s == "None")
        return Elimination::None;
    throw JsonFormatError("unknown elimination \"" + s + "\"");
}

VerdictStatus status_from_string(std::string const& s)
{
    for (auto st : {VerdictStatus::InR_Certified, VerdictStatus::InR_CertificatePending,
                    VerdictStatus::Eliminated, VerdictStatus::NotInR_Unresolved})
        if (to_string(st) == s)
            return st;
    throw JsonFormatError("unknown verdict status \"" + s + "\"");
}

}  // namespace

Json to_json(NormCertificate const& c)
{
    Json alpha = Json::array();
    for (auto const& x : c.alpha.coeffs())
        alpha.push_back(x.get_str());
    return Json{{"p", c.p},
                {"conductor", c.conductor},
                {"alpha", std::move(alpha)},
                {"norm", c.norm_value.get_str()},
                {"tool_version", tool_version}};
}

NormCertificate certificate_from_json(Json const& j)
{
    NormCertificate c;
    c.p = as_u64(require(j, "p", "certificate"), "certificate.p");
    c.conductor = as_u64(require(j, "conductor", "certificate"), "certificate.conductor");
    if (c.conductor == 0)
        throw JsonFormatError("certificate.conductor: must be positive");
    Json const& alpha = require(j, "alpha", "certificate");
    if (!alpha.is_array())
        throw JsonFormatError("certificate.alpha: expected an array");
    std::vector<BigInt> coeffs;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        coeffs.push_back(as_bigint(alpha[i], "certificate.alpha[" + std::to_string(i) + "]"));
    try {
        c.alpha = CyclotomicInt(c.conductor, std::move(coeffs));
    } catch (std::invalid_argument const& e) {
        throw JsonFormatError(std::string("certificate.alpha: ") + e.what());
    }
    c.norm_value = as_bigint(require(j, "norm", "certificate"), "certificate.norm");
    return c;
}

NormCertificate parse_certificate(std::string const& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (Json::parse_error const& e) {
        throw JsonFormatError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": "
                              + e.what());
    }
    return certificate_from_json(j);
}

std::string render_certificate(NormCertificate const& c)
{
    return to_json(c).dump() + "\n";
}

Json to_json(BoundReport const& r)
{
    return Json{{"p", r.p},
                {"phi_val", r.phi_val},
                {"ratio", r.ratio},
                {"threshold_general", r.threshold_general},
                {"threshold_mod7", r.threshold_mod7},
                {"mod7_applicable", r.mod7_applicable},
                {"f_value", r.f_value},
                {"elimination", to_string(r.elimination)}};
}

BoundReport bound_report_from_json(Json const& j)
{
    return decoding("bound report", [&] {
        BoundReport r;
        r.p = j.at("p").get<std::uint64_t>();
        r.phi_val = j.at("phi_val").get<std::uint64_t>();
        r.ratio = j.at("ratio").get<double>();
        r.threshold_general = j.at("threshold_general").get<double>();
        r.threshold_mod7 = j.at("threshold_mod7").get<double>();
        r.mod7_applicable = j.at("mod7_applicable").get<bool>();
        r.f_value = j.at("f_value").get<double>();
        r.elimination = elimination_from_string(j.at("elimination").get<std::string>());
        return r;
    });
}

Json to_json(SearchReport const& r)
{
    Json stages = Json::array();
    for (auto const& s : r.stages)
        stages.push_back(Json{{"label", s.label},
                              {"root", s.root},
                              {"coeff_bound", s.coeff_bound},
                              {"candidates", s.candidates},
                              {"exact_checks", s.exact_checks},
                              {"found", s.found}});
    return Json{{"p", r.p},
                {"conductor", r.conductor},
                {"dimension", r.dimension},
                {"budget_per_stage", r.budget_per_stage},
                {"total_candidates", r.total_candidates()},
                {"stages", std::move(stages)}};
}

SearchReport search_report_from_json(Json const& j)
{
    return decoding("search report", [&] {
        SearchReport r;
        r.p = j.at("p").get<std::uint64_t>();
        r.conductor = j.at("conductor").get<std::uint64_t>();
        r.dimension = j.at("dimension").get<std::size_t>();
        r.budget_per_stage = j.at("budget_per_stage").get<std::uint64_t>();
        for (auto const& s : j.at("stages"))
            r.stages.push_back(SearchStage{s.at("label").get<std::string>(),
                                           s.at("root").get<std::uint64_t>(),
                                           s.at("coeff_bound").get<unsigned>(),
                                           s.at("candidates").get<std::uint64_t>(),
                                           s.at("exact_checks").get<std::uint64_t>(),
                                           s.at("found").get<bool>()});
        return r;
    });
}

Json to_json(Verdict const& v)
{
    Json j{{"p", v.p}, {"status", to_string(v.status)}, {"rationale", v.rationale()}};
    j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
    j["bounds"] = v.bounds ? to_json(*v.bounds) : Json(nullptr);
    j["search"] = v.search ? to_json(*v.search) : Json(nullptr);
    return j;
}

Verdict verdict_from_json(Json const& j)
{
    Verdict v = decoding("verdict", [&] {
        Verdict out;
        out.p = j.at("p").get<std::uint64_t>();
        out.status = status_from_string(j.at("status").get<std::string>());
        return out;
    });
    if (auto it = j.find("certificate"); it != j.end() && !it->is_null())
        v.certificate = certificate_from_json(*it);
    if (auto it = j.find("bounds"); it != j.end() && !it->is_null())
        v.bounds = bound_report_from_json(*it);
    if (auto it = j.find("search"); it != j.end() && !it->is_null())
        v.search = search_report_from_json(*it);
    return v;
}

Json to_json(ScanSummary const& s)
{
    return Json{{"InR", s.in_r},
                {"InR_Pending", s.pending},
                {"Eliminated", s.eliminated},
                {"Unresolved", s.unresolved}};
}

Json to_json(LemmaResult const& r)
{
    Json j{{"p", r.report.p},
           {"r", r.report.r},
           {"result", r.applicable ? "NoNormElement" : "NotApplicable"}};
    if (!r.applicable)
        return j;
    Json cases = Json::array();
    for (auto const& c : r.report.cases)
        cases.push_back(Json{{"case", c.which == LemmaCase::I ? "i" : "ii"},
                             {"structural_bound", c.structural_bound},
                             {"structural_holds", c.structural_holds},
                             {"intermediate", c.intermediate},
                             {"extremal", c.extremal}});
    j["n"] = r.report.n;
    j["phi_n"] = r.report.phi_n;
    j["phi_phi_n"] = r.report.phi_phi_n;
    j["ratio"] = r.report.ratio;
    j["threshold"] = r.report.threshold;
    j["cases"] = std::move(cases);
    return j;
}

LemmaResult lemma_result_from_json(Json const& j)
{
    return decoding("lemma result", [&] {
        LemmaResult r;
        r.report.p = j.at("p").get<std::uint64_t>();
        r.report.r = j.at("r").get<unsigned>();
        std::string const result = j.at("result").get<std::string>();
        if (result != "NoNormElement" && result != "NotApplicable")
            throw JsonFormatError("lemma result: unknown result \"" + result + "\"");
        r.applicable = result == "NoNormElement";
        r.report.threshold = general_threshold();
        if (!r.applicable)
            return r;
        r.report.n = j.at("n").get<std::uint64_t>();
        r.report.phi_n = j.at("phi_n").get<std::uint64_t>();
        r.report.phi_phi_n = j.at("phi_phi_n").get<std::uint64_t>();
        r.report.ratio = j.at("ratio").get<double>();
        r.report.threshold = j.at("threshold").get<double>();
        for (auto const& c : j.at("cases"))
            r.report.cases.push_back(LemmaCaseCheck{
                c.at("case").get<std::string>() == "i" ? LemmaCase::I : LemmaCase::II,
                c.at("structural_bound").get<std::uint64_t>(), c.at("structural_holds").get<bool>(),
                c.at("intermediate").get<double>(), c.at("extremal").get<double>()});
        return r;
    });
}

Json to_json(CutoffReport const& r)
{
    return Json{{"envelope",
                 {{"limit", r.envelope.limit},
                  {"primes_checked", r.envelope.primes_checked},
                  {"tightest_prime", r.envelope.tightest_prime},
                  {"tightest_quotient", r.envelope.tightest_quotient}}},
                {"decreasing", {{"lo", r.grid_lo}, {"hi", r.grid_hi}, {"holds", r.decreasing}}},
                {"cutoff",
                 {{"p", cutoff_prime},
                  {"f", r.f_at_cutoff},
                  {"threshold", r.threshold},
                  {"margin", r.margin}}}};
}

CutoffReport cutoff_report_from_json(Json const& j)
{
    return decoding("cutoff report", [&] {
        CutoffReport r;
        auto const& env = j.at("envelope");
        r.envelope.limit = env.at("limit").get<std::uint64_t>();
        r.envelope.primes_checked = env.at("primes_checked").get<std::uint64_t>();
        r.envelope.tightest_prime = env.at("tightest_prime").get<std::uint64_t>();
        r.envelope.tightest_quotient = env.at("tightest_quotient").get<double>();
        auto const& dec = j.at("decreasing");
        r.grid_lo = dec.at("lo").get<std::uint64_t>();
        r.grid_hi = dec.at("hi").get<std::uint64_t>();
        r.decreasing = dec.at("holds").get<bool>();
        auto const& cut = j.at("cutoff");
        r.f_at_cutoff = cut.at("f").get<double>();
        r.threshold = cut.at("threshold").get<double>();
        r.margin = cut.at("margin").get<double>();
        return r;
    });
}

}  // namespace noether
