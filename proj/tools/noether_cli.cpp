// noether: certify and classify primes for Noether's problem for C_p over Q.
//
// Exit codes: 0 success or definitive verdict, 1 usage/input error,
// 2 indeterminate floating comparison, 3 verification failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "noether/arith.hpp"
#include "noether/json_io.hpp"
#include "noether/noether.hpp"

namespace {

using namespace noether;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_indeterminate = 2;
constexpr int exit_verify_failed = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    std::string out;
    std::uint64_t budget = SearchParams{}.budget;
    unsigned bound = SearchParams{}.coeff_bound;
    std::uint64_t probe_budget = ClassifyParams{}.probe_budget;
    unsigned jobs = 1;
    bool no_timing = false;
};

ClassifyParams classify_params(GlobalOptions const& g)
{
    ClassifyParams c;
    c.search.budget = g.budget;
    c.search.coeff_bound = g.bound;
    c.probe_budget = g.probe_budget;
    return c;
}

Json search_inputs(GlobalOptions const& g)
{
    return Json{{"budget", g.budget}, {"bound", g.bound}, {"probe_budget", g.probe_budget}};
}

void require_prime(std::uint64_t p, std::uint64_t min = 2)
{
    if (!is_prime(p))
        throw UsageError(std::to_string(p) + " is not prime");
    if (p < min)
        throw UsageError("p must be at least " + std::to_string(min));
}

std::string fixed(double v, int digits)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

/// Writes to --out if given, otherwise stdout.
void emit(GlobalOptions const& g, std::string const& text)
{
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot open " + g.out + " for writing");
    f << text;
}

class Command {
public:
    Command(GlobalOptions const& g, std::string name, Json inputs)
        : g_(g), name_(std::move(name)), inputs_(std::move(inputs)),
          start_(std::chrono::steady_clock::now())
    {
    }

    /// Emits either the JSON envelope or the plain-text rendering.
    void finish(Json result, std::string const& text) const
    {
        if (!g_.json) {
            emit(g_, text);
            return;
        }
        auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        Json env{{"command", name_},
                 {"inputs", inputs_},
                 {"result", std::move(result)},
                 {"tool_version", tool_version},
                 {"timing_ms", g_.no_timing ? 0 : ms}};
        emit(g_, env.dump(2) + "\n");
    }

private:
    GlobalOptions const& g_;
    std::string name_;
    Json inputs_;
    std::chrono::steady_clock::time_point start_;
};

std::string render_bounds(BoundReport const& r)
{
    std::ostringstream os;
    os << "p = " << r.p << ", phi(p-1) = " << r.phi_val << "\n"
       << "  log(p)/phi(p-1)      = " << fixed(r.ratio, 6) << "\n"
       << "  general threshold    = " << fixed(r.threshold_general, 6) << "  (log(5)/12)\n"
       << "  mod-7 threshold      = " << fixed(r.threshold_mod7, 6) << "  (log(7/2)/8, "
       << (r.mod7_applicable ? "applies: p != 1 mod 7" : "does not apply: p = 1 mod 7") << ")\n"
       << "  envelope f(p)        = " << fixed(r.f_value, 6) << "\n"
       << "  elimination          = " << to_string(r.elimination) << "\n";
    return os.str();
}

std::string render_verdict_line(Verdict const& v)
{
    std::ostringstream os;
    os << std::setw(6) << v.p << "  " << std::left << std::setw(22) << to_string(v.status) << std::right;
    switch (v.status) {
    case VerdictStatus::InR_Certified:
        os << "  alpha = " << v.certificate->alpha.to_string() << ", N = " << v.certificate->norm_value.get_str();
        break;
    case VerdictStatus::InR_CertificatePending:
        os << "  no witness in " << v.search->total_candidates() << " candidates";
        break;
    case VerdictStatus::Eliminated:
        os << "  " << to_string(v.bounds->elimination) << ", ratio " << fixed(v.bounds->ratio, 5);
        break;
    case VerdictStatus::NotInR_Unresolved:
        os << "  ratio " << fixed(v.bounds->ratio, 5) << " above both thresholds";
        break;
    }
    return os.str();
}

std::string render_verdict(Verdict const& v)
{
    std::ostringstream os;
    os << "p = " << v.p << ": " << to_string(v.status) << "\n"
       << "  basis: " << v.rationale() << "\n";
    if (v.certificate)
        os << "  alpha = " << v.certificate->alpha.to_string() << " in Z[zeta_" << v.certificate->conductor
           << "], N(alpha) = " << v.certificate->norm_value.get_str() << "\n";
    if (v.bounds) {
        std::string b = render_bounds(*v.bounds);
        os << b.substr(b.find('\n') + 1);
    }
    if (v.search)
        os << "  search: dimension " << v.search->dimension << ", " << v.search->stages.size()
           << " stage(s), " << v.search->total_candidates() << " candidates\n";
    return os.str();
}

int cmd_classify(GlobalOptions const& g, std::uint64_t p)
{
    require_prime(p);
    Json inputs = search_inputs(g);
    inputs["p"] = p;
    Command cmd(g, "classify", inputs);
    Verdict const v = classify_prime(p, classify_params(g));
    cmd.finish(to_json(v), render_verdict(v));
    return exit_ok;
}

int cmd_certify(GlobalOptions const& g, std::uint64_t p)
{
    require_prime(p);
    SearchParams params;
    params.budget = g.budget;
    params.coeff_bound = g.bound;
    auto result = find_norm_certificate(p, params);
    if (!result.certificate) {
        std::cerr << "no element of norm +-" << p << " found within " << result.report.total_candidates()
                  << " candidates (" << result.report.stages.size()
                  << " stages); this does not prove that none exists\n";
        return exit_verify_failed;
    }
    emit(g, render_certificate(*result.certificate));
    return exit_ok;
}

int cmd_verify(GlobalOptions const& g, std::string const& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    NormCertificate cert;
    try {
        cert = parse_certificate(buf.str());
    } catch (JsonFormatError const& e) {
        throw UsageError(path + ": " + e.what());
    }
    Command cmd(g, "verify", Json{{"path", path}});
    bool const ok = verify_certificate(cert);
    Json result{{"p", cert.p}, {"conductor", cert.conductor}, {"valid", ok}};
    std::string text = ok ? "valid: N(alpha) = " + cert.norm_value.get_str() + " = +-" + std::to_string(cert.p)
                                + ", alpha lies in a prime ideal above " + std::to_string(cert.p) + "\n"
                          : "INVALID certificate for p = " + std::to_string(cert.p) + "\n";
    cmd.finish(result, text);
    return ok ? exit_ok : exit_verify_failed;
}

int cmd_scan(GlobalOptions const& g, std::uint64_t max_p)
{
    if (max_p < 2)
        throw UsageError("--max must be at least 2");
    Json inputs = search_inputs(g);
    inputs["max"] = max_p;
    Command cmd(g, "scan", inputs);
    auto const verdicts = scan(max_p, classify_params(g), g.jobs);
    auto const summary = summarize(verdicts);

    Json arr = Json::array();
    std::ostringstream text;
    for (auto const& v : verdicts) {
        arr.push_back(to_json(v));
        text << render_verdict_line(v) << "\n";
    }
    text << "summary: InR " << summary.in_r << ", InR_Pending " << summary.pending << ", Eliminated "
         << summary.eliminated << ", Unresolved " << summary.unresolved << "\n";
    cmd.finish(Json{{"verdicts", std::move(arr)}, {"summary", to_json(summary)}}, text.str());
    return exit_ok;
}

int cmd_bounds(GlobalOptions const& g, std::uint64_t p)
{
    require_prime(p, 5);
    Command cmd(g, "bounds", Json{{"p", p}});
    BoundReport const r = eliminate_prime(p);
    cmd.finish(to_json(r), render_bounds(r));
    return exit_ok;
}

int cmd_corollary(GlobalOptions const& g, std::uint64_t n)
{
    if (n == 0)
        throw UsageError("n must be positive");
    Command cmd(g, "corollary", Json{{"n", n}});
    auto const obstruction = rational_cyclic_obstruction(n);
    Json result{{"n", n}, {"rational", !obstruction}};
    std::string text = obstruction ? "false" : "true";
    if (obstruction) {
        result["violating_prime"] = obstruction->prime;
        result["exponent"] = obstruction->exponent;
        result["allowed_exponent"] = obstruction->allowed;
        text += " (" + std::to_string(obstruction->prime) + "^" + std::to_string(obstruction->exponent)
                + " divides n; allowed exponent " + std::to_string(obstruction->allowed) + ")";
    }
    cmd.finish(result, text + "\n");
    return exit_ok;
}

int cmd_lemma(GlobalOptions const& g, std::uint64_t p, unsigned r)
{
    require_prime(p, 5);
    if (r == 0)
        throw UsageError("r must be positive");
    Command cmd(g, "lemma", Json{{"p", p}, {"r", r}});
    LemmaResult const res = lenstra_lemma_check(p, r);
    std::ostringstream text;
    if (!res.applicable) {
        text << "NotApplicable: (" << p << ", " << r << ") is in neither case (p >= 11, r >= 2) nor (p >= 5, r >= 3)\n";
    } else {
        auto const& rep = res.report;
        text << "NoNormElement: n = " << p << "^" << r << " = " << rep.n << ", phi(n) = " << rep.phi_n
             << ", phi(phi(n)) = " << rep.phi_phi_n << "\n";
        for (auto const& c : rep.cases)
            text << "  case (" << (c.which == LemmaCase::I ? "i" : "ii") << "): phi(phi(n)) = " << rep.phi_phi_n
                 << " >= " << c.structural_bound << "; " << fixed(rep.ratio, 5) << " <= " << fixed(c.intermediate, 5)
                 << " <= " << fixed(c.extremal, 5) << " < " << fixed(rep.threshold, 6) << "\n";
        text << "  chain: " << fixed(rep.ratio, 5) << " < " << fixed(rep.threshold, 6) << "\n";
    }
    cmd.finish(to_json(res), text.str());
    return exit_ok;
}

int cmd_cutoff(GlobalOptions const& g)
{
    Command cmd(g, "cutoff", Json::object());
    CutoffReport const r = cutoff_certificate();
    std::ostringstream text;
    text << "(a) log(p)/phi(p-1) < f(p) for all " << r.envelope.primes_checked << " primes 5 <= p <= "
         << r.envelope.limit << "; tightest at p = " << r.envelope.tightest_prime << " (quotient "
         << fixed(r.envelope.tightest_quotient, 6) << ")\n"
         << "(b) f strictly decreasing on the integers " << r.grid_lo << ".." << r.grid_hi << ": "
         << (r.decreasing ? "yes" : "no") << "\n"
         << "(c) f(173) = " << fixed(r.f_at_cutoff, 6) << " < log(5)/12 = " << fixed(r.threshold, 6)
         << ", margin " << std::scientific << std::setprecision(3) << r.margin << "\n";
    cmd.finish(to_json(r), text.str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Norm certificates and analytic bounds for Noether's problem for C_p over Q"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(tool_version));

    GlobalOptions g;
    app.add_flag("--json", g.json, "Emit a JSON envelope instead of text");
    app.add_option("--out", g.out, "Write output to FILE instead of stdout");
    app.add_option("--budget", g.budget, "Candidates per search stage")->check(CLI::PositiveNumber);
    app.add_option("--bound", g.bound, "Coefficient bound for enumeration")->check(CLI::Range(1u, 10u));
    app.add_option("--probe-budget", g.probe_budget, "Search budget for primes outside R left open by the bounds");
    app.add_option("--jobs", g.jobs, "Worker threads for scan (0 = all cores)");
    app.add_flag("--no-timing", g.no_timing, "Report timing_ms as 0 for reproducible output");

    std::uint64_t p = 0, n = 0, max_p = 173;
    unsigned r = 0;
    std::string path;

    auto* classify = app.add_subcommand("classify", "Classify one prime");
    classify->add_option("p", p, "Prime")->required();
    auto* certify = app.add_subcommand("certify", "Search for and print a norm certificate");
    certify->add_option("p", p, "Prime")->required();
    auto* verify = app.add_subcommand("verify", "Re-check a certificate file from scratch");
    verify->add_option("path", path, "Certificate JSON")->required();
    auto* scan_cmd = app.add_subcommand("scan", "Classify every prime up to --max");
    scan_cmd->add_option("--max", max_p, "Largest prime to consider")->capture_default_str();
    auto* bounds = app.add_subcommand("bounds", "Analytic bound report for one prime");
    bounds->add_option("p", p, "Prime >= 5")->required();
    auto* corollary = app.add_subcommand("corollary", "Is the C_n invariant field rational over Q?");
    corollary->add_option("n", n, "Group order")->required();
    auto* lemma = app.add_subcommand("lemma", "Check the no-norm-element inequalities for n = p^r");
    lemma->add_option("p", p, "Prime >= 5")->required();
    lemma->add_option("r", r, "Exponent")->required();
    auto* cutoff = app.add_subcommand("cutoff", "Verify the facts behind the p < 173 cutoff");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForVersion const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*classify)
            return cmd_classify(g, p);
        if (*certify)
            return cmd_certify(g, p);
        if (*verify)
            return cmd_verify(g, path);
        if (*scan_cmd)
            return cmd_scan(g, max_p);
        if (*bounds)
            return cmd_bounds(g, p);
        if (*corollary)
            return cmd_corollary(g, n);
        if (*lemma)
            return cmd_lemma(g, p, r);
        if (*cutoff)
            return cmd_cutoff(g);
    } catch (UsageError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (IndeterminateComparison const& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return exit_indeterminate;
    } catch (CutoffFailure const& e) {
        std::cerr << "cutoff check failed: " << e.what() << "\n";
        return exit_verify_failed;
    } catch (std::invalid_argument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
