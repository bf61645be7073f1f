#include "noether/noether.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "noether/arith.hpp"

namespace noether {

bool in_r_table(std::uint64_t p)
{
    return std::find(r_table.begin(), r_table.end(), p) != r_table.end();
}

std::string to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::InR_Certified:
        return "InR_Certified";
    case VerdictStatus::InR_CertificatePending:
        return "InR_CertificatePending";
    case VerdictStatus::Eliminated:
        return "Eliminated";
    case VerdictStatus::NotInR_Unresolved:
        break;
    }
    return "NotInR_Unresolved";
}

std::string Verdict::rationale() const
{
    std::ostringstream os;
    switch (status) {
    case VerdictStatus::InR_Certified:
        os << "R table / class number one; explicit element of norm " << certificate->norm_value.get_str()
           << " in Z[zeta_" << certificate->conductor << "]";
        break;
    case VerdictStatus::InR_CertificatePending:
        os << "R table / class number one; no witness within " << search->total_candidates()
           << " candidates (search budget exhausted, not a disproof)";
        break;
    case VerdictStatus::Eliminated:
        if (bounds->elimination == Elimination::General)
            os << "general threshold: log(p)/phi(p-1) < log(5)/12";
        else
            os << "mod-7 threshold: p != 1 (mod 7) and log(p)/phi(p-1) < log(7/2)/8";
        break;
    case VerdictStatus::NotInR_Unresolved:
        os << "not in the R table (class number of Q(zeta_(p-1)) exceeds one); analytic bounds "
              "inconclusive and the search "
              "is not a proof of nonexistence";
        break;
    }
    return os.str();
}

Verdict classify_prime(std::uint64_t p, ClassifyParams const& params)
{
    if (!is_prime(p))
        throw std::invalid_argument("classify_prime: " + std::to_string(p) + " is not prime");
    Verdict v;
    v.p = p;
    if (in_r_table(p)) {
        auto result = find_norm_certificate(p, params.search);
        v.search = std::move(result.report);
        if (result.certificate) {
            v.status = VerdictStatus::InR_Certified;
            v.certificate = std::move(result.certificate);
        } else {
            v.status = VerdictStatus::InR_CertificatePending;
        }
        return v;
    }

    // 2 and 3 are in R, so p >= 5 here
    v.bounds = eliminate_prime(p);
    if (v.bounds->elimination != Elimination::None) {
        v.status = VerdictStatus::Eliminated;
        return v;
    }
    SearchParams probe = params.search;
    probe.budget = params.probe_budget;
    probe.escalate = false;
    auto result = find_norm_certificate(p, probe);
    if (result.certificate)
        throw std::logic_error("classify_prime: found a norm-p element for p = " + std::to_string(p)
                               + " outside R");
    v.search = std::move(result.report);
    v.status = VerdictStatus::NotInR_Unresolved;
    return v;
}

std::vector<Verdict> scan(std::uint64_t max_p, ClassifyParams const& params, unsigned jobs)
{
    if (max_p < 2)
        throw std::invalid_argument("scan: max_p must be at least 2");
    auto const primes = primes_up_to(max_p);
    std::vector<Verdict> out(primes.size());
    std::vector<std::exception_ptr> errors(primes.size());
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, primes.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
            try {
                out[i] = classify_prime(primes[i], params);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    for (auto const& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

ScanSummary summarize(std::vector<Verdict> const& verdicts)
{
    ScanSummary s;
    for (auto const& v : verdicts) {
        switch (v.status) {
        case VerdictStatus::InR_Certified:
            ++s.in_r;
            break;
        case VerdictStatus::InR_CertificatePending:
            ++s.pending;
            break;
        case VerdictStatus::Eliminated:
            ++s.eliminated;
            break;
        case VerdictStatus::NotInR_Unresolved:
            ++s.unresolved;
            break;
        }
    }
    return s;
}

namespace {

// Allowed exponent per prime in the divisor 2^2 3^k 5^2 7^2 11 ... 71; 3 is unbounded.
unsigned allowed_exponent(std::uint64_t q)
{
    switch (q) {
    case 2:
    case 5:
    case 7:
        return 2;
    case 3:
        return ~0u;
    case 11: case 13: case 17: case 19: case 23: case 29: case 31:
    case 37: case 41: case 43: case 61: case 67: case 71:
        return 1;
    default:
        return 0;
    }
}

}  // namespace

std::optional<PrimePowerExcess> rational_cyclic_obstruction(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("is_rational_cyclic: n must be positive");
    for (auto const& f : factorize(n).factors) {
        unsigned const allowed = allowed_exponent(f.prime);
        if (f.exponent > allowed)
            return PrimePowerExcess{f.prime, f.exponent, allowed};
    }
    return std::nullopt;
}

bool is_rational_cyclic(std::uint64_t n)
{
    return !rational_cyclic_obstruction(n).has_value();
}

LemmaResult lenstra_lemma_check(std::uint64_t p, unsigned r)
{
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("lenstra_lemma_check: p must be a prime >= 5");
    if (r == 0)
        throw std::invalid_argument("lenstra_lemma_check: r must be positive");

    LemmaResult out;
    auto& rep = out.report;
    rep.p = p;
    rep.r = r;
    rep.threshold = general_threshold();

    bool const case_i = p >= 11 && r >= 2;
    bool const case_ii = r >= 3;
    if (!case_i && !case_ii)
        return out;
    out.applicable = true;

    std::uint64_t n = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (n > UINT64_MAX / p)
            throw std::invalid_argument("lenstra_lemma_check: p^r overflows 64 bits");
        n *= p;
    }
    rep.n = n;
    rep.phi_n = n / p * (p - 1);
    rep.phi_phi_n = euler_phi(rep.phi_n);
    double const logp = std::log(static_cast<double>(p));
    rep.ratio = logp / static_cast<double>(rep.phi_phi_n);

    auto add_case = [&](LemmaCase which, std::uint64_t bound, double extremal) {
        LemmaCaseCheck c{which, bound, rep.phi_phi_n >= bound, logp / static_cast<double>(bound), extremal};
        if (!c.structural_holds || !(rep.ratio <= c.intermediate) || !(c.intermediate <= c.extremal)
            || !(c.extremal < rep.threshold))
            throw std::logic_error("lenstra_lemma_check: inequality chain broken at p = "
                                   + std::to_string(p) + ", r = " + std::to_string(r));
        rep.cases.push_back(c);
    };
    if (case_i)
        add_case(LemmaCase::I, 2 * (p - 1), std::log(11.0) / 20.0);
    if (case_ii)
        add_case(LemmaCase::II, p * (p - 1), std::log(5.0) / 20.0);

    if (std::abs(rep.ratio - rep.threshold) < decision_margin)
        throw IndeterminateComparison("lenstra_lemma_check: ratio within margin of log(5)/12");
    if (!(rep.ratio < rep.threshold))
        throw std::logic_error("lenstra_lemma_check: ratio above threshold");
    return out;
}

}  // namespace noether
