#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noether/bounds.hpp"
#include "noether/certify.hpp"

namespace noether {

/* The seventeen primes p for which Q(zeta_(p-1)) has class number one.
 * These are exactly the p for which the invariant field of C_p over Q is
 * rational; the table is pinned, not computed. */
inline constexpr std::array<std::uint64_t, 17> r_table = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 67, 71};

bool in_r_table(std::uint64_t p);

enum class VerdictStatus {
    InR_Certified,           ///< in R, norm-p witness attached
    InR_CertificatePending,  ///< in R, search budget ran out
    Eliminated,              ///< not in R, ruled out by the analytic bounds
    NotInR_Unresolved,       ///< not in R, bounds inconclusive
};

std::string to_string(VerdictStatus s);

struct Verdict {
    std::uint64_t p = 0;
    VerdictStatus status = VerdictStatus::NotInR_Unresolved;
    std::optional<NormCertificate> certificate;
    std::optional<BoundReport> bounds;
    std::optional<SearchReport> search;

    /// Human-readable basis for the status, naming the deciding rule.
    std::string rationale() const;

    friend bool operator==(Verdict const&, Verdict const&) = default;
};

struct ClassifyParams {
    SearchParams search;
    /* Budget for the (necessarily unsuccessful) search run on primes outside
     * R that the bounds leave open.  Kept small since those lattices reach
     * dimension 80 and no witness can exist. */
    std::uint64_t probe_budget = 10'000;
};

Verdict classify_prime(std::uint64_t p, ClassifyParams const& params = {});

/// Verdicts for every prime <= max_p in increasing order; jobs = 0 picks hardware concurrency.
std::vector<Verdict> scan(std::uint64_t max_p, ClassifyParams const& params = {}, unsigned jobs = 1);

struct ScanSummary {
    std::size_t in_r = 0;
    std::size_t pending = 0;
    std::size_t eliminated = 0;
    std::size_t unresolved = 0;

    friend bool operator==(ScanSummary const&, ScanSummary const&) = default;
};

ScanSummary summarize(std::vector<Verdict> const& verdicts);

/* True iff n divides 2^2 3^k 5^2 7^2 11 13 17 19 23 29 31 37 41 43 61 67 71
 * for some k, i.e. the invariant field of C_n over Q is rational. */
bool is_rational_cyclic(std::uint64_t n);

struct PrimePowerExcess {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    unsigned allowed = 0;
};

/// The first prime power of n exceeding the allowed exponent, if any.
std::optional<PrimePowerExcess> rational_cyclic_obstruction(std::uint64_t n);

enum class LemmaCase { I, II };

struct LemmaCaseCheck {
    LemmaCase which;
    std::uint64_t structural_bound = 0;  ///< 2(p-1) or p(p-1)
    bool structural_holds = false;       ///< phi(phi(n)) >= structural_bound
    double intermediate = 0;             ///< log(p) / structural_bound
    double extremal = 0;                 ///< log(11)/20 or log(5)/20

    friend bool operator==(LemmaCaseCheck const&, LemmaCaseCheck const&) = default;
};

struct LemmaReport {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t n = 0;
    std::uint64_t phi_n = 0;
    std::uint64_t phi_phi_n = 0;
    double ratio = 0;  ///< log(p) / phi(phi(n))
    double threshold = 0;
    std::vector<LemmaCaseCheck> cases;

    friend bool operator==(LemmaReport const&, LemmaReport const&) = default;
};

struct LemmaResult {
    bool applicable = false;  ///< NoNormElement when true, NotApplicable otherwise
    LemmaReport report;

    friend bool operator==(LemmaResult const&, LemmaResult const&) = default;
};

/* For n = p^r in case (i) p >= 11, r >= 2 or case (ii) p >= 5, r >= 3:
 * checks phi(phi(n)) against the case's structural bound and
 * log(p)/phi(phi(n)) < log(5)/12, which rules out elements of norm +-p in
 * Z[zeta_phi(n)].  Throws IndeterminateComparison on a margin violation. */
LemmaResult lenstra_lemma_check(std::uint64_t p, unsigned r);

}  // namespace noether
