#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noether/cyclotomic.hpp"
#include "noether/lattice.hpp"

namespace noether {

/* The prime ideal (p, zeta_m - root) of Z[zeta_m] as a full-rank sublattice
 * of the power-basis coordinates: all f with f(root) = 0 mod p.  Requires
 * m | p - 1, so p splits completely and root has exact order m mod p. */
struct PrimeIdealLattice {
    std::uint64_t p = 0;
    std::uint64_t conductor = 0;
    std::uint64_t root = 0;
    LatticeBasis basis;
};

/// Uses the smallest element of order m as the root.
PrimeIdealLattice build_prime_ideal_lattice(std::uint64_t p, std::uint64_t m);
/// Any element of exact order m; throws std::invalid_argument otherwise.
PrimeIdealLattice build_prime_ideal_lattice(std::uint64_t p, std::uint64_t m, std::uint64_t root);

/// alpha in Z[zeta_conductor] with N(alpha) = norm_value = +-p.
struct NormCertificate {
    std::uint64_t p = 0;
    std::uint64_t conductor = 0;
    CyclotomicInt alpha{1};
    BigInt norm_value;

    friend bool operator==(NormCertificate const&, NormCertificate const&) = default;
};

struct SearchParams {
    unsigned coeff_bound = 2;
    std::uint64_t budget = 5'000'000;
    /// Retry with a wider coefficient box and then the conjugate ideals.
    bool escalate = true;
};

/// One pass of lattice reduction plus enumeration.
struct SearchStage {
    std::string label;
    std::uint64_t root = 0;
    unsigned coeff_bound = 0;
    std::uint64_t candidates = 0;
    std::uint64_t exact_checks = 0;
    bool found = false;

    friend bool operator==(SearchStage const&, SearchStage const&) = default;
};

struct SearchReport {
    std::uint64_t p = 0;
    std::uint64_t conductor = 0;
    std::size_t dimension = 0;
    std::uint64_t budget_per_stage = 0;
    std::vector<SearchStage> stages;

    std::uint64_t total_candidates() const;

    friend bool operator==(SearchReport const&, SearchReport const&) = default;
};

/* Outcome of a certificate search.  An empty certificate means the budget
 * ran out; that is not evidence that no norm-p element exists. */
struct SearchResult {
    std::optional<NormCertificate> certificate;
    SearchReport report;

    bool found() const { return certificate.has_value(); }
};

/* Searches Z[zeta_(p-1)] for an element of norm +-p.  For p = 2, 3 the ring
 * is Z and alpha = p.  Otherwise the prime-ideal lattice is LLL-reduced and
 * its short combinations are screened with a floating-point estimate of
 * the norm; candidates passing the screen get the exact resultant check. */
SearchResult find_norm_certificate(std::uint64_t p, SearchParams const& params = {});

/* Recomputes everything from scratch: the stored norm must equal
 * Res(Phi_m, alpha), its absolute value must be p, and for conductor > 2
 * alpha must vanish mod p at some element of order m. */
bool verify_certificate(NormCertificate const& cert);

}  // namespace noether
