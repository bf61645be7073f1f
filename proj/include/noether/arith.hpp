#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace noether {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

/* Prime factorization of a positive integer.  Factors are sorted by
 * strictly increasing prime; value 1 has no factors. */
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;

    unsigned exponent_of(u64 prime) const;
    /// Recomputes the product of the listed prime powers.
    u64 reassemble() const;
};

/* Deterministic Miller-Rabin with the first twelve prime bases.  That base
 * set has no strong pseudoprime below 3.3e24, so the test is exact for
 * every 64-bit input. */
bool is_prime(u64 n);

/// Trial division up to 2^16, Pollard rho (Brent) for whatever is left.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);
int moebius(u64 n);

/// All positive divisors in increasing order.
std::vector<u64> divisors(u64 n);

u64 powmod(u64 base, u64 exp, u64 mod);
u64 multiplicative_order(u64 a, u64 p);

/* Smallest a in [1, p-1] of multiplicative order exactly m modulo the
 * prime p.  Throws std::invalid_argument unless m divides p - 1. */
u64 element_of_order(u64 m, u64 p);

/// Every element of exact order m mod p, increasing.
std::vector<u64> elements_of_order(u64 m, u64 p);

std::vector<u64> primes_up_to(u64 limit);

}  // namespace noether
