#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "noether/arith.hpp"
#include "oracles.hpp"

using namespace noether;

TEST_CASE("is_prime on small values and the R primes")
{
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(172));
    CHECK(is_prime(163));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    for (u64 n = 0; n < 20000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime_naive(n));
}

TEST_CASE("is_prime rejects strong pseudoprimes to small bases")
{
    // 2047 = 23 * 89 fools base 2; 3215031751 fools bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(2047));
    CHECK_FALSE(is_prime(3215031751ull));
    CHECK_FALSE(is_prime(3825123056546413051ull));
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("factorize")
{
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(172).factors == std::vector<PrimePower>{{2, 2}, {43, 1}});
    CHECK(factorize(70).factors == std::vector<PrimePower>{{2, 1}, {5, 1}, {7, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    // semiprime with both factors above the trial-division range
    auto const big = factorize(1000003ull * 998244353ull);
    CHECK(big.factors == std::vector<PrimePower>{{1000003, 1}, {998244353, 1}});
}

TEST_CASE("factorize round-trips against trial division")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> dist(1, 10'000'000);
    for (int i = 0; i < 2000; ++i) {
        u64 const n = dist(rng);
        auto const f = factorize(n);
        REQUIRE(f.value == n);
        REQUIRE(f.reassemble() == n);
        auto const expected = oracle::trial_division(n);
        REQUIRE(f.factors.size() == expected.size());
        u64 prev = 0;
        for (auto const& pp : f.factors) {
            REQUIRE(pp.prime > prev);
            REQUIRE(is_prime(pp.prime));
            REQUIRE(expected.at(pp.prime) == pp.exponent);
            prev = pp.prime;
        }
    }
}

TEST_CASE("euler_phi")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(172) == 84);
    CHECK(euler_phi(70) == 24);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    for (u64 n = 1; n <= 2000; ++n)
        REQUIRE(euler_phi(n) == oracle::coprime_count(n));
}

TEST_CASE("euler_phi is multiplicative on coprime pairs")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<u64> dist(1, 10'000);
    int checked = 0;
    while (checked < 1000) {
        u64 const a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1)
            continue;
        REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        ++checked;
    }
}

TEST_CASE("divisor sums of phi and moebius")
{
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
    for (u64 n = 1; n <= 10'000; ++n) {
        u64 phi_sum = 0;
        long mu_sum = 0;
        for (u64 d : divisors(n)) {
            phi_sum += euler_phi(d);
            mu_sum += moebius(d);
        }
        REQUIRE(phi_sum == n);
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("element_of_order")
{
    CHECK(element_of_order(4, 5) == 2);
    CHECK(element_of_order(6, 7) == 3);
    CHECK(element_of_order(1, 7) == 1);
    CHECK(element_of_order(2, 3) == 2);
    CHECK_THROWS_AS(element_of_order(5, 7), std::invalid_argument);
    CHECK_THROWS_AS(element_of_order(0, 7), std::invalid_argument);
}

TEST_CASE("element_of_order returns the smallest element of exact order")
{
    for (u64 p : primes_up_to(400)) {
        for (u64 m : divisors(p - 1)) {
            u64 const a = element_of_order(m, p);
            REQUIRE(powmod(a, m, p) == 1);
            for (auto const& q : factorize(m).factors)
                REQUIRE(powmod(a, m / q.prime, p) != 1);
            for (u64 b = 1; b < a; ++b)
                REQUIRE(oracle::order_naive(b, p) != m);
            auto const all = elements_of_order(m, p);
            REQUIRE(all.size() == euler_phi(m));
            REQUIRE(all.front() == a);
        }
    }
}

TEST_CASE("primes_up_to")
{
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == std::vector<u64>{2});
    CHECK(primes_up_to(172).size() == 39);
    CHECK(primes_up_to(100'000).size() == 9592);
}
