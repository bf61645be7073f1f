#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "noether/arith.hpp"
#include "noether/cyclotomic.hpp"
#include "oracles.hpp"

using namespace noether;

namespace {

CyclotomicInt make(std::uint64_t m, std::vector<long> const& c)
{
    return CyclotomicInt(m, std::vector<BigInt>(c.begin(), c.end()));
}

CyclotomicInt random_element(std::mt19937_64& rng, std::uint64_t m)
{
    return make(m, oracle::random_coeffs(rng, euler_phi(m), -5, 5));
}

}  // namespace

TEST_CASE("construction keeps length phi(m)")
{
    CHECK(CyclotomicInt(12).coeffs().size() == 4);
    CHECK(CyclotomicInt(1).coeffs().size() == 1);
    CHECK(CyclotomicInt(2).coeffs().size() == 1);
    CHECK(CyclotomicInt::zeta_power(4, 0) == make(4, {1, 0}));
    CHECK_THROWS_AS(make(4, {1, 2, 3}), std::invalid_argument);
    // a representative of higher degree is reduced mod Phi_m
    CHECK(CyclotomicInt(4, IntPoly{0, 0, 0, 1}) == make(4, {0, -1}));
}

TEST_CASE("cyc_mul")
{
    // m = 4: (2 + zeta)(2 + zeta^3) = (2 + i)(2 - i) = 5
    auto const a = make(4, {2, 1});
    auto const b = CyclotomicInt(4, IntPoly{2, 0, 0, 1});
    CHECK(b == make(4, {2, -1}));
    CHECK(cyc_mul(a, b) == make(4, {5, 0}));
    // while 2 - zeta^3 = 2 + zeta, so (2 + zeta)(2 - zeta^3) = 3 + 4 zeta
    CHECK(cyc_mul(a, CyclotomicInt(4, IntPoly{2, 0, 0, -1})) == make(4, {3, 4}));
    CHECK(cyc_mul(a, CyclotomicInt::integer(4, 1)) == a);
    // m = 6: zeta^2 = zeta - 1
    auto const z = CyclotomicInt::zeta_power(6, 1);
    CHECK(cyc_mul(z, z) == make(6, {-1, 1}));
    CHECK_THROWS_AS(cyc_mul(make(4, {1, 0}), make(6, {1, 0})), std::invalid_argument);
}

TEST_CASE("cyc_conjugate")
{
    auto const z4 = CyclotomicInt::zeta_power(4, 1);
    CHECK(cyc_conjugate(z4, 1) == z4);
    CHECK(cyc_conjugate(z4, 3) == make(4, {0, -1}));
    CHECK(cyc_conjugate(make(6, {2, 1}), 5) == make(6, {3, -1}));
    CHECK_THROWS_AS(cyc_conjugate(z4, 2), std::invalid_argument);
}

TEST_CASE("cyc_norm examples")
{
    for (std::uint64_t m : {1, 2, 4, 6, 12, 70})
        CHECK(cyc_norm(CyclotomicInt::integer(m, 1)) == 1);
    CHECK(cyc_norm(make(4, {2, 1})) == 5);
    CHECK(cyc_norm(make(6, {2, 1})) == 7);
    CHECK(cyc_norm(make(4, {3, 0})) == 9);
    CHECK(cyc_norm(make(1, {-7})) == -7);
    CHECK(cyc_norm(make(2, {5})) == 5);
    CHECK(cyc_norm(CyclotomicInt(8)) == 0);
}

TEST_CASE("norm of a rational integer c is c^phi(m)")
{
    for (std::uint64_t m = 1; m <= 40; ++m)
        for (long c : {-3L, -1L, 2L, 5L}) {
            BigInt expected;
            BigInt const base(c);
            mpz_pow_ui(expected.get_mpz_t(), base.get_mpz_t(), euler_phi(m));
            REQUIRE(cyc_norm(CyclotomicInt::integer(m, c)) == expected);
        }
}

TEST_CASE("norm agrees with the product over complex embeddings")
{
    std::mt19937_64 rng(17);
    for (std::uint64_t m : {3, 5, 7, 8, 9, 12, 15}) {
        for (int i = 0; i < 40; ++i) {
            auto const c = oracle::random_coeffs(rng, euler_phi(m), -3, 3);
            long double const approx = oracle::norm_by_embeddings(m, c);
            REQUIRE(cyc_norm(make(m, c)).get_d() == doctest::Approx(static_cast<double>(approx)).epsilon(1e-9));
        }
    }
}

TEST_CASE("norm is multiplicative and conjugation-invariant")
{
    std::mt19937_64 rng(19);
    int count = 0;
    for (std::uint64_t m : {4, 6, 8, 12, 10, 22}) {
        for (int i = 0; i < 200; ++i) {
            auto const a = random_element(rng, m);
            auto const b = random_element(rng, m);
            BigInt const na = cyc_norm(a);
            REQUIRE(cyc_norm(cyc_mul(a, b)) == na * cyc_norm(b));
            for (std::uint64_t k = 1; k < m; ++k)
                if (std::gcd(k, m) == 1)
                    REQUIRE(cyc_norm(cyc_conjugate(a, k)) == na);
            count += 2;
        }
    }
    CHECK(count >= 1000);
}

TEST_CASE("product of all conjugates is the rational integer N(a)")
{
    std::mt19937_64 rng(23);
    int count = 0;
    for (std::uint64_t m : {4, 6, 8, 12, 10, 22}) {
        for (int i = 0; i < 170; ++i) {
            auto const a = random_element(rng, m);
            CyclotomicInt prod = CyclotomicInt::integer(m, 1);
            for (std::uint64_t k = 1; k <= m; ++k)
                if (std::gcd(k, m) == 1)
                    prod = cyc_mul(prod, cyc_conjugate(a, k));
            REQUIRE(prod.is_rational());
            REQUIRE(prod.coeffs()[0] == cyc_norm(a));
            ++count;
        }
    }
    CHECK(count >= 1000);
}
