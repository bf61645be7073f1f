#include "noether/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace noether {

namespace {

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

bool strong_probable_prime(u64 n, u64 base)
{
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(base % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

u64 pollard_brent(u64 n)
{
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
        u64 r = 1;
        constexpr u64 block = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_into(u64 n, std::vector<u64>& primes)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    split_into(d, primes);
    split_into(n / d, primes);
}

}  // namespace

unsigned Factorization::exponent_of(u64 prime) const
{
    for (auto const& f : factors)
        if (f.prime == prime)
            return f.exponent;
    return 0;
}

u64 Factorization::reassemble() const
{
    u64 r = 1;
    for (auto const& f : factors)
        for (unsigned e = 0; e < f.exponent; ++e)
            r *= f.prime;
    return r;
}

u64 powmod(u64 base, u64 exp, u64 mod)
{
    if (mod == 1)
        return 0;
    u64 result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n)
{
    static constexpr u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (u64 b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    for (u64 b : bases)
        if (!strong_probable_prime(n, b))
            return false;
    return true;
}

Factorization factorize(u64 n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    out.value = n;
    std::vector<u64> primes;
    for (u64 d = 2; d < (1u << 16) && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    split_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 q : primes) {
        if (!out.factors.empty() && out.factors.back().prime == q)
            ++out.factors.back().exponent;
        else
            out.factors.push_back({q, 1});
    }
    return out;
}

u64 euler_phi(u64 n)
{
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be positive");
    u64 phi = n;
    for (auto const& f : factorize(n).factors)
        phi = phi / f.prime * (f.prime - 1);
    return phi;
}

int moebius(u64 n)
{
    if (n == 0)
        throw std::invalid_argument("moebius: n must be positive");
    auto fac = factorize(n);
    for (auto const& f : fac.factors)
        if (f.exponent > 1)
            return 0;
    return fac.factors.size() % 2 ? -1 : 1;
}

std::vector<u64> divisors(u64 n)
{
    std::vector<u64> divs{1};
    for (auto const& f : factorize(n).factors) {
        std::size_t const count = divs.size();
        u64 pk = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 multiplicative_order(u64 a, u64 p)
{
    a %= p;
    if (a == 0)
        throw std::invalid_argument("multiplicative_order: a is not a unit");
    u64 order = p - 1;
    for (auto const& f : factorize(p - 1).factors) {
        for (unsigned e = 0; e < f.exponent; ++e) {
            if (powmod(a, order / f.prime, p) != 1)
                break;
            order /= f.prime;
        }
    }
    return order;
}

u64 element_of_order(u64 m, u64 p)
{
    if (m == 0 || p < 2 || (p - 1) % m != 0)
        throw std::invalid_argument("element_of_order: " + std::to_string(m)
                                    + " does not divide " + std::to_string(p) + " - 1");
    if (m == 1)
        return 1;
    auto const qs = factorize(m).factors;
    for (u64 a = 2; a < p; ++a) {
        if (powmod(a, m, p) != 1)
            continue;
        bool exact = true;
        for (auto const& q : qs) {
            if (powmod(a, m / q.prime, p) == 1) {
                exact = false;
                break;
            }
        }
        if (exact)
            return a;
    }
    throw std::logic_error("element_of_order: no element found; is p prime?");
}

std::vector<u64> elements_of_order(u64 m, u64 p)
{
    u64 const g = element_of_order(m, p);
    std::vector<u64> out;
    u64 power = 1;
    for (u64 k = 1; k <= m; ++k) {
        power = mulmod(power, g, p);
        if (std::gcd(k, m) == 1)
            out.push_back(power);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> primes_up_to(u64 limit)
{
    std::vector<u64> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

}  // namespace noether
