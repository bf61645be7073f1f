#include "noether/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "noether/arith.hpp"

namespace noether {

namespace {

void require_same_ring(CyclotomicInt const& a, CyclotomicInt const& b)
{
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("conductor mismatch: " + std::to_string(a.conductor())
                                    + " vs " + std::to_string(b.conductor()));
}

std::vector<BigInt> padded(IntPoly const& reduced, std::size_t n)
{
    std::vector<BigInt> out = reduced.coeffs();
    out.resize(n);
    return out;
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::uint64_t conductor)
    : conductor_(conductor), coeffs_(euler_phi(conductor))
{
}

CyclotomicInt::CyclotomicInt(std::uint64_t conductor, IntPoly const& representative)
    : conductor_(conductor)
{
    IntPoly const& phi = cyclotomic_poly(conductor);
    coeffs_ = padded(reduce_mod_monic(representative, phi),
                     static_cast<std::size_t>(phi.degree()));
}

CyclotomicInt::CyclotomicInt(std::uint64_t conductor, std::vector<BigInt> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != euler_phi(conductor))
        throw std::invalid_argument("CyclotomicInt: expected " + std::to_string(euler_phi(conductor))
                                    + " coefficients for conductor " + std::to_string(conductor)
                                    + ", got " + std::to_string(coeffs_.size()));
}

CyclotomicInt CyclotomicInt::integer(std::uint64_t conductor, BigInt const& c)
{
    CyclotomicInt r(conductor);
    r.coeffs_[0] = c;
    return r;
}

CyclotomicInt CyclotomicInt::zeta_power(std::uint64_t conductor, std::uint64_t k)
{
    return CyclotomicInt(conductor, IntPoly::monomial(1, k % conductor));
}

bool CyclotomicInt::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

std::string CyclotomicInt::to_string() const
{
    std::string s = representative().to_string();
    for (auto& ch : s)
        if (ch == 'x')
            ch = 'z';
    return s;
}

CyclotomicInt cyc_add(CyclotomicInt const& a, CyclotomicInt const& b)
{
    require_same_ring(a, b);
    std::vector<BigInt> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeffs()[i];
    return CyclotomicInt(a.conductor(), std::move(c));
}

CyclotomicInt cyc_mul(CyclotomicInt const& a, CyclotomicInt const& b)
{
    require_same_ring(a, b);
    return CyclotomicInt(a.conductor(), a.representative() * b.representative());
}

CyclotomicInt cyc_conjugate(CyclotomicInt const& a, std::uint64_t k)
{
    std::uint64_t const m = a.conductor();
    if (std::gcd(k, m) != 1)
        throw std::invalid_argument("cyc_conjugate: " + std::to_string(k)
                                    + " is not coprime to " + std::to_string(m));
    // zeta^m = 1, so fold exponents mod m before reducing mod Phi_m
    std::vector<BigInt> folded(m);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        folded[(i * (k % m)) % m] += a.coeffs()[i];
    return CyclotomicInt(m, IntPoly(std::move(folded)));
}

BigInt cyc_norm(CyclotomicInt const& a)
{
    return resultant(cyclotomic_poly(a.conductor()), a.representative());
}

}  // namespace noether
