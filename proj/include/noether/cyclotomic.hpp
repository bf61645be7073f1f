#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "noether/intpoly.hpp"

namespace noether {

/* Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
 * The coefficient vector always has length exactly phi(m); trailing zeros
 * are kept so the vector can be fed to the lattice code unchanged. */
class CyclotomicInt {
public:
    /// Zero of Z[zeta_m].
    explicit CyclotomicInt(std::uint64_t conductor);
    /// Reduces the given representative modulo Phi_m.
    CyclotomicInt(std::uint64_t conductor, IntPoly const& representative);
    /// Coefficients must number exactly phi(m).
    CyclotomicInt(std::uint64_t conductor, std::vector<BigInt> coeffs);

    static CyclotomicInt integer(std::uint64_t conductor, BigInt const& c);
    /// zeta_m^k
    static CyclotomicInt zeta_power(std::uint64_t conductor, std::uint64_t k);

    std::uint64_t conductor() const { return conductor_; }
    std::size_t degree() const { return coeffs_.size(); }
    std::vector<BigInt> const& coeffs() const { return coeffs_; }
    IntPoly representative() const { return IntPoly(coeffs_); }

    /// Nonzero coefficients only at index 0.
    bool is_rational() const;

    friend bool operator==(CyclotomicInt const&, CyclotomicInt const&) = default;

    std::string to_string() const;

private:
    std::uint64_t conductor_;
    std::vector<BigInt> coeffs_;
};

CyclotomicInt cyc_add(CyclotomicInt const& a, CyclotomicInt const& b);
CyclotomicInt cyc_mul(CyclotomicInt const& a, CyclotomicInt const& b);

/// sigma_k : zeta -> zeta^k.  Requires gcd(k, m) = 1.
CyclotomicInt cyc_conjugate(CyclotomicInt const& a, std::uint64_t k);

/* Absolute norm to Q, computed as Res(Phi_m, representative).  The sign
 * is kept as the resultant gives it. */
BigInt cyc_norm(CyclotomicInt const& a);

}  // namespace noether
