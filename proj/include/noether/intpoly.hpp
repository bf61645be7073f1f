#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace noether {

using BigInt = mpz_class;

/* Dense univariate polynomial over Z, coefficients in ascending degree.
 * Always kept canonical: the zero polynomial has no coefficients, any
 * other polynomial has a nonzero leading coefficient. */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(BigInt c);
    /// c * x^k
    static IntPoly monomial(BigInt c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::vector<BigInt> const& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t i) const;
    BigInt const& leading() const { return coeffs_.back(); }

    IntPoly& operator+=(IntPoly const& o);
    IntPoly& operator-=(IntPoly const& o);
    IntPoly& operator*=(BigInt const& c);

    friend IntPoly operator+(IntPoly a, IntPoly const& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, IntPoly const& b) { return a -= b; }
    friend IntPoly operator*(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator*(IntPoly a, BigInt const& c) { return a *= c; }
    IntPoly operator-() const;

    friend bool operator==(IntPoly const&, IntPoly const&) = default;

    std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
};

/* Division with remainder in Z[x].  Requires lc(g) to divide every
 * leading term met along the way, which always holds for monic g;
 * throws std::domain_error otherwise. */
PolyDivision divide(IntPoly const& f, IntPoly const& g);

/// Returns q with q * g == f; throws std::domain_error if g does not divide f.
IntPoly exact_divide(IntPoly const& f, IntPoly const& g);

/// f mod g for monic g.
IntPoly reduce_mod_monic(IntPoly const& f, IntPoly const& g);

/* The m-th cyclotomic polynomial, built as (x^m - 1) divided by every
 * Phi_d with d a proper divisor of m.  Results are cached process-wide
 * behind a shared mutex. */
IntPoly const& cyclotomic_poly(std::uint64_t m);

/* Res(f, g) = lc(f)^deg(g) * prod g(beta) over the roots beta of f,
 * via the subresultant PRS.  Zero iff f and g share a root (or g == 0). */
BigInt resultant(IntPoly const& f, IntPoly const& g);

/// f(a) mod p in [0, p), Horner.
std::uint64_t eval_mod(IntPoly const& f, BigInt const& a, std::uint64_t p);

}  // namespace noether
