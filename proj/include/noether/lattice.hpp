#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace noether {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

/// Square integer basis; each row is a basis vector.
struct LatticeBasis {
    IntMatrix rows;

    std::size_t dim() const { return rows.size(); }
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(IntMatrix const& a, IntMatrix const& b);
/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(IntMatrix const& m);
BigInt dot(IntVector const& a, IntVector const& b);

struct LllResult {
    LatticeBasis basis;
    IntMatrix transform;  ///< unimodular U with basis.rows == U * input.rows
};

/* Integral LLL reduction (de Weger / Cohen variant): all Gram-Schmidt data
 * is carried as the integers d_i and lambda_ij, so no rationals appear in
 * the inner loop.  delta must lie in (1/4, 1).  Throws
 * std::invalid_argument for a non-square or rank-deficient basis. */
LllResult lll_reduce(LatticeBasis const& basis, Rational const& delta = Rational(3, 4));

/// Size reduction and the Lovasz condition, re-checked over exact rationals.
bool is_lll_reduced(LatticeBasis const& basis, Rational const& delta = Rational(3, 4));

/* Streams nonzero lattice vectors sum c_i b_i with every |c_i| <= bound.
 *
 * Coefficient vectors come in shells of increasing max|c_i|.  Within a
 * shell the order is lexicographic with the last coordinate most
 * significant and values ordered 0, 1, -1, 2, -2, ...; so combinations of
 * the leading basis vectors come first.  Only one of c, -c is produced:
 * the one whose first nonzero coefficient is positive.  Stops after
 * `budget` vectors. */
class CandidateEnumerator {
public:
    CandidateEnumerator(LatticeBasis basis, unsigned coeff_bound, std::uint64_t budget);

    /// Moves to the next candidate; false once exhausted or out of budget.
    bool advance();

    std::vector<long> const& coefficients() const { return coeffs_; }
    /// sum c_i b_i for the current coefficients.
    IntVector vector() const;
    /// 0-based index of the current candidate in the stream.
    std::uint64_t index() const { return produced_ - 1; }
    std::uint64_t produced() const { return produced_; }
    unsigned shell() const { return shell_; }

    /// Convenience wrapper: advance() then vector().
    std::optional<IntVector> next();

private:
    bool step_odometer();
    bool acceptable() const;

    LatticeBasis basis_;
    unsigned bound_;
    std::uint64_t budget_;
    std::uint64_t produced_ = 0;
    unsigned shell_ = 1;
    std::vector<unsigned> digits_;
    std::vector<long> coeffs_;
    bool exhausted_ = false;
};

}  // namespace noether
