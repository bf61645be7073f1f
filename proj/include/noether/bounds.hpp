#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace noether {

/// Euler-Mascheroni constant, 16 significant digits.
inline constexpr double euler_constant = 0.5772156649015329;

/* Every floating comparison that decides an elimination must clear the
 * threshold by at least this much; closer calls raise IndeterminateComparison. */
inline constexpr double decision_margin = 1e-6;

class IndeterminateComparison : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// log(5)/12, valid for every p.
double general_threshold();
/// log(7/2)/8, valid for p != 1 (mod 7).
double mod7_threshold();

struct Thresholds {
    double general;
    std::optional<double> mod7;
};

Thresholds ad_thresholds(std::uint64_t p);

/// log(p) / phi(p - 1); rejects p < 5.
double ratio(std::uint64_t p);

/* Upper envelope for log(x)/phi(x-1) coming from the explicit bound on
 * n/phi(n):
 *   f(x) = log(x)/(x-1) * (e^C loglog(x-1) + 5/(2 loglog(x-1)))
 * Defined for x > e + 1. */
double rs_f(double x);

/// True iff rs_f(k) > rs_f(k + 1) for every integer k in [lo, hi).
bool check_f_decreasing(std::uint64_t lo, std::uint64_t hi);

enum class Elimination { None, General, Mod7 };

std::string to_string(Elimination e);

struct BoundReport {
    std::uint64_t p = 0;
    std::uint64_t phi_val = 0;
    double ratio = 0;
    double threshold_general = 0;
    double threshold_mod7 = 0;
    bool mod7_applicable = false;
    double f_value = 0;
    Elimination elimination = Elimination::None;

    friend bool operator==(BoundReport const&, BoundReport const&) = default;
};

/* General if ratio < log(5)/12 - eps, else Mod7 if p != 1 (mod 7) and
 * ratio < log(7/2)/8 - eps, else None.  Anything other than None proves
 * there is no element of norm +-p in Z[zeta_(p-1)].  Throws
 * IndeterminateComparison when a deciding comparison lands within eps. */
BoundReport eliminate_prime(std::uint64_t p);

struct EnvelopeCheck {
    std::uint64_t limit = 0;
    std::uint64_t primes_checked = 0;
    std::uint64_t tightest_prime = 0;
    double tightest_quotient = 0;  ///< max of ratio(p) / f(p)

    friend bool operator==(EnvelopeCheck const&, EnvelopeCheck const&) = default;
};

struct CutoffReport {
    EnvelopeCheck envelope;
    std::uint64_t grid_lo = 0, grid_hi = 0;
    bool decreasing = false;
    double f_at_cutoff = 0;
    double threshold = 0;
    double margin = 0;  ///< threshold - f(173)

    friend bool operator==(CutoffReport const&, CutoffReport const&) = default;
};

/// Thrown when one of the cutoff facts fails; carries the failing instance.
class CutoffFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t cutoff_prime = 173;

/* Checks the three facts behind the p < 173 cutoff:
 *   (a) ratio(p) < rs_f(p) for every prime 5 <= p <= envelope_limit,
 *   (b) rs_f decreasing on the integer grid [44, grid_hi],
 *   (c) rs_f(173) < log(5)/12 with margin >= 5e-4. */
CutoffReport cutoff_certificate(std::uint64_t envelope_limit = 100'000,
                                std::uint64_t grid_hi = 10'000);

}  // namespace noether
