#include "noether/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "noether/arith.hpp"

namespace noether {

namespace {

enum class Side { Below, Above };

Side compare_with_margin(double value, double threshold, char const* what, std::uint64_t p)
{
    if (std::abs(value - threshold) < decision_margin) {
        std::ostringstream os;
        os.precision(17);
        os << "p = " << p << ": ratio " << value << " is within " << decision_margin << " of the "
           << what << " threshold " << threshold;
        throw IndeterminateComparison(os.str());
    }
    return value < threshold ? Side::Below : Side::Above;
}

}  // namespace

double general_threshold()
{
    return std::log(5.0) / 12.0;
}

double mod7_threshold()
{
    return std::log(3.5) / 8.0;
}

Thresholds ad_thresholds(std::uint64_t p)
{
    Thresholds t{general_threshold(), std::nullopt};
    if (p % 7 != 1)
        t.mod7 = mod7_threshold();
    return t;
}

double ratio(std::uint64_t p)
{
    if (p < 5)
        throw std::invalid_argument("ratio: p must be at least 5");
    return std::log(static_cast<double>(p)) / static_cast<double>(euler_phi(p - 1));
}

double rs_f(double x)
{
    if (!(x > std::numbers::e + 1.0))
        throw std::domain_error("rs_f: x must exceed e + 1");
    double const ll = std::log(std::log(x - 1.0));
    return std::log(x) / (x - 1.0) * (std::exp(euler_constant) * ll + 5.0 / (2.0 * ll));
}

bool check_f_decreasing(std::uint64_t lo, std::uint64_t hi)
{
    if (lo >= hi)
        throw std::invalid_argument("check_f_decreasing: need lo < hi");
    double prev = rs_f(static_cast<double>(lo));
    for (std::uint64_t k = lo + 1; k <= hi; ++k) {
        double const cur = rs_f(static_cast<double>(k));
        if (!(prev > cur))
            return false;
        prev = cur;
    }
    return true;
}

std::string to_string(Elimination e)
{
    switch (e) {
    case Elimination::General:
        return "General";
    case Elimination::Mod7:
        return "Mod7";
    case Elimination::None:
        break;
    }
    return "None";
}

BoundReport eliminate_prime(std::uint64_t p)
{
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("eliminate_prime: p must be a prime >= 5");
    BoundReport r;
    r.p = p;
    r.phi_val = euler_phi(p - 1);
    r.ratio = ratio(p);
    auto const th = ad_thresholds(p);
    r.threshold_general = th.general;
    r.threshold_mod7 = mod7_threshold();
    r.mod7_applicable = th.mod7.has_value();
    r.f_value = rs_f(static_cast<double>(p));

    if (compare_with_margin(r.ratio, r.threshold_general, "general", p) == Side::Below)
        r.elimination = Elimination::General;
    else if (r.mod7_applicable
             && compare_with_margin(r.ratio, r.threshold_mod7, "mod-7", p) == Side::Below)
        r.elimination = Elimination::Mod7;
    return r;
}

CutoffReport cutoff_certificate(std::uint64_t envelope_limit, std::uint64_t grid_hi)
{
    constexpr std::uint64_t grid_lo = 44;
    CutoffReport out;

    out.envelope.limit = envelope_limit;
    for (std::uint64_t p : primes_up_to(envelope_limit)) {
        if (p < 5)
            continue;
        double const r = ratio(p), f = rs_f(static_cast<double>(p));
        if (!(r < f)) {
            std::ostringstream os;
            os.precision(17);
            os << "envelope fails at p = " << p << ": ratio " << r << " >= f(p) " << f;
            throw CutoffFailure(os.str());
        }
        ++out.envelope.primes_checked;
        if (r / f > out.envelope.tightest_quotient) {
            out.envelope.tightest_quotient = r / f;
            out.envelope.tightest_prime = p;
        }
    }

    out.grid_lo = grid_lo;
    out.grid_hi = grid_hi;
    out.decreasing = check_f_decreasing(grid_lo, grid_hi);
    if (!out.decreasing) {
        for (std::uint64_t k = grid_lo; k < grid_hi; ++k)
            if (!(rs_f(static_cast<double>(k)) > rs_f(static_cast<double>(k + 1))))
                throw CutoffFailure("f is not decreasing at k = " + std::to_string(k));
    }

    out.f_at_cutoff = rs_f(static_cast<double>(cutoff_prime));
    out.threshold = general_threshold();
    out.margin = out.threshold - out.f_at_cutoff;
    if (!(out.margin >= 5e-4)) {
        std::ostringstream os;
        os.precision(17);
        os << "f(173) = " << out.f_at_cutoff << " misses log(5)/12 = " << out.threshold
           << " by margin " << out.margin;
        throw CutoffFailure(os.str());
    }
    return out;
}

}  // namespace noether
