#include "noether/certify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "noether/arith.hpp"

namespace noether {

namespace {

// balanced residue in (-p/2, p/2]
BigInt balanced(u64 r, u64 p)
{
    BigInt v(static_cast<unsigned long>(r));
    if (2 * r > p)
        v -= static_cast<unsigned long>(p);
    return v;
}

/* Complex embeddings zeta -> exp(2 pi i k / m) for one representative k of
 * each conjugate pair; the norm's magnitude is the square of the product
 * over these (m > 2). */
class NormScreen {
public:
    NormScreen(LatticeBasis const& basis, u64 m)
    {
        for (u64 k = 1; 2 * k < m; ++k) {
            if (std::gcd(k, m) != 1)
                continue;
            double const theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
            roots_.emplace_back(std::cos(theta), std::sin(theta));
        }
        rows_.resize(basis.dim());
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            for (auto const& z : roots_) {
                std::complex<double> acc = 0, power = 1;
                for (auto const& c : basis.rows[i]) {
                    acc += c.get_d() * power;
                    power *= z;
                }
                rows_[i].push_back(acc);
            }
        }
    }

    /// log |N(sum c_i b_i)|, floating point.
    double log_abs_norm(std::vector<long> const& coeffs) const
    {
        scratch_.assign(roots_.size(), 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0)
                continue;
            double const c = static_cast<double>(coeffs[i]);
            for (std::size_t k = 0; k < roots_.size(); ++k)
                scratch_[k] += c * rows_[i][k];
        }
        double s = 0;
        for (auto const& e : scratch_)
            s += std::log(std::abs(e));
        return 2.0 * s;
    }

private:
    std::vector<std::complex<double>> roots_;
    std::vector<std::vector<std::complex<double>>> rows_;
    mutable std::vector<std::complex<double>> scratch_;
};

std::optional<NormCertificate> run_stage(PrimeIdealLattice const& ideal, unsigned bound,
                                         std::uint64_t budget, SearchStage& stage,
                                         bool& box_exhausted)
{
    u64 const m = ideal.conductor;
    LatticeBasis reduced = lll_reduce(ideal.basis).basis;
    NormScreen const screen(reduced, m);
    // every nonzero ideal element has |N| a positive multiple of p
    double const cutoff = std::log(1.5 * static_cast<double>(ideal.p));
    BigInt const target(static_cast<unsigned long>(ideal.p));

    CandidateEnumerator en(reduced, bound, budget);
    box_exhausted = false;
    while (en.advance()) {
        ++stage.candidates;
        if (!(screen.log_abs_norm(en.coefficients()) < cutoff))
            continue;
        ++stage.exact_checks;
        CyclotomicInt alpha(m, en.vector());
        BigInt norm = cyc_norm(alpha);
        if (abs(norm) == target) {
            stage.found = true;
            return NormCertificate{ideal.p, m, std::move(alpha), std::move(norm)};
        }
    }
    box_exhausted = en.produced() < budget;
    return std::nullopt;
}

}  // namespace

PrimeIdealLattice build_prime_ideal_lattice(std::uint64_t p, std::uint64_t m)
{
    if (!is_prime(p))
        throw std::invalid_argument("build_prime_ideal_lattice: " + std::to_string(p) + " is not prime");
    return build_prime_ideal_lattice(p, m, element_of_order(m, p));
}

PrimeIdealLattice build_prime_ideal_lattice(std::uint64_t p, std::uint64_t m, std::uint64_t root)
{
    if (!is_prime(p))
        throw std::invalid_argument("build_prime_ideal_lattice: " + std::to_string(p) + " is not prime");
    if (m == 0 || (p - 1) % m != 0)
        throw std::invalid_argument("build_prime_ideal_lattice: " + std::to_string(m)
                                    + " does not divide " + std::to_string(p) + " - 1");
    if (root == 0 || root >= p || multiplicative_order(root, p) != m)
        throw std::invalid_argument("build_prime_ideal_lattice: " + std::to_string(root)
                                    + " does not have order " + std::to_string(m));

    std::size_t const n = euler_phi(m);
    PrimeIdealLattice out{p, m, root, LatticeBasis{IntMatrix(n, IntVector(n))}};
    auto& rows = out.basis.rows;
    rows[0][0] = static_cast<unsigned long>(p);
    u64 power = 1;
    for (std::size_t i = 1; i < n; ++i) {
        power = power * root % p;
        rows[i][i] = 1;
        rows[i][0] = -balanced(power, p);
    }

    BigInt const det = determinant(rows);
    if (abs(det) != static_cast<unsigned long>(p))
        throw std::logic_error("build_prime_ideal_lattice: index is not p");
    for (auto const& row : rows)
        if (eval_mod(IntPoly(row), static_cast<unsigned long>(root), p) != 0)
            throw std::logic_error("build_prime_ideal_lattice: row outside the ideal");
    return out;
}

std::uint64_t SearchReport::total_candidates() const
{
    std::uint64_t total = 0;
    for (auto const& s : stages)
        total += s.candidates;
    return total;
}

SearchResult find_norm_certificate(std::uint64_t p, SearchParams const& params)
{
    if (!is_prime(p))
        throw std::invalid_argument("find_norm_certificate: " + std::to_string(p) + " is not prime");
    u64 const m = p - 1;
    SearchResult result;
    auto& report = result.report;
    report.p = p;
    report.conductor = m;
    report.dimension = euler_phi(m);
    report.budget_per_stage = params.budget;

    if (p <= 3) {
        BigInt const v(static_cast<unsigned long>(p));
        result.certificate = NormCertificate{p, m, CyclotomicInt::integer(m, v), v};
        report.stages.push_back({"rational integer", 1, 0, 0, 1, true});
        return result;
    }

    auto attempt = [&](std::string label, u64 root, unsigned bound, bool& exhausted) {
        SearchStage stage{std::move(label), root, bound, 0, 0, false};
        auto ideal = build_prime_ideal_lattice(p, m, root);
        auto cert = run_stage(ideal, bound, params.budget, stage, exhausted);
        report.stages.push_back(stage);
        if (cert)
            result.certificate = std::move(cert);
        return result.found();
    };

    u64 const root = element_of_order(m, p);
    bool exhausted = false;
    if (attempt("primary", root, params.coeff_bound, exhausted))
        return result;
    if (!params.escalate)
        return result;
    // a wider box only helps if the first one was fully enumerated
    if (exhausted && params.coeff_bound < 3 && attempt("wide box", root, 3, exhausted))
        return result;
    for (u64 other : elements_of_order(m, p)) {
        if (other == root)
            continue;
        if (attempt("conjugate ideal", other, params.coeff_bound, exhausted))
            return result;
    }
    return result;
}

bool verify_certificate(NormCertificate const& cert)
{
    if (cert.p < 2 || !is_prime(cert.p))
        return false;
    if (cert.conductor == 0 || cert.alpha.conductor() != cert.conductor)
        return false;
    if (cert.alpha.coeffs().size() != euler_phi(cert.conductor))
        return false;
    BigInt const norm = cyc_norm(cert.alpha);
    if (norm != cert.norm_value || abs(norm) != static_cast<unsigned long>(cert.p))
        return false;
    if (cert.conductor <= 2)
        return true;
    if ((cert.p - 1) % cert.conductor != 0)
        return false;
    IntPoly const rep = cert.alpha.representative();
    for (u64 a : elements_of_order(cert.conductor, cert.p))
        if (eval_mod(rep, static_cast<unsigned long>(a), cert.p) == 0)
            return true;
    return false;
}

}  // namespace noether
