#include "noether/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace noether {

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b)
{
    if (a.empty())
        return {};
    std::size_t const inner = b.size();
    std::size_t const cols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), IntVector(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner)
            throw std::invalid_argument("multiply: shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

BigInt determinant(IntMatrix const& input)
{
    std::size_t const n = input.size();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    for (auto const& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt dot(IntVector const& a, IntVector const& b)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

namespace {

void axpy(IntVector& y, BigInt const& q, IntVector const& x)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] -= q * x[i];
}

// nearest integer to a / b for b > 0, halves rounded up
BigInt round_div(BigInt const& a, BigInt const& b)
{
    BigInt num = 2 * a + b;
    BigInt den = 2 * b;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt exact(BigInt const& num, BigInt const& den)
{
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Integral LLL state.  Vectors are 0-based; d[i + 1] is the Gram
// determinant of b_0..b_i and d[0] = 1.
class IntegralLll {
public:
    IntegralLll(IntMatrix rows, Rational const& delta)
        : b_(std::move(rows)),
          h_(identity_matrix(b_.size())),
          n_(b_.size()),
          d_(n_ + 1),
          lambda_(n_, IntVector(n_))
    {
        delta_num_ = delta.get_num();
        delta_den_ = delta.get_den();
    }

    void run()
    {
        if (n_ == 0)
            return;
        d_[0] = 1;
        d_[1] = dot(b_[0], b_[0]);
        if (d_[1] == 0)
            throw std::invalid_argument("lll_reduce: basis is rank deficient");
        std::size_t k = 1, kmax = 0;
        while (k < n_) {
            if (k > kmax) {
                kmax = k;
                gram_schmidt_row(k);
            }
            for (;;) {
                reduce(k, k - 1);
                BigInt const& lam = lambda_[k][k - 1];
                if (delta_den_ * (d_[k + 1] * d_[k - 1] + lam * lam) < delta_num_ * d_[k] * d_[k]) {
                    swap(k, kmax);
                    k = std::max<std::size_t>(1, k - 1);
                    continue;
                }
                for (std::size_t l = k - 1; l-- > 0;)
                    reduce(k, l);
                ++k;
                break;
            }
        }
    }

    IntMatrix& basis() { return b_; }
    IntMatrix& transform() { return h_; }

private:
    void gram_schmidt_row(std::size_t k)
    {
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt u = dot(b_[k], b_[j]);
            for (std::size_t i = 0; i < j; ++i)
                u = exact(d_[i + 1] * u - lambda_[k][i] * lambda_[j][i], d_[i]);
            if (j < k)
                lambda_[k][j] = u;
            else
                d_[k + 1] = u;
        }
        if (d_[k + 1] == 0)
            throw std::invalid_argument("lll_reduce: basis is rank deficient");
    }

    void reduce(std::size_t k, std::size_t l)
    {
        BigInt const& dl = d_[l + 1];
        if (2 * abs(lambda_[k][l]) <= dl)
            return;
        BigInt const q = round_div(lambda_[k][l], dl);
        axpy(b_[k], q, b_[l]);
        axpy(h_[k], q, h_[l]);
        lambda_[k][l] -= q * dl;
        for (std::size_t i = 0; i < l; ++i)
            lambda_[k][i] -= q * lambda_[l][i];
    }

    void swap(std::size_t k, std::size_t kmax)
    {
        std::swap(b_[k], b_[k - 1]);
        std::swap(h_[k], h_[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j)
            std::swap(lambda_[k][j], lambda_[k - 1][j]);
        BigInt const lam = lambda_[k][k - 1];
        BigInt const bnew = exact(d_[k - 1] * d_[k + 1] + lam * lam, d_[k]);
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            BigInt const t = lambda_[i][k];
            lambda_[i][k] = exact(d_[k + 1] * lambda_[i][k - 1] - lam * t, d_[k]);
            lambda_[i][k - 1] = exact(bnew * t + lam * lambda_[i][k], d_[k + 1]);
        }
        d_[k] = bnew;
    }

    IntMatrix b_;
    IntMatrix h_;
    std::size_t n_;
    IntVector d_;
    IntMatrix lambda_;
    BigInt delta_num_, delta_den_;
};

}  // namespace

LllResult lll_reduce(LatticeBasis const& basis, Rational const& delta)
{
    if (delta <= Rational(1, 4) || delta >= 1)
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
    for (auto const& row : basis.rows)
        if (row.size() != basis.rows.size())
            throw std::invalid_argument("lll_reduce: basis is not square");
    IntegralLll lll(basis.rows, delta);
    lll.run();
    return {LatticeBasis{std::move(lll.basis())}, std::move(lll.transform())};
}

bool is_lll_reduced(LatticeBasis const& basis, Rational const& delta)
{
    std::size_t const n = basis.dim();
    std::vector<std::vector<Rational>> star(n);
    std::vector<Rational> norms(n);
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        star[i].assign(basis.rows[i].begin(), basis.rows[i].end());
        for (std::size_t j = 0; j < i; ++j) {
            Rational num = 0;
            for (std::size_t t = 0; t < star[j].size(); ++t)
                num += Rational(basis.rows[i][t]) * star[j][t];
            mu[i][j] = num / norms[j];
            for (std::size_t t = 0; t < star[i].size(); ++t)
                star[i][t] -= mu[i][j] * star[j][t];
        }
        norms[i] = 0;
        for (auto const& x : star[i])
            norms[i] += x * x;
        if (norms[i] == 0)
            return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (abs(mu[i][j]) > Rational(1, 2))
                return false;
    for (std::size_t k = 1; k < n; ++k)
        if (norms[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1])
            return false;
    return true;
}

CandidateEnumerator::CandidateEnumerator(LatticeBasis basis, unsigned coeff_bound,
                                         std::uint64_t budget)
    : basis_(std::move(basis)),
      bound_(coeff_bound),
      budget_(budget),
      digits_(basis_.dim(), 0),
      coeffs_(basis_.dim(), 0)
{
    if (coeff_bound == 0 || basis_.dim() == 0)
        exhausted_ = true;
}

bool CandidateEnumerator::step_odometer()
{
    unsigned const top = 2 * shell_;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] < top) {
            unsigned const d = ++digits_[i];
            coeffs_[i] = (d % 2) ? static_cast<long>((d + 1) / 2) : -static_cast<long>(d / 2);
            return true;
        }
        digits_[i] = 0;
        coeffs_[i] = 0;
    }
    return false;
}

bool CandidateEnumerator::acceptable() const
{
    long first = 0;
    bool on_shell = false;
    for (long c : coeffs_) {
        if (first == 0)
            first = c;
        if (static_cast<unsigned long>(c < 0 ? -c : c) == shell_)
            on_shell = true;
    }
    return on_shell && first > 0;
}

bool CandidateEnumerator::advance()
{
    if (exhausted_ || produced_ >= budget_)
        return false;
    for (;;) {
        if (!step_odometer()) {
            if (++shell_ > bound_) {
                exhausted_ = true;
                return false;
            }
            continue;
        }
        if (acceptable()) {
            ++produced_;
            return true;
        }
    }
}

IntVector CandidateEnumerator::vector() const
{
    IntVector v(basis_.dim());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] += coeffs_[i] * basis_.rows[i][j];
    }
    return v;
}

std::optional<IntVector> CandidateEnumerator::next()
{
    if (!advance())
        return std::nullopt;
    return vector();
}

}  // namespace noether
