#include "noether/intpoly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "noether/arith.hpp"

namespace noether {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(BigInt c)
{
    return IntPoly(std::vector<BigInt>{std::move(c)});
}

IntPoly IntPoly::monomial(BigInt c, std::size_t k)
{
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPoly& IntPoly::operator+=(IntPoly const& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(IntPoly const& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(BigInt const& c)
{
    for (auto& x : coeffs_)
        x *= c;
    normalize();
    return *this;
}

IntPoly operator*(IntPoly const& a, IntPoly const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        BigInt const& c = coeffs_[k];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        if (mag != 1 || k == 0)
            os << mag.get_str();
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

PolyDivision divide(IntPoly const& f, IntPoly const& g)
{
    if (g.is_zero())
        throw std::domain_error("divide: division by the zero polynomial");
    std::vector<BigInt> rem = f.coeffs();
    std::size_t const dg = static_cast<std::size_t>(g.degree());
    BigInt const& lc = g.leading();
    if (rem.size() <= dg)
        return {IntPoly{}, f};
    std::vector<BigInt> quot(rem.size() - dg);
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k] == 0)
            continue;
        if (!mpz_divisible_p(rem[k].get_mpz_t(), lc.get_mpz_t()))
            throw std::domain_error("divide: leading coefficient does not divide");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), lc.get_mpz_t());
        std::size_t const shift = k - dg;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[shift + j] -= q * g.coeffs()[j];
        quot[shift] = std::move(q);
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly exact_divide(IntPoly const& f, IntPoly const& g)
{
    auto [q, r] = divide(f, g);
    if (!r.is_zero())
        throw std::domain_error("exact_divide: nonzero remainder " + r.to_string());
    return q;
}

IntPoly reduce_mod_monic(IntPoly const& f, IntPoly const& g)
{
    if (g.is_zero() || g.leading() != 1)
        throw std::domain_error("reduce_mod_monic: modulus is not monic");
    return divide(f, g).remainder;
}

namespace {

std::shared_mutex cyclotomic_mutex;
std::map<std::uint64_t, IntPoly> cyclotomic_cache;

BigInt content(IntPoly const& f)
{
    BigInt g = 0;
    for (auto const& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly divide_by_scalar(IntPoly const& f, BigInt const& c)
{
    std::vector<BigInt> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(out));
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b)
{
    std::vector<BigInt> rem = a.coeffs();
    std::size_t const db = static_cast<std::size_t>(b.degree());
    BigInt const& lc = b.leading();
    // one multiplication by lc per step, deg a - deg b + 1 steps
    for (std::size_t k = rem.size(); k-- > db;) {
        BigInt const lead = rem[k];
        for (auto& c : rem)
            c *= lc;
        if (lead != 0) {
            std::size_t const shift = k - db;
            for (std::size_t j = 0; j <= db; ++j)
                rem[shift + j] -= lead * b.coeffs()[j];
        }
    }
    rem.resize(db);
    return IntPoly(std::move(rem));
}

BigInt pow(BigInt const& b, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

IntPoly const& cyclotomic_poly(std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("cyclotomic_poly: m must be positive");
    {
        std::shared_lock lock(cyclotomic_mutex);
        auto it = cyclotomic_cache.find(m);
        if (it != cyclotomic_cache.end())
            return it->second;
    }
    IntPoly phi = IntPoly::monomial(1, m) - IntPoly{1};
    for (std::uint64_t d : divisors(m))
        if (d != m)
            phi = exact_divide(phi, cyclotomic_poly(d));
    std::unique_lock lock(cyclotomic_mutex);
    return cyclotomic_cache.try_emplace(m, std::move(phi)).first->second;
}

BigInt resultant(IntPoly const& f, IntPoly const& g)
{
    if (f.is_zero())
        throw std::invalid_argument("resultant: first argument must be nonzero");
    if (g.is_zero())
        return 0;

    BigInt const ca = content(f), cb = content(g);
    IntPoly a = divide_by_scalar(f, ca);
    IntPoly b = divide_by_scalar(g, cb);
    BigInt t = pow(ca, static_cast<unsigned long>(g.degree()))
               * pow(cb, static_cast<unsigned long>(f.degree()));
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1))
            s = -1;
    }

    BigInt gg = 1, h = 1;
    while (b.degree() > 0) {
        long const delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1))
            s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero())
            return 0;
        b = divide_by_scalar(r, gg * pow(h, static_cast<unsigned long>(delta)));
        gg = a.leading();
        // h <- g^delta / h^(delta - 1); unchanged when delta == 0
        if (delta == 0)
            continue;
        BigInt num = pow(gg, static_cast<unsigned long>(delta));
        BigInt den = pow(h, static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    // b is a nonzero constant here
    long const da = a.degree();
    BigInt num = pow(b.leading(), static_cast<unsigned long>(da));
    if (da > 1) {
        BigInt den = pow(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return s * t * num;
}

std::uint64_t eval_mod(IntPoly const& f, BigInt const& a, std::uint64_t p)
{
    if (p == 0)
        throw std::invalid_argument("eval_mod: modulus must be positive");
    BigInt const mod(static_cast<unsigned long>(p));
    BigInt acc = 0;
    BigInt ar;
    mpz_fdiv_r(ar.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    auto const& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * ar + c[k];
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    return acc.get_ui();
}

}  // namespace noether
