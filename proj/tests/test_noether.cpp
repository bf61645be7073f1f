#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "noether/arith.hpp"
#include "noether/noether.hpp"
#include "oracles.hpp"

using namespace noether;

namespace {

ClassifyParams cheap_params()
{
    ClassifyParams c;
    c.probe_budget = 500;
    return c;
}

}  // namespace

TEST_CASE("R table")
{
    CHECK(r_table.size() == 17);
    CHECK(*std::max_element(r_table.begin(), r_table.end()) == 71);
    for (auto p : r_table)
        CHECK(is_prime(p));
    CHECK(in_r_table(71));
    CHECK_FALSE(in_r_table(59));
}

TEST_CASE("classify_prime examples")
{
    auto const v7 = classify_prime(7, cheap_params());
    CHECK(v7.status == VerdictStatus::InR_Certified);
    REQUIRE(v7.certificate);
    CHECK(v7.certificate->conductor == 6);
    CHECK(abs(v7.certificate->norm_value) == 7);
    CHECK_FALSE(v7.bounds);

    auto const v59 = classify_prime(59, cheap_params());
    CHECK(v59.status == VerdictStatus::Eliminated);
    REQUIRE(v59.bounds);
    CHECK(v59.bounds->elimination == Elimination::Mod7);
    CHECK_FALSE(v59.search);
    CHECK(v59.rationale().find("mod-7 threshold") != std::string::npos);

    auto const v47 = classify_prime(47, cheap_params());
    CHECK(v47.status == VerdictStatus::NotInR_Unresolved);
    REQUIRE(v47.bounds);
    CHECK(v47.bounds->elimination == Elimination::None);
    REQUIRE(v47.search);
    CHECK(v47.search->total_candidates() == 500);
    CHECK(v47.rationale().find("not a proof") != std::string::npos);

    CHECK_THROWS_AS(classify_prime(6), std::invalid_argument);
}

TEST_CASE("a starved search leaves R primes pending")
{
    ClassifyParams params;
    params.search.budget = 1;
    params.search.escalate = false;
    auto const v = classify_prime(71, params);
    // one candidate is not enough for conductor 70 with this enumeration order
    CHECK(v.status == VerdictStatus::InR_CertificatePending);
    CHECK(v.rationale().find("not a disproof") != std::string::npos);
}

TEST_CASE("scan small ranges")
{
    auto const s2 = scan(2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].p == 2);
    CHECK(s2[0].status == VerdictStatus::InR_Certified);

    auto const s12 = scan(12);
    REQUIRE(s12.size() == 5);
    for (auto const& v : s12)
        CHECK(v.status == VerdictStatus::InR_Certified);

    CHECK_THROWS_AS(scan(1), std::invalid_argument);
}

TEST_CASE("scan up to 173 partitions the primes")
{
    auto const verdicts = scan(173, cheap_params(), 4);
    CHECK(verdicts.size() == 40);  // includes 173 itself
    std::set<std::uint64_t> in_r, eliminated, unresolved;
    for (auto const& v : verdicts) {
        switch (v.status) {
        case VerdictStatus::InR_Certified:
            REQUIRE(in_r_table(v.p));
            REQUIRE(verify_certificate(*v.certificate));
            in_r.insert(v.p);
            break;
        case VerdictStatus::Eliminated:
            REQUIRE_FALSE(in_r_table(v.p));
            REQUIRE(v.bounds->elimination != Elimination::None);
            eliminated.insert(v.p);
            break;
        case VerdictStatus::NotInR_Unresolved:
            REQUIRE_FALSE(in_r_table(v.p));
            REQUIRE(v.bounds->elimination == Elimination::None);
            unresolved.insert(v.p);
            break;
        case VerdictStatus::InR_CertificatePending:
            FAIL("pending certificate for ", v.p);
        }
    }
    CHECK(in_r.size() == 17);
    for (std::uint64_t p : {59, 83, 107, 163})
        CHECK(eliminated.count(p) == 1);
    CHECK(unresolved == std::set<std::uint64_t>{47, 53, 73, 79, 127});
    CHECK(in_r.size() + eliminated.size() + unresolved.size() == verdicts.size());
}

TEST_CASE("scan is independent of the worker count")
{
    auto const a = scan(100, cheap_params(), 1);
    auto const b = scan(100, cheap_params(), 3);
    CHECK(a == b);
}

TEST_CASE("is_rational_cyclic examples")
{
    CHECK(is_rational_cyclic(1));
    CHECK_FALSE(is_rational_cyclic(8));
    CHECK(is_rational_cyclic(45));
    CHECK_FALSE(is_rational_cyclic(59));
    CHECK(is_rational_cyclic(3 * 3 * 3 * 3 * 3 * 3 * 3));
    CHECK(is_rational_cyclic(4 * 25 * 49 * 71));
    CHECK_FALSE(is_rational_cyclic(11 * 11));
    CHECK_THROWS_AS(is_rational_cyclic(0), std::invalid_argument);

    auto const ob = rational_cyclic_obstruction(8);
    REQUIRE(ob);
    CHECK(ob->prime == 2);
    CHECK(ob->exponent == 3);
    CHECK(ob->allowed == 2);
}

TEST_CASE("is_rational_cyclic matches the divisibility oracle")
{
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        REQUIRE(is_rational_cyclic(n) == oracle::corollary_divisibility(n));
}

TEST_CASE("lenstra_lemma_check examples")
{
    auto const r112 = lenstra_lemma_check(11, 2);
    REQUIRE(r112.applicable);
    CHECK(r112.report.phi_phi_n == 40);
    CHECK(r112.report.ratio == doctest::Approx(0.0599473818199592636).epsilon(1e-12));
    CHECK(r112.report.cases.size() == 1);
    CHECK(r112.report.cases[0].which == LemmaCase::I);

    auto const r53 = lenstra_lemma_check(5, 3);
    REQUIRE(r53.applicable);
    CHECK(r53.report.phi_phi_n == 40);
    CHECK(r53.report.ratio == doctest::Approx(0.0402359478108525094).epsilon(1e-12));
    CHECK(r53.report.cases[0].which == LemmaCase::II);

    CHECK_FALSE(lenstra_lemma_check(5, 2).applicable);
    CHECK_FALSE(lenstra_lemma_check(7, 2).applicable);
    CHECK_FALSE(lenstra_lemma_check(13, 1).applicable);
    CHECK(lenstra_lemma_check(11, 3).report.cases.size() == 2);

    CHECK_THROWS_AS(lenstra_lemma_check(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(lenstra_lemma_check(9, 3), std::invalid_argument);
    CHECK_THROWS_AS(lenstra_lemma_check(5, 0), std::invalid_argument);
}

TEST_CASE("structural totient inequalities for p <= 97, r <= 5")
{
    for (std::uint64_t p : primes_up_to(97)) {
        if (p < 5)
            continue;
        for (unsigned r = 1; r <= 5; ++r) {
            auto const res = lenstra_lemma_check(p, r);
            bool const expected = (p >= 11 && r >= 2) || r >= 3;
            REQUIRE(res.applicable == expected);
            if (!expected)
                continue;
            std::uint64_t pr = 1;
            for (unsigned i = 0; i < r; ++i)
                pr *= p;
            std::uint64_t const t = oracle::totient_by_factors(oracle::totient_by_factors(pr));
            REQUIRE(res.report.phi_phi_n == t);
            if (p >= 11 && r >= 2)
                REQUIRE(t >= 2 * (p - 1));
            if (r >= 3)
                REQUIRE(t >= p * (p - 1));
            for (auto const& c : res.report.cases) {
                REQUIRE(res.report.ratio <= c.intermediate);
                REQUIRE(c.extremal < general_threshold());
            }
        }
    }
}
