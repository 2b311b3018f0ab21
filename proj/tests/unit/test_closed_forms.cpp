#include <doctest.h>

#include "hgar/binomial.hpp"
#include "hgar/closed_forms.hpp"
#include "hgar/oracles.hpp"

using namespace hgar;

TEST_CASE("anti-Ramsey closed forms")
{
    CHECK(ar_loose(20, 3, 4).value == 173);
    CHECK(ar_loose(20, 3, 5).value == 174);
    CHECK(ar_linear(20, 3, 5).value == 190);
    CHECK(ar_linear(20, 3, 4).value == 173);
    CHECK(ar_loose(20, 3, 4).applicability == Applicability::asymptotic);
    CHECK_THROWS_AS(ar_loose(20, 3, 3), std::domain_error);
    CHECK_THROWS_AS(ar_loose(20, 2, 4), std::domain_error);

    for (unsigned r = 3; r <= 5; ++r)
        for (unsigned n = 5 * r; n <= 60; ++n) {
            CHECK(ar_loose(n, r, 4).value - ar_loose(n, r, 5).value == -1);
            for (unsigned k = 5; k <= 9; k += 2) {
                const unsigned t = ar_half_length(k);
                CHECK(ar_linear(n, r, k).value - ar_loose(n, r, k).value ==
                      binom_big(static_cast<long long>(n) - t - 1, r - 2) - 1);
            }
        }
}

TEST_CASE("short loose paths")
{
    CHECK(ar_short_path(5, 3, 2).value == 2);
    CHECK(ar_short_path(9, 3, 3).value == 3);
    CHECK(ar_short_path(9, 3, 3).applicability == Applicability::exact);
    CHECK_THROWS_AS(ar_short_path(4, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(ar_short_path(8, 3, 3), std::out_of_range);
    CHECK_THROWS_AS(ar_short_path(20, 3, 4), std::domain_error);
}

TEST_CASE("Turan closed forms")
{
    CHECK(ex_linear(20, 3, 4, Shape::path).value == 188);
    CHECK(ex_linear(20, 3, 5, Shape::path).value == 324);
    CHECK(ex_linear(20, 3, 4, Shape::cycle).value == 188);
    CHECK(ex_linear(21, 3, 4, Shape::cycle).value == binom(21, 3) - binom(20, 3) + 20);
    CHECK(ex_linear(20, 4, 4, Shape::cycle).value == ex_linear(20, 4, 4, Shape::path).value);
    CHECK(ex_linear(20, 3, 3, Shape::path).applicability == Applicability::extrapolated);

    CHECK(ex_loose(20, 3, 4, Shape::path).value == 172);
    CHECK(ex_loose(20, 3, 5, Shape::path).value == 324);
    CHECK(ex_loose(20, 3, 5, Shape::cycle).value == 324);
    CHECK(ex_loose(20, 3, 6, Shape::cycle).value == ex_loose(20, 3, 6, Shape::path).value);
    CHECK(ex_loose(20, 3, 3, Shape::path).value == 171);
    CHECK(ex_loose(20, 3, 3, Shape::path).applicability == Applicability::asymptotic);
    CHECK_THROWS_AS(ex_loose(20, 3, 2, Shape::path), std::domain_error);

    CHECK_THROWS_AS(ex_loose(20, 3, 4, Shape::cycle), UnresolvedSymbolError);
    CHECK(ex_loose(20, 3, 4, Shape::cycle, 3u).value == 171 + 6);
    CHECK_THROWS_AS(ex_loose(20, 3, 4, Shape::cycle, 0u), std::domain_error);
}

TEST_CASE("Erdos-Gallai bound")
{
    CHECK(eg_bound(10, 4) == 15);
    CHECK(eg_bound(1, 2) == BigRational(1, 2));
    CHECK(BigInt(numerator(eg_bound(1, 2)) / denominator(eg_bound(1, 2))) == 0);

    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = 2; k <= 4; ++k) {
            const auto ex = brute_ex_graph_paths(n, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(BigRational(ex.value) <= eg_bound(n, k));
        }
    CHECK(brute_ex_graph_paths(6, 3).value <= 6);
    CHECK(brute_ex_graph_paths(4, 2).value <= 3);
}

TEST_CASE("observation bound")
{
    CHECK(obs_lower_bound(BigInt(0)).value == 2);
    CHECK(obs_lower_bound(BigInt(171)).value == 173);
    CHECK(obs_lower_bound(ex_loose(20, 3, 3, Shape::path)).value == ar_loose(20, 3, 4).value);
    CHECK(obs_lower_bound(ex_loose(20, 3, 4, Shape::path)).value == ar_loose(20, 3, 5).value);
}

TEST_CASE("consistency audit")
{
    const AuditReport report = consistency_audit({});
    CHECK(report.ok());
    CHECK(report.points == 630);
    CHECK(report.checks > 3 * report.points);

    for (unsigned k = 4; k <= 20; ++k)
        CHECK(ar_half_length(k) == turan_core_size(k - 1) + 1);
    CHECK(ar_loose(20, 3, 5).value <= ar_linear(20, 3, 5).value);
}
