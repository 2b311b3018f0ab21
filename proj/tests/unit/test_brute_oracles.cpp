#include <doctest.h>

#include <set>

#include "hgar/binomial.hpp"
#include "hgar/closed_forms.hpp"
#include "hgar/naive.hpp"
#include "hgar/oracles.hpp"

using namespace hgar;

namespace {

bool family_free(const std::vector<std::set<unsigned>>& edges, const std::vector<PatternSpec>& family,
                 const std::vector<unsigned>* colors = nullptr)
{
    for (const auto& spec : family)
        if (naive::contains_copy(edges, spec, colors))
            return false;
    return true;
}

// Largest F-free subfamily of K_n^r by trying every subset.
std::size_t subset_ex(unsigned n, unsigned r, const std::vector<PatternSpec>& family)
{
    const auto all = naive::all_rsets(n, r);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best)
            continue;
        std::vector<std::set<unsigned>> chosen;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1U)
                chosen.push_back(all[i]);
        if (family_free(chosen, family))
            best = size;
    }
    return best;
}

// Most colours of a rainbow-F-free colouring of K_n^r over every set partition of its edges.
std::size_t partition_max_colors(unsigned n, unsigned r, const std::vector<PatternSpec>& family)
{
    const auto all = naive::all_rsets(n, r);
    std::vector<unsigned> label(all.size(), 0);
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t i, unsigned used) -> void {
        if (i == all.size()) {
            if (used > best && family_free(all, family, &label))
                best = used;
            return;
        }
        for (unsigned c = 0; c <= used; ++c) {
            label[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace

TEST_CASE("Turan oracle examples")
{
    const auto p2_5 = brute_ex(5, 3, {PatternSpec::loose_path(2)});
    CHECK(p2_5.value == 1);
    CHECK(p2_5.witness_verified);

    const auto p2_6 = brute_ex(6, 3, {PatternSpec::loose_path(2)});
    CHECK(p2_6.value == 2);
    REQUIRE(p2_6.witness.edge_count() == 2);
    const auto m = p2_6.witness.edges();
    CHECK(m[0].intersection_size(m[1]) == 0);

    const auto p3_7 = brute_ex(7, 3, {PatternSpec::loose_path(3)});
    CHECK(p3_7.value >= 15);
    CHECK(p3_7.value == 15); // exhaustive run, frozen
    CHECK(p3_7.witness_verified);
    CHECK(find_copy(p3_7.witness, PatternSpec::loose_path(3)).status == SearchStatus::none);
}

TEST_CASE("Turan oracle agrees with subset enumeration")
{
    const std::vector<std::vector<PatternSpec>> families{
        {PatternSpec::loose_path(2)},  {PatternSpec::loose_cycle(3)}, {PatternSpec::linear_path(2)},
        {PatternSpec::loose_path(3)},  {PatternSpec::loose_cycle(4)},
        {PatternSpec::loose_cycle(3), PatternSpec::linear_path(2)},
    };
    for (unsigned n = 4; n <= 5; ++n)
        for (const auto& fam : families) {
            CAPTURE(n);
            CAPTURE(fam.front().to_string());
            CHECK(brute_ex(n, 3, fam).value == subset_ex(n, 3, fam));
        }
    for (unsigned n = 3; n <= 6; ++n)
        for (unsigned k = 2; k <= 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(brute_ex_graph_paths(n, k).value == subset_ex(n, 2, {PatternSpec::loose_path(k)}));
        }
    CHECK(brute_ex_graph_paths(3, 2).value == 1);
}

TEST_CASE("anti-Ramsey oracle examples")
{
    const auto p2 = brute_ar(5, 3, {PatternSpec::loose_path(2)});
    REQUIRE(p2.attainable);
    CHECK(p2.value == 2);
    CHECK(p2.max_rainbow_free_colors == 1);
    CHECK(BigInt(p2.value) == ar_short_path(5, 3, 2).value);
    CHECK(p2.witness_verified);

    const auto p3 = brute_ar(5, 3, {PatternSpec::loose_path(3)});
    CHECK_FALSE(p3.attainable);
    CHECK_FALSE(p3.witness);
}

TEST_CASE("anti-Ramsey oracle agrees with partition enumeration")
{
    const std::vector<std::vector<PatternSpec>> families{
        {PatternSpec::loose_path(2)},
        {PatternSpec::loose_cycle(3)},
        {PatternSpec::linear_path(2)},
        {PatternSpec::linear_path(2), PatternSpec::loose_cycle(3)},
    };
    for (unsigned n = 4; n <= 5; ++n)
        for (const auto& fam : families) {
            const auto ar = brute_ar(n, 3, fam);
            const std::size_t m = partition_max_colors(n, 3, fam);
            CAPTURE(n);
            CAPTURE(fam.front().to_string());
            if (!ar.attainable) {
                CHECK(m == binom(n, 3)); // no copy at all: the rainbow colouring is free
                continue;
            }
            CHECK(ar.max_rainbow_free_colors == m);
            CHECK(ar.value == m + 1);
            CHECK(ar.value >= 2);
            CHECK(ar.max_rainbow_free_colors >= 1);
            REQUIRE(ar.witness);
            CHECK(ar.witness->color_count() == m);
            CHECK(ar.witness_verified);
        }
}

TEST_CASE("adding a pattern never increases the oracles")
{
    const std::vector<PatternSpec> base{PatternSpec::loose_path(3)};
    const std::vector<PatternSpec> more{PatternSpec::loose_path(3), PatternSpec::loose_cycle(3)};
    for (unsigned n = 5; n <= 7; ++n)
        CHECK(brute_ex(n, 3, more).value <= brute_ex(n, 3, base).value);

    const std::vector<PatternSpec> ar_base{PatternSpec::linear_path(2)};
    const std::vector<PatternSpec> ar_more{PatternSpec::linear_path(2), PatternSpec::loose_path(2)};
    CHECK(brute_ar(5, 3, ar_more).value <= brute_ar(5, 3, ar_base).value);
}

TEST_CASE("oracle limits and worker invariance")
{
    CHECK_THROWS_AS(brute_ex(8, 3, {PatternSpec::loose_path(3)}), OracleLimitError);
    CHECK_THROWS_AS(brute_ar(6, 3, {PatternSpec::loose_path(2)}), OracleLimitError);
    CHECK_THROWS_AS(brute_ex_graph_paths(11, 3), OracleLimitError);

    OracleOptions one, four;
    four.workers = 4;
    for (unsigned n = 5; n <= 7; ++n) {
        const auto a = brute_ex(n, 3, {PatternSpec::loose_path(3)}, one);
        const auto b = brute_ex(n, 3, {PatternSpec::loose_path(3)}, four);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(a.stats.nodes == b.stats.nodes);
    }
    const auto a = brute_ar(5, 3, {PatternSpec::loose_cycle(3)}, one);
    const auto b = brute_ar(5, 3, {PatternSpec::loose_cycle(3)}, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);
}
