#include <doctest.h>

#include <set>
#include <sstream>

#include "hgar/binomial.hpp"
#include "hgar/coloring.hpp"
#include "hgar/constructions.hpp"
#include "hgar/naive.hpp"
#include "hgar/random.hpp"

using namespace hgar;

namespace {

EdgeColoring random_coloring(Rng& rng, unsigned n, unsigned r, std::size_t colors)
{
    const std::size_t m = binom(n, r);
    std::vector<std::size_t> order(m);
    for (std::size_t e = 0; e < m; ++e)
        order[e] = e;
    rng.shuffle(order);
    std::vector<Color> c(m);
    for (std::size_t j = 0; j < m; ++j)
        c[order[j]] = static_cast<Color>(j < colors ? j : rng.below(colors));
    return EdgeColoring(n, r, c);
}

} // namespace

TEST_CASE("colorings are total and surjective")
{
    CHECK_THROWS_AS(EdgeColoring(5, 3, std::vector<Color>(9, 0)), std::invalid_argument);
    std::vector<Color> gap(10, 0);
    gap[3] = 2; // colour 1 unused
    CHECK_THROWS_AS(EdgeColoring(5, 3, gap), std::invalid_argument);

    const EdgeColoring mono = EdgeColoring::monochromatic(5, 3);
    CHECK(mono.color_count() == 1);
    CHECK(mono.classes()[0].size() == 10);
    CHECK(EdgeColoring::rainbow_all(5, 3).color_count() == 10);
}

TEST_CASE("is_rainbow")
{
    const EdgeColoring mono = EdgeColoring::monochromatic(6, 3);
    CHECK(is_rainbow(mono, std::vector<RSet>{{0, 1, 2}}));
    CHECK_FALSE(is_rainbow(mono, std::vector<RSet>{{0, 1, 2}, {3, 4, 5}}));

    // two edges avoiding the core share the remaining class
    const LBColoring lb = lb_coloring(10, 3, 4);
    CHECK_FALSE(is_rainbow(lb.coloring, std::vector<RSet>{{1, 2, 3}, {4, 5, 6}}));
    CHECK(is_rainbow(lb.coloring, std::vector<RSet>{{0, 2, 3}, {4, 5, 6}}));
}

TEST_CASE("find_rainbow_copy examples")
{
    const auto all = find_rainbow_copy(EdgeColoring::rainbow_all(7, 3), PatternSpec::loose_path(3));
    REQUIRE(all.status == SearchStatus::found);
    CHECK(classify_sequence(all.witness->edges, PatternSpec::loose_path(3)));

    CHECK(find_rainbow_copy(EdgeColoring::monochromatic(7, 3), PatternSpec::loose_path(2)).status ==
          SearchStatus::none);

    const LBColoring lb = lb_coloring(10, 3, 4);
    CHECK(find_rainbow_copy(lb.coloring, PatternSpec::loose_path(4)).status == SearchStatus::none);
    CHECK(find_rainbow_copy(lb.coloring, PatternSpec::loose_cycle(4)).status == SearchStatus::none);
    // one colour more than the construction allows for a shorter path
    CHECK(find_rainbow_copy(lb.coloring, PatternSpec::loose_path(3)).status == SearchStatus::found);
}

TEST_CASE("representative subgraph")
{
    // classes {e0, e1}, {e2}, ... : lowest rank per class
    std::vector<Color> c(binom(5, 3));
    for (std::size_t e = 0; e < c.size(); ++e)
        c[e] = static_cast<Color>(e == 0 ? 0 : e - 1);
    const Hypergraph h = representative_subgraph(EdgeColoring(5, 3, c));
    CHECK(h.edge_count() == c.size() - 1);
    CHECK(h.contains(EdgeRank{0}));
    CHECK_FALSE(h.contains(EdgeRank{1}));
    CHECK(h.contains(EdgeRank{2}));

    CHECK(representative_subgraph(EdgeColoring::rainbow_all(7, 3)) == Hypergraph::complete(7, 3));

    const LBColoring odd = lb_coloring(11, 3, 5);
    const Hypergraph rep = representative_subgraph(odd.coloring);
    CHECK(rep.edge_count() == binom(11, 3) - binom(10, 3) + 2);
    CHECK(is_rainbow(odd.coloring, rep.edges()));
}

TEST_CASE("rainbow search agrees with the naive enumerator")
{
    Rng rng(41);
    const std::vector<PatternSpec> specs{PatternSpec::loose_path(2), PatternSpec::loose_path(3),
                                         PatternSpec::loose_path(4), PatternSpec::loose_cycle(3),
                                         PatternSpec::loose_cycle(4), PatternSpec::linear_path(3),
                                         PatternSpec::linear_cycle(3)};
    for (unsigned n = 4; n <= 7; ++n) {
        const auto plain = naive::all_rsets(n, 3);
        for (int j = 0; j < 8; ++j) {
            const EdgeColoring col = random_coloring(rng, n, 3, 1 + rng.below(binom(n, 3)));
            std::vector<unsigned> colors;
            for (const auto& s : plain)
                colors.push_back(col.color(RSet(std::vector<Vertex>(s.begin(), s.end()))));
            for (const auto& spec : specs) {
                const auto rep = find_rainbow_copy(col, spec);
                CAPTURE(n);
                CAPTURE(spec.to_string());
                CHECK((rep.status == SearchStatus::found) == naive::contains_copy(plain, spec, &colors));
                if (rep.witness)
                    CHECK(is_rainbow(col, rep.witness->edges));
            }
        }
    }
}

TEST_CASE("refining a coloring keeps found witnesses rainbow")
{
    Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 6 + static_cast<unsigned>(rng.below(3));
        const EdgeColoring coarse = random_coloring(rng, n, 3, 2 + rng.below(8));
        const auto rep = find_rainbow_copy(coarse, PatternSpec::loose_path(3));
        if (rep.status != SearchStatus::found)
            continue;
        // split every class: a random half of each class moves to a fresh colour
        std::vector<Color> fine = coarse.colors();
        Color next = static_cast<Color>(coarse.color_count());
        for (const auto& cls : coarse.classes()) {
            bool moved = false;
            for (std::size_t i = 1; i < cls.size(); ++i)
                if (rng.chance(0.5)) {
                    fine[cls[i]] = next;
                    moved = true;
                }
            next += moved;
        }
        const EdgeColoring refined(n, 3, fine);
        CHECK(is_rainbow(refined, rep.witness->edges));
        CHECK(find_rainbow_copy(refined, PatternSpec::loose_path(3)).status == SearchStatus::found);
    }
}

TEST_CASE("coloring text format")
{
    const EdgeColoring lb = lb_coloring(7, 3, 4).coloring;
    std::ostringstream out;
    write_coloring(out, lb);
    std::istringstream in(out.str());
    CHECK(read_coloring(in) == lb);

    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream s(text);
        try {
            read_coloring(s);
        }
        catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    const std::string head = "4 3 2\n";
    CHECK(line_of(head + "1 2 3 : 0\n1 2 4 : 1\n1 3 4 : 0\n2 3 4 : 1\n") == 0);
    CHECK(line_of(head + "1 2 3 : 0\n1 2 4 : 1\n1 3 4 : 0\n") > 0);           // not total
    CHECK(line_of(head + "1 2 3 : 0\n1 2 4 : 1\n1 3 4 : 0\n3 2 1 : 1\n") == 5); // duplicate
    CHECK(line_of(head + "1 2 3 : 0\n1 2 4 : 2\n") == 3);                       // colour out of range
    CHECK(line_of(head + "1 2 3 0\n") == 2);                                    // missing ':'
    CHECK(line_of("4 3 3\n1 2 3 : 0\n1 2 4 : 1\n1 3 4 : 0\n2 3 4 : 1\n") > 0);  // colour 2 unused
}
