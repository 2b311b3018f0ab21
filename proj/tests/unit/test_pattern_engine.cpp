#include <doctest.h>

#include <set>

#include "hgar/binomial.hpp"
#include "hgar/naive.hpp"
#include "hgar/random.hpp"
#include "hgar/search.hpp"

using namespace hgar;

namespace {

Hypergraph random_hypergraph(Rng& rng, unsigned n, unsigned r, double p)
{
    std::vector<EdgeRank> ranks;
    for (EdgeRank e = 0; e < binom(n, r); ++e)
        if (rng.chance(p))
            ranks.push_back(e);
    return Hypergraph(n, r, ranks);
}

std::vector<std::set<unsigned>> plain_edges(const Hypergraph& h)
{
    std::vector<std::set<unsigned>> out;
    for (const RSet& e : h.edges())
        out.emplace_back(e.begin(), e.end());
    return out;
}

std::vector<PatternSpec> small_specs()
{
    return {PatternSpec::loose_path(2),  PatternSpec::loose_path(3),   PatternSpec::loose_path(4),
            PatternSpec::loose_cycle(3), PatternSpec::loose_cycle(4),  PatternSpec::linear_path(2),
            PatternSpec::linear_path(3), PatternSpec::linear_path(4),  PatternSpec::linear_cycle(3),
            PatternSpec::linear_cycle(4)};
}

// Ordered k-tuples of distinct edges satisfying the definition, counted directly.
std::size_t ordered_copies(const std::vector<RSet>& edges, const PatternSpec& spec)
{
    std::size_t count = 0;
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self) -> void {
        if (idx.size() == spec.k) {
            std::vector<RSet> seq;
            for (std::size_t i : idx)
                seq.push_back(edges[i]);
            count += classify_sequence(seq, spec).accepted;
            return;
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) != idx.end())
                continue;
            idx.push_back(i);
            self(self);
            idx.pop_back();
        }
    };
    rec(rec);
    return count;
}

} // namespace

TEST_CASE("pattern specs")
{
    CHECK(PatternSpec::parse("loose-path:4") == PatternSpec::loose_path(4));
    CHECK(PatternSpec::parse("linear-cycle:5").to_string() == "linear-cycle:5");
    CHECK_THROWS_AS(PatternSpec::parse("loose-path"), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::parse("tight-path:3"), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::loose_path(1), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::loose_cycle(2), std::invalid_argument);
    const auto fam = parse_family("loose-path:4,loose-cycle:4");
    REQUIRE(fam.size() == 2);
    CHECK(fam[1] == PatternSpec::loose_cycle(4));

    const nlohmann::json j = PatternSpec::linear_path(3);
    CHECK(j.get<PatternSpec>() == PatternSpec::linear_path(3));
    const CopyWitness w{PatternSpec::loose_path(2), {RSet{0, 1, 2}, RSet{2, 3, 4}}};
    const nlohmann::json jw = w;
    CHECK(jw["edges"][0] == nlohmann::json::array({1, 2, 3}));
    CHECK(jw.get<CopyWitness>() == w);
}

TEST_CASE("classify sequences")
{
    const std::vector<RSet> p3{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
    CHECK(classify_sequence(p3, PatternSpec::loose_path(3)));
    CHECK(classify_sequence(p3, PatternSpec::linear_path(3)));

    const std::vector<RSet> fat{{0, 1, 2}, {1, 2, 3}};
    CHECK(classify_sequence(fat, PatternSpec::loose_path(2)));
    const auto rejected = classify_sequence(fat, PatternSpec::linear_path(2));
    CHECK_FALSE(rejected.accepted);
    CHECK_FALSE(rejected.reason.empty());

    const std::vector<RSet> c3{{0, 1, 2}, {2, 3, 4}, {4, 5, 0}};
    CHECK(classify_sequence(c3, PatternSpec::linear_cycle(3)));
    CHECK_FALSE(classify_sequence(c3, PatternSpec::loose_path(3))); // e_1 and e_3 meet

    CHECK_FALSE(classify_sequence(p3, PatternSpec::loose_path(2)));  // wrong length
    CHECK_FALSE(classify_sequence(std::vector<RSet>{{0, 1, 2}, {0, 1, 2}}, PatternSpec::loose_path(2)));
    CHECK_FALSE(classify_sequence(std::vector<RSet>{{0, 1, 2}, {3, 4, 5}}, PatternSpec::loose_path(2)));
    CHECK_FALSE(classify_sequence(std::vector<RSet>{{0, 1, 2}, {2, 3}}, PatternSpec::loose_path(2)));
}

TEST_CASE("find_copy examples")
{
    const auto found = find_copy(Hypergraph::complete(6, 3), PatternSpec::loose_path(3));
    REQUIRE(found.status == SearchStatus::found);
    REQUIRE(found.witness);
    CHECK(classify_sequence(found.witness->edges, PatternSpec::loose_path(3)));

    CHECK(find_copy(Hypergraph::complete(5, 3), PatternSpec::loose_path(3)).status == SearchStatus::none);
    CHECK(find_copy(Hypergraph(9, 3, {}), PatternSpec::loose_path(2)).status == SearchStatus::none);
}

TEST_CASE("smallest complete host sizes")
{
    // frozen from the naive enumerator
    struct Fixture {
        PatternSpec spec;
        unsigned n;
    };
    const Fixture fixtures[] = {
        {PatternSpec::loose_path(2), 4},   {PatternSpec::loose_path(3), 6},   {PatternSpec::loose_path(4), 7},
        {PatternSpec::loose_cycle(3), 4},  {PatternSpec::loose_cycle(4), 6},  {PatternSpec::linear_path(2), 5},
        {PatternSpec::linear_path(3), 7},  {PatternSpec::linear_cycle(3), 6}, {PatternSpec::linear_cycle(4), 8},
        {PatternSpec::linear_path(4), 9},
    };
    for (const auto& f : fixtures) {
        unsigned first = 0;
        for (unsigned n = 3; n <= 10 && first == 0; ++n)
            if (find_copy(Hypergraph::complete(n, 3), f.spec).status == SearchStatus::found)
                first = n;
        CAPTURE(f.spec.to_string());
        CHECK(first == f.n);
        if (f.n <= 8)
            CHECK(naive::min_host_size(3, f.spec, 8) == f.n);
    }
}

TEST_CASE("end data")
{
    const CopyWitness p2{PatternSpec::loose_path(2), {RSet{0, 1, 2}, RSet{2, 3, 4}}};
    const EndData d = end_data(p2);
    CHECK(d.end_points == std::vector<Vertex>{0, 1, 3, 4});
    CHECK(d.end_pairs == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {0, 4}, {1, 3}, {1, 4}});

    const CopyWitness p3{PatternSpec::loose_path(3), {RSet{0, 1, 2}, RSet{2, 3, 4}, RSet{4, 5, 6}}};
    CHECK(end_data(p3).end_points == std::vector<Vertex>{0, 1, 5, 6});

    const CopyWitness c3{PatternSpec::linear_cycle(3), {RSet{0, 1, 2}, RSet{2, 3, 4}, RSet{4, 5, 0}}};
    CHECK_THROWS_AS(end_data(c3), std::domain_error);

    // linear paths: (r-1)^2 end pairs, each from different end edges
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned r = 3 + static_cast<unsigned>(rng.below(3));
        const unsigned k = 2 + static_cast<unsigned>(rng.below(4));
        const unsigned n = r + (k - 1) * (r - 1) + static_cast<unsigned>(rng.below(4));
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v)
            order[v] = v;
        rng.shuffle(order);
        CopyWitness w{PatternSpec::linear_path(k), {}};
        std::size_t next = 0;
        Vertex joint = order[next++];
        for (unsigned j = 0; j < k; ++j) {
            std::vector<Vertex> e{joint};
            while (e.size() < r)
                e.push_back(order[next++]);
            joint = e.back();
            w.edges.emplace_back(e);
        }
        REQUIRE(classify_sequence(w.edges, w.spec));
        const EndData ed = end_data(w);
        CHECK(ed.end_pairs.size() == (r - 1) * (r - 1));
        for (const auto& [a, b] : ed.end_pairs) {
            const bool split = (w.edges.front().contains(a) && w.edges.back().contains(b)) ||
                               (w.edges.front().contains(b) && w.edges.back().contains(a));
            CHECK(split);
        }
    }
}

TEST_CASE("soundness and linear implies loose on fuzzed hosts")
{
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 4 + static_cast<unsigned>(rng.below(7));
        const Hypergraph h = random_hypergraph(rng, n, 3, 0.15 + 0.6 * rng.unit());
        for (const auto& spec : small_specs()) {
            const auto rep = find_copy(h, spec);
            if (rep.status != SearchStatus::found)
                continue;
            REQUIRE(rep.witness);
            REQUIRE(classify_sequence(rep.witness->edges, spec));
            for (const RSet& e : rep.witness->edges)
                REQUIRE(h.contains(e));
            if (spec.tightness == Tightness::linear) {
                PatternSpec loose = spec;
                loose.tightness = Tightness::loose;
                CHECK(classify_sequence(rep.witness->edges, loose));
            }
        }
    }
}

TEST_CASE("completeness against the naive enumerator, n <= 8")
{
    Rng rng(29);
    for (unsigned n = 3; n <= 8; ++n) {
        std::vector<Hypergraph> hosts{Hypergraph::complete(n, 3), Hypergraph(n, 3, {})};
        const int extra = n <= 7 ? 12 : 4;
        for (int j = 0; j < extra; ++j)
            hosts.push_back(random_hypergraph(rng, n, 3, 0.2 + 0.15 * (j % 5)));
        for (const auto& h : hosts) {
            const auto plain = plain_edges(h);
            for (const auto& spec : small_specs()) {
                CAPTURE(n);
                CAPTURE(spec.to_string());
                CHECK((find_copy(h, spec).status == SearchStatus::found) == naive::contains_copy(plain, spec));
            }
        }
    }
}

TEST_CASE("for_each_copy visits every copy once")
{
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned n = 5 + static_cast<unsigned>(rng.below(3));
        const Hypergraph h = random_hypergraph(rng, n, 3, 0.35);
        const auto edges = h.edges();
        for (const auto& spec : small_specs()) {
            if (spec.k > 3)
                continue; // keeps the ordered count cheap
            std::size_t canonical = 0;
            std::set<std::vector<EdgeRank>> distinct;
            for_each_copy(h, spec, [&](std::span<const EdgeRank> ranks) {
                ++canonical;
                distinct.emplace(ranks.begin(), ranks.end());
                return true;
            });
            const std::size_t symmetry = spec.shape == Shape::path ? 2 : 2 * spec.k;
            CAPTURE(spec.to_string());
            CHECK(distinct.size() == canonical);
            CHECK(canonical * symmetry == ordered_copies(edges, spec));
        }
    }
}

TEST_CASE("loose paths span between the minimum and kr - (k - 1) vertices")
{
    const unsigned minimum[] = {0, 0, 4, 6, 7};
    const Hypergraph h = Hypergraph::complete(8, 3);
    for (unsigned k = 2; k <= 4; ++k) {
        unsigned lo = 99, hi = 0;
        for_each_copy(h, PatternSpec::loose_path(k), [&](std::span<const EdgeRank> ranks) {
            std::uint64_t mask = 0;
            for (EdgeRank e : ranks)
                mask |= h.edge(e).mask();
            const unsigned span = static_cast<unsigned>(std::popcount(mask));
            lo = std::min(lo, span);
            hi = std::max(hi, span);
            return true;
        });
        CHECK(lo == minimum[k]);
        CHECK(hi <= 3 * k - (k - 1));
    }
}

TEST_CASE("budgets and workers")
{
    const Hypergraph h = Hypergraph::complete(8, 3);
    SearchOptions tiny;
    tiny.budget = 2;
    const auto rep = find_copy(h, PatternSpec::loose_path(4), tiny);
    CHECK(rep.status == SearchStatus::indeterminate);
    CHECK(rep.nodes_expanded == 2);

    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph g = random_hypergraph(rng, 9, 3, 0.3);
        for (const auto& spec : small_specs()) {
            SearchOptions one, four;
            four.workers = 4;
            const auto a = find_copy(g, spec, one);
            const auto b = find_copy(g, spec, four);
            CHECK(a.status == b.status);
            CHECK(a.nodes_expanded == b.nodes_expanded);
            CHECK(a.witness == b.witness);
        }
    }
}
