#include "hgar/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "hgar/binomial.hpp"
#include "hgar/search.hpp"

namespace hgar {

namespace {

    /// Every copy of a family member in K_n^r as a bitmask over edge ranks.
    struct CopyTable {
        std::size_t edges = 0;
        std::vector<std::uint64_t> copies;                 ///< deduplicated, ascending
        std::vector<std::vector<std::uint64_t>> by_max;    ///< grouped by highest edge
    };

    CopyTable build_copies(unsigned n, unsigned r, const std::vector<PatternSpec>& family)
    {
        if (family.empty())
            throw std::invalid_argument("oracle needs a nonempty family");
        CopyTable table;
        table.edges = binom(n, r);
        const Hypergraph complete = Hypergraph::complete(n, r);
        for (const PatternSpec& spec : family)
            for_each_copy(complete, spec, [&](std::span<const EdgeRank> seq) {
                std::uint64_t mask = 0;
                for (EdgeRank e : seq)
                    mask |= std::uint64_t{1} << e;
                table.copies.push_back(mask);
                return true;
            });
        std::sort(table.copies.begin(), table.copies.end());
        table.copies.erase(std::unique(table.copies.begin(), table.copies.end()), table.copies.end());
        table.by_max.assign(table.edges, {});
        for (std::uint64_t c : table.copies)
            table.by_max[63 - std::countl_zero(c)].push_back(c);
        return table;
    }

    void check_limit(unsigned n, unsigned r, std::size_t limit)
    {
        if (r < 1 || r > n)
            throw std::invalid_argument("need 1 <= r <= n");
        const std::uint64_t m = binom(n, r);
        if (m > limit || m > 64)
            throw OracleLimitError("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(m)
                                   + " edges exceeds the exact-mode limit of " + std::to_string(std::min<std::size_t>(limit, 64)));
    }

    /// Runs shard jobs on a fixed number of threads; results land at the shard's index.
    template <class Job>
    void run_shards(std::size_t count, unsigned workers, Job&& job)
    {
        if (workers <= 1) {
            for (std::size_t s = 0; s < count; ++s)
                job(s);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&]() {
                for (std::size_t s; (s = next.fetch_add(1)) < count;)
                    job(s);
            });
        for (auto& t : threads)
            t.join();
    }

    // ---- Turan oracle ---------------------------------------------------------------

    struct ExShard {
        std::uint64_t prefix_mask = 0; ///< included edges among the first `depth`
        std::size_t prefix_count = 0;
    };

    struct ExShardResult {
        std::size_t best = 0;
        std::uint64_t best_mask = 0;
        bool improved = false;
        std::uint64_t nodes = 0;
    };

    class ExSearch {
    public:
        ExSearch(const CopyTable& table, std::size_t floor) : t_(table), best_(floor) {}

        ExShardResult run(std::size_t start, std::uint64_t included, std::size_t count)
        {
            dfs(start, included, count);
            return {best_, best_mask_, improved_, nodes_};
        }

        bool admits(std::size_t i, std::uint64_t included_with_i) const
        {
            for (std::uint64_t c : t_.by_max[i])
                if ((c & ~included_with_i) == 0)
                    return false;
            return true;
        }

    private:
        /// Upper bound: every available copy needs one of its undecided edges dropped,
        /// and greedily packed copies with disjoint undecided parts need distinct drops.
        std::size_t bound(std::size_t i, std::uint64_t included, std::size_t count) const
        {
            const std::size_t m = t_.edges;
            const std::uint64_t undecided = (m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1)
                                            & ~((std::uint64_t{1} << i) - 1);
            const std::uint64_t avail = included | undecided;
            std::uint64_t used = 0;
            std::size_t packed = 0;
            for (std::uint64_t c : t_.copies) {
                if (c & ~avail)
                    continue;
                const std::uint64_t u = c & undecided;
                if (u & used)
                    continue;
                used |= u;
                ++packed;
            }
            return count + (m - i) - packed;
        }

        void dfs(std::size_t i, std::uint64_t included, std::size_t count)
        {
            ++nodes_;
            const std::size_t m = t_.edges;
            if (count + (m - i) <= best_)
                return;
            if (i == m) {
                best_ = count;
                best_mask_ = included;
                improved_ = true;
                return;
            }
            if (bound(i, included, count) <= best_)
                return;
            const std::uint64_t with = included | (std::uint64_t{1} << i);
            if (admits(i, with))
                dfs(i + 1, with, count + 1);
            dfs(i + 1, included, count);
        }

        const CopyTable& t_;
        std::size_t best_;
        std::uint64_t best_mask_ = 0;
        bool improved_ = false;
        std::uint64_t nodes_ = 0;
    };

    std::uint64_t greedy_star(const CopyTable& table, unsigned n, unsigned r)
    {
        std::vector<EdgeRank> order;
        std::vector<EdgeRank> rest;
        for (EdgeRank e = 0; e < table.edges; ++e)
            (unrank_rset(e, n, r).contains(0) ? order : rest).push_back(e);
        order.insert(order.end(), rest.begin(), rest.end());
        std::uint64_t included = 0;
        for (EdgeRank e : order) {
            const std::uint64_t with = included | (std::uint64_t{1} << e);
            bool ok = true;
            for (std::uint64_t c : table.copies)
                if ((c & (std::uint64_t{1} << e)) && (c & ~with) == 0) {
                    ok = false;
                    break;
                }
            if (ok)
                included = with;
        }
        return included;
    }

    Hypergraph from_mask(unsigned n, unsigned r, std::uint64_t mask)
    {
        std::vector<EdgeRank> ranks;
        for (std::uint64_t m = mask; m; m &= m - 1)
            ranks.push_back(static_cast<EdgeRank>(std::countr_zero(m)));
        return Hypergraph(n, r, std::move(ranks));
    }

    ExOracleResult solve_ex(unsigned n, unsigned r, const std::vector<PatternSpec>& family,
                            const OracleOptions& options)
    {
        const CopyTable table = build_copies(n, r, family);
        const std::size_t m = table.edges;
        ExOracleResult result;
        result.stats.copies = table.copies.size();

        const std::uint64_t warm = greedy_star(table, n, r);
        const std::size_t warm_count = static_cast<std::size_t>(std::popcount(warm));

        // Fixed decision prefixes in include-first order, pruned only by feasibility.
        const std::size_t depth = std::min<std::size_t>(options.split_depth, m);
        std::vector<ExShard> shards;
        std::uint64_t prefix_nodes = 0;
        ExSearch checker(table, 0);
        auto expand = [&](auto&& self, std::size_t i, std::uint64_t included, std::size_t count) -> void {
            ++prefix_nodes;
            if (i == depth) {
                shards.push_back({included, count});
                return;
            }
            const std::uint64_t with = included | (std::uint64_t{1} << i);
            if (checker.admits(i, with))
                self(self, i + 1, with, count + 1);
            self(self, i + 1, included, count);
        };
        expand(expand, 0, 0, 0);

        std::vector<ExShardResult> results(shards.size());
        run_shards(shards.size(), options.workers, [&](std::size_t s) {
            ExSearch search(table, warm_count);
            results[s] = search.run(depth, shards[s].prefix_mask, shards[s].prefix_count);
        });

        std::size_t best = warm_count;
        std::uint64_t best_mask = warm;
        result.stats.nodes = prefix_nodes;
        for (const auto& res : results) {
            result.stats.nodes += res.nodes;
            if (res.improved && res.best > best) {
                best = res.best;
                best_mask = res.best_mask;
            }
        }
        result.stats.shards = shards.size();
        result.value = best;
        result.witness = from_mask(n, r, best_mask);
        result.witness_verified = true;
        for (const PatternSpec& spec : family)
            result.witness_verified =
                result.witness_verified && find_copy(result.witness, spec).status == SearchStatus::none;
        return result;
    }

    // ---- anti-Ramsey oracle ---------------------------------------------------------

    struct ArShard {
        std::vector<Color> prefix;
        Color used = 0;
    };

    struct ArShardResult {
        std::size_t best = 0;
        std::vector<Color> best_colors;
        bool improved = false;
        std::uint64_t nodes = 0;
    };

    bool completes_rainbow(const CopyTable& table, std::size_t i, const std::vector<Color>& colors)
    {
        for (std::uint64_t c : table.by_max[i]) {
            std::uint64_t seen = 0;
            bool rainbow = true;
            for (std::uint64_t m = c; m; m &= m - 1) {
                const std::uint64_t bit = std::uint64_t{1} << colors[std::countr_zero(m)];
                if (seen & bit) {
                    rainbow = false;
                    break;
                }
                seen |= bit;
            }
            if (rainbow)
                return true;
        }
        return false;
    }

    class ArSearch {
    public:
        ArSearch(const CopyTable& table, std::size_t floor) : t_(table), best_(floor), colors_(table.edges) {}

        ArShardResult run(const ArShard& shard)
        {
            std::copy(shard.prefix.begin(), shard.prefix.end(), colors_.begin());
            dfs(shard.prefix.size(), shard.used);
            return {best_, best_colors_, improved_, nodes_};
        }

    private:
        void dfs(std::size_t i, Color used)
        {
            ++nodes_;
            const std::size_t m = t_.edges;
            if (used + (m - i) <= best_)
                return;
            if (i == m) {
                best_ = used;
                best_colors_ = colors_;
                improved_ = true;
                return;
            }
            // a fresh colour first, then the existing ones in order
            for (Color step = 0; step <= used; ++step) {
                const Color c = step == 0 ? used : step - 1;
                colors_[i] = c;
                if (completes_rainbow(t_, i, colors_))
                    continue;
                dfs(i + 1, c == used ? used + 1 : used);
            }
        }

        const CopyTable& t_;
        std::size_t best_;
        std::vector<Color> colors_;
        std::vector<Color> best_colors_;
        bool improved_ = false;
        std::uint64_t nodes_ = 0;
    };

} // namespace

ExOracleResult brute_ex(unsigned n, unsigned r, const std::vector<PatternSpec>& family, const OracleOptions& options)
{
    check_limit(n, r, options.edge_limit ? options.edge_limit : 40);
    return solve_ex(n, r, family, options);
}

ExOracleResult brute_ex_graph_paths(unsigned n, unsigned k, const OracleOptions& options)
{
    if (n > 10)
        throw OracleLimitError("graph path oracle supports n <= 10");
    if (n < 2)
        throw std::invalid_argument("graph path oracle needs n >= 2");
    check_limit(n, 2, options.edge_limit ? options.edge_limit : 45);
    return solve_ex(n, 2, {PatternSpec::loose_path(k)}, options);
}

ArOracleResult brute_ar(unsigned n, unsigned r, const std::vector<PatternSpec>& family, const OracleOptions& options)
{
    check_limit(n, r, options.edge_limit ? options.edge_limit : 12);
    const CopyTable table = build_copies(n, r, family);
    const std::size_t m = table.edges;
    ArOracleResult result;
    result.stats.copies = table.copies.size();
    if (table.copies.empty()) {
        result.attainable = false;
        return result;
    }
    result.attainable = true;

    const std::size_t depth = std::min<std::size_t>(std::max<unsigned>(options.split_depth, 1), m);
    std::vector<ArShard> shards;
    std::uint64_t prefix_nodes = 0;
    std::vector<Color> colors(m);
    auto expand = [&](auto&& self, std::size_t i, Color used) -> void {
        ++prefix_nodes;
        if (i == depth) {
            shards.push_back({std::vector<Color>(colors.begin(), colors.begin() + depth), used});
            return;
        }
        for (Color step = 0; step <= used; ++step) {
            const Color c = step == 0 ? used : step - 1;
            colors[i] = c;
            if (completes_rainbow(table, i, colors))
                continue;
            self(self, i + 1, c == used ? used + 1 : used);
        }
    };
    expand(expand, 0, 0);

    // One colour never yields a rainbow copy of a pattern with two or more edges.
    const std::size_t floor = 1;
    std::vector<ArShardResult> results(shards.size());
    run_shards(shards.size(), options.workers, [&](std::size_t s) {
        ArSearch search(table, floor);
        results[s] = search.run(shards[s]);
    });

    std::size_t best = floor;
    std::vector<Color> best_colors(m, 0);
    result.stats.nodes = prefix_nodes;
    for (const auto& res : results) {
        result.stats.nodes += res.nodes;
        if (res.improved && res.best > best) {
            best = res.best;
            best_colors = res.best_colors;
        }
    }
    result.stats.shards = shards.size();
    result.max_rainbow_free_colors = best;
    result.value = best + 1;
    result.witness = EdgeColoring(n, r, std::move(best_colors));
    result.witness_verified = true;
    for (const PatternSpec& spec : family)
        result.witness_verified =
            result.witness_verified && find_rainbow_copy(*result.witness, spec).status == SearchStatus::none;
    return result;
}

} // namespace hgar
