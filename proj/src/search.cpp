#include "hgar/search.hpp"

#include <mutex>
#include <thread>

#include "search_engine.hpp"

namespace hgar {

std::string to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::none:
        return "none";
    case SearchStatus::indeterminate:
        return "indeterminate";
    }
    return "?";
}

namespace detail {

SearchHost SearchHost::from(const Hypergraph& h)
{
    if (h.n() > max_vertices)
        throw std::invalid_argument("search supports at most 64 vertices");
    SearchHost host;
    host.n = h.n();
    host.r = h.r();
    host.ranks = h.edge_ranks();
    host.masks.reserve(host.ranks.size());
    host.incidence.assign(h.n(), {});
    for (std::uint32_t i = 0; i < host.ranks.size(); ++i) {
        const RSet e = h.edge(host.ranks[i]);
        host.masks.push_back(e.mask());
        for (Vertex v : e)
            host.incidence[v].push_back(i);
    }
    return host;
}

CopySearch::CopySearch(const SearchHost& host, const PatternSpec& spec)
    : host_(host), spec_(spec), seq_(spec.k), prefix_(spec.k + 1), prefix_tail_(spec.k + 1)
{
}

void CopySearch::place_first(std::uint32_t first)
{
    seq_[0] = first;
    prefix_[0] = 0;
    prefix_[1] = host_.masks[first];
    prefix_tail_[0] = 0;
    prefix_tail_[1] = 0;
}

ShardOutcome CopySearch::run_shard(std::uint32_t first, std::uint64_t budget,
                                   const std::atomic<std::uint32_t>* cancel_below)
{
    budget_ = budget;
    nodes_ = 0;
    shard_ = first;
    cancel_ = cancel_below;
    stop_ = false;
    exhausted_ = false;
    cancelled_ = false;

    ShardOutcome out;
    if (++nodes_ > budget_) {
        out.exhausted = true;
        out.nodes = nodes_;
        return out;
    }
    place_first(first);
    dfs(1, [&]() {
        out.found = true;
        out.sequence = seq_;
        return false;
    });
    out.exhausted = exhausted_;
    out.cancelled = cancelled_;
    out.nodes = nodes_;
    return out;
}

namespace {

    SearchReport assemble(const SearchHost& host, const PatternSpec& spec, const ShardOutcome& out,
                          std::uint64_t nodes)
    {
        SearchReport report;
        report.status = SearchStatus::found;
        report.nodes_expanded = nodes;
        CopyWitness w{spec, {}};
        for (std::uint32_t idx : out.sequence)
            w.edges.push_back(unrank_rset(host.ranks[idx], host.n, host.r));
        report.witness = std::move(w);
        return report;
    }

} // namespace

SearchReport run_search(const SearchHost& host, const PatternSpec& spec, const SearchOptions& options)
{
    const auto shard_count = static_cast<std::uint32_t>(host.ranks.size());
    const std::uint64_t budget = options.budget;

    if (options.workers <= 1) {
        CopySearch search(host, spec);
        std::uint64_t used = 0;
        for (std::uint32_t s = 0; s < shard_count; ++s) {
            ShardOutcome out = search.run_shard(s, budget - used);
            if (out.exhausted)
                return {SearchStatus::indeterminate, std::nullopt, budget};
            used += out.nodes;
            if (out.found)
                return assemble(host, spec, out, used);
        }
        return {SearchStatus::none, std::nullopt, used};
    }

    // Every shard runs with the full budget; the sequential combination below
    // reproduces the single-worker answer exactly.
    std::vector<ShardOutcome> outcomes(shard_count);
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint32_t> lowest_found{UINT32_MAX};
    auto worker = [&]() {
        CopySearch search(host, spec);
        for (;;) {
            const std::uint32_t s = next.fetch_add(1);
            if (s >= shard_count)
                return;
            if (lowest_found.load() < s) {
                outcomes[s].cancelled = true;
                continue;
            }
            outcomes[s] = search.run_shard(s, budget, &lowest_found);
            if (outcomes[s].found) {
                std::uint32_t cur = lowest_found.load();
                while (s < cur && !lowest_found.compare_exchange_weak(cur, s)) {
                }
            }
        }
    };
    std::vector<std::thread> threads;
    const unsigned workers = std::min<unsigned>(options.workers, std::max<std::uint32_t>(shard_count, 1));
    for (unsigned i = 0; i < workers; ++i)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();

    std::uint64_t used = 0;
    for (std::uint32_t s = 0; s < shard_count; ++s) {
        const ShardOutcome& out = outcomes[s];
        if (out.exhausted || used + out.nodes > budget)
            return {SearchStatus::indeterminate, std::nullopt, budget};
        used += out.nodes;
        if (out.found)
            return assemble(host, spec, out, used);
    }
    return {SearchStatus::none, std::nullopt, used};
}

} // namespace detail

SearchReport find_copy(const Hypergraph& h, const PatternSpec& spec, const SearchOptions& options)
{
    if (options.budget == 0)
        throw std::invalid_argument("search budget must be positive");
    return detail::run_search(detail::SearchHost::from(h), spec, options);
}

void for_each_copy(const Hypergraph& h, const PatternSpec& spec,
                   const std::function<bool(std::span<const EdgeRank>)>& visit)
{
    const auto host = detail::SearchHost::from(h);
    detail::CopySearch search(host, spec);
    std::vector<EdgeRank> ranks(spec.k);
    for (std::uint32_t s = 0; s < host.ranks.size(); ++s) {
        const bool go_on = search.enumerate_shard(s, [&](std::span<const std::uint32_t> seq) {
            for (std::size_t i = 0; i < seq.size(); ++i)
                ranks[i] = host.ranks[seq[i]];
            return visit(ranks);
        });
        if (!go_on)
            return;
    }
}

} // namespace hgar
