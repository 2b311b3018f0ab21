#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "hgar/hypergraph.hpp"
#include "hgar/pattern.hpp"
#include "hgar/search.hpp"

namespace hgar::detail {

/// Host edges in rank order with vertex masks and per-vertex incidence by host index.
struct SearchHost {
    unsigned n = 0;
    unsigned r = 0;
    std::vector<EdgeRank> ranks;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<std::uint32_t>> incidence;
    std::vector<std::uint32_t> colors; ///< per host index; empty for uncoloured search

    static SearchHost from(const Hypergraph& h);
};

struct ShardOutcome {
    bool found = false;
    bool exhausted = false;
    bool cancelled = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> sequence;
};

class CopySearch {
public:
    CopySearch(const SearchHost& host, const PatternSpec& spec);

    /// Explores every sequence whose first edge is host index `first`.
    /// Stops at the first copy. Sets exhausted once more than `budget` nodes were needed.
    /// `cancel_below` aborts the shard when another shard with a smaller index already succeeded.
    ShardOutcome run_shard(std::uint32_t first, std::uint64_t budget,
                           const std::atomic<std::uint32_t>* cancel_below = nullptr);

    /// Visits every canonical copy rooted at `first`; stop by returning false.
    template <class Visit>
    bool enumerate_shard(std::uint32_t first, Visit&& visit)
    {
        budget_ = UINT64_MAX;
        nodes_ = 0;
        cancel_ = nullptr;
        shard_ = first;
        stop_ = false;
        place_first(first);
        dfs(1, [&]() { return visit(std::span<const std::uint32_t>(seq_)); });
        return !stop_;
    }

private:
    void place_first(std::uint32_t first);

    template <class OnCopy>
    void dfs(unsigned placed, OnCopy&& on_copy);

    const SearchHost& host_;
    PatternSpec spec_;
    std::vector<std::uint32_t> seq_;
    std::vector<std::uint64_t> prefix_;      ///< prefix_[p] = union of seq_[0..p-1]
    std::vector<std::uint64_t> prefix_tail_; ///< prefix_tail_[p] = union of seq_[1..p-1]
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint32_t shard_ = 0;
    const std::atomic<std::uint32_t>* cancel_ = nullptr;
    bool stop_ = false;
    bool exhausted_ = false;
    bool cancelled_ = false;
};

template <class OnCopy>
void CopySearch::dfs(unsigned placed, OnCopy&& on_copy)
{
    if (placed == spec_.k) {
        if (!on_copy())
            stop_ = true;
        return;
    }
    const bool cycle = spec_.shape == Shape::cycle;
    const bool linear = spec_.tightness == Tightness::linear;
    const bool closing = placed + 1 == spec_.k;
    const std::uint32_t first = seq_[0];
    const std::uint32_t prev = seq_[placed - 1];
    const std::uint64_t prev_mask = host_.masks[prev];
    const std::uint64_t forbidden = (cycle && closing) ? prefix_tail_[placed - 1] : prefix_[placed - 1];
    const std::uint64_t first_mask = host_.masks[first];
    const bool coloured = !host_.colors.empty();

    std::uint64_t through = prev_mask;
    while (through) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(through));
        through &= through - 1;
        const std::uint64_t lower = (std::uint64_t{1} << v) - 1;
        const auto& inc = host_.incidence[v];
        auto it = inc.begin();
        if (cycle)
            it = std::upper_bound(inc.begin(), inc.end(), first);
        for (; it != inc.end(); ++it) {
            const std::uint32_t c = *it;
            const std::uint64_t m = host_.masks[c];
            // count each candidate once, from its smallest vertex shared with prev
            if (m & prev_mask & lower)
                continue;
            if (c == prev || (m & forbidden))
                continue;
            if (linear && std::popcount(m & prev_mask) != 1)
                continue;
            if (closing) {
                if (!cycle && c <= first)
                    continue;
                if (cycle) {
                    if (c <= seq_[1])
                        continue;
                    const int wrap = std::popcount(m & first_mask);
                    if (wrap == 0 || (linear && wrap != 1))
                        continue;
                }
            }
            if (coloured) {
                const std::uint32_t colour = host_.colors[c];
                bool clash = false;
                for (unsigned i = 0; i < placed; ++i)
                    if (host_.colors[seq_[i]] == colour) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
            }
            if (++nodes_ > budget_) {
                exhausted_ = true;
                stop_ = true;
                return;
            }
            if (cancel_ && (nodes_ & 0xFFF) == 0 && cancel_->load(std::memory_order_relaxed) < shard_) {
                cancelled_ = true;
                stop_ = true;
                return;
            }
            seq_[placed] = c;
            prefix_[placed + 1] = prefix_[placed] | m;
            prefix_tail_[placed + 1] = prefix_tail_[placed] | m;
            dfs(placed + 1, on_copy);
            if (stop_)
                return;
        }
    }
}

/// Runs all first-edge shards and combines them as a sequential search would.
SearchReport run_search(const SearchHost& host, const PatternSpec& spec, const SearchOptions& options);

} // namespace hgar::detail
