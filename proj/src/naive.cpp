#include "hgar/naive.hpp"

#include <algorithm>

namespace hgar::naive {

namespace {

    std::size_t common(const std::set<unsigned>& a, const std::set<unsigned>& b)
    {
        std::size_t c = 0;
        for (unsigned v : a)
            c += b.count(v);
        return c;
    }

    bool satisfies(const std::vector<const std::set<unsigned>*>& tuple, const PatternSpec& spec)
    {
        const std::size_t k = tuple.size();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j)
                    continue;
                std::size_t gap = i > j ? i - j : j - i;
                bool adjacent = gap == 1;
                if (spec.shape == Shape::cycle && gap == k - 1)
                    adjacent = true;
                const std::size_t c = common(*tuple[i], *tuple[j]);
                if (adjacent) {
                    if (c == 0)
                        return false;
                    if (spec.tightness == Tightness::linear && c != 1)
                        return false;
                }
                else if (c != 0) {
                    return false;
                }
            }
        }
        return true;
    }

} // namespace

bool contains_copy(const std::vector<std::set<unsigned>>& edges, const PatternSpec& spec,
                   const std::vector<unsigned>* colors)
{
    const std::size_t m = edges.size();
    const std::size_t k = spec.k;
    if (m < k)
        return false;
    std::vector<std::size_t> idx(k, 0);
    std::vector<const std::set<unsigned>*> tuple(k);
    // odometer over all ordered k-tuples of edge indices
    for (;;) {
        bool distinct = true;
        for (std::size_t i = 0; i < k && distinct; ++i)
            for (std::size_t j = i + 1; j < k && distinct; ++j)
                distinct = idx[i] != idx[j];
        if (distinct && colors)
            for (std::size_t i = 0; i < k && distinct; ++i)
                for (std::size_t j = i + 1; j < k && distinct; ++j)
                    distinct = (*colors)[idx[i]] != (*colors)[idx[j]];
        if (distinct) {
            for (std::size_t i = 0; i < k; ++i)
                tuple[i] = &edges[idx[i]];
            if (satisfies(tuple, spec))
                return true;
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < m)
                break;
            idx[pos] = 0;
            if (pos == 0)
                return false;
        }
    }
}

std::vector<std::set<unsigned>> all_rsets(unsigned n, unsigned r)
{
    std::vector<std::set<unsigned>> out;
    if (r > n)
        return out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
        std::set<unsigned> s;
        for (unsigned v = 0; v < n; ++v)
            if (pick[v])
                s.insert(v);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::optional<unsigned> min_host_size(unsigned r, const PatternSpec& spec, unsigned n_max)
{
    for (unsigned n = r; n <= n_max; ++n)
        if (contains_copy(all_rsets(n, r), spec))
            return n;
    return std::nullopt;
}

} // namespace hgar::naive
