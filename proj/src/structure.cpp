#include "hgar/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hgar/binomial.hpp"
#include "hgar/random.hpp"

namespace hgar {

namespace {

    std::vector<Vertex> validated_core(const Hypergraph& h, std::span<const Vertex> core)
    {
        std::vector<Vertex> out(core.begin(), core.end());
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw std::invalid_argument("core has a repeated vertex");
        if (!out.empty() && out.back() >= h.n())
            throw std::invalid_argument("core vertex out of range");
        return out;
    }

    std::uint64_t small_threshold(const Hypergraph& h, std::uint64_t tau)
    {
        if (h.r() < 3)
            throw std::domain_error("tau-small pairs are defined for r >= 3");
        const BigInt t = BigInt(tau) * binom_big(h.n(), h.r() - 3);
        return t > BigInt(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(t);
    }

    /// Calls fn with every size-k subset of pool (pool sorted), in lexicographic order.
    template <class Fn>
    void for_each_subset(const std::vector<Vertex>& pool, std::size_t k, Fn&& fn)
    {
        if (k > pool.size())
            return;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
        std::vector<Vertex> subset(k);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i)
                subset[i] = pool[idx[i]];
            fn(subset);
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == pool.size() - k + pos - 1)
                --pos;
            if (pos == 0)
                return;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }

    std::uint64_t mask_of(std::span<const Vertex> vs)
    {
        std::uint64_t m = 0;
        for (Vertex v : vs)
            m |= std::uint64_t{1} << v;
        return m;
    }

} // namespace

std::vector<std::pair<Vertex, Vertex>> tau_small_pairs(const Hypergraph& h, std::span<const Vertex> core,
                                                       std::uint64_t tau)
{
    const auto l = validated_core(h, core);
    const std::uint64_t threshold = small_threshold(h, tau);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u : l)
        for (Vertex v = 0; v < h.n(); ++v)
            if (!std::binary_search(l.begin(), l.end(), v) && pair_degree(h, u, v) <= threshold)
                out.emplace_back(u, v);
    return out;
}

std::size_t small_degree(const Hypergraph& h, std::span<const Vertex> core, std::uint64_t tau, Vertex v)
{
    const auto l = validated_core(h, core);
    if (std::binary_search(l.begin(), l.end(), v))
        throw std::domain_error("small degree is defined for vertices outside the core");
    if (v >= h.n())
        throw std::invalid_argument("vertex out of range");
    const std::uint64_t threshold = small_threshold(h, tau);
    std::size_t count = 0;
    for (Vertex u : l)
        count += pair_degree(h, u, v) <= threshold;
    return count;
}

CoreDecomposition decompose(const Hypergraph& h, std::span<const Vertex> core, std::uint64_t tau)
{
    CoreDecomposition d;
    d.core = validated_core(h, core);
    d.tau = tau;
    for (Vertex v = 0; v < h.n(); ++v) {
        if (std::binary_search(d.core.begin(), d.core.end(), v))
            continue;
        (small_degree(h, d.core, tau, v) >= 1 ? d.s : d.s_bar).push_back(v);
    }
    return d;
}

EdgeClassCounts edge_class_counts(const Hypergraph& h, std::span<const Vertex> core, std::span<const Vertex> s_bar)
{
    if (h.n() > max_vertices)
        throw std::invalid_argument("edge class counts support at most 64 vertices");
    const auto l = validated_core(h, core);
    const std::uint64_t core_mask = mask_of(l);
    const std::uint64_t s_bar_mask = mask_of(s_bar);
    if (core_mask & s_bar_mask)
        throw std::domain_error("S-bar must be disjoint from the core");
    const std::uint64_t all = h.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.n()) - 1;
    const std::uint64_t s_mask = all & ~core_mask & ~s_bar_mask;

    EdgeClassCounts out;
    out.by_s_bar.assign(h.r() + 1, 0);
    std::vector<RSet> e1;
    h.edge_set().for_each([&](EdgeRank rank) {
        const RSet e = h.edge(rank);
        const std::uint64_t m = e.mask();
        const int in_core = std::popcount(m & core_mask);
        if (in_core == 1)
            ++out.cross;
        if (in_core == 0) {
            ++out.reduced_edges;
            const int in_s_bar = std::popcount(m & s_bar_mask);
            ++out.by_s_bar[in_s_bar];
            if (in_s_bar == 1)
                e1.push_back(e);
        }
    });

    std::vector<Vertex> outside;
    for (Vertex v = 0; v < h.n(); ++v)
        if (!((core_mask >> v) & 1U))
            outside.push_back(v);
    for (Vertex u : l)
        for_each_subset(outside, h.r() - 1, [&](const std::vector<Vertex>& rest) {
            std::vector<Vertex> vs = rest;
            vs.push_back(u);
            if (!h.contains(RSet(std::move(vs))))
                ++out.missing;
        });

    std::vector<Vertex> s;
    for (Vertex v = 0; v < h.n(); ++v)
        if ((s_mask >> v) & 1U)
            s.push_back(v);
    const ShadowDegreeSplit split = shadow_degree_split(e1, s);
    out.f1 = split.f1.size();
    out.f2plus = split.f2plus.size();

    const std::uint64_t expected = l.size() * binom(h.n() - l.size(), h.r() - 1);
    std::size_t partition_total = 0;
    for (std::size_t c : out.by_s_bar)
        partition_total += c;
    if (out.cross + out.missing != expected)
        throw std::logic_error("cross + missing != |L| C(n-|L|, r-1)");
    if (partition_total != out.reduced_edges)
        throw std::logic_error("edge classes do not partition H - L");
    if (split.degree_sum != e1.size())
        throw std::logic_error("shadow degrees do not sum to |E_1|");
    return out;
}

ShadowDegreeSplit shadow_degree_split(const std::vector<RSet>& e1, std::span<const Vertex> s)
{
    std::set<Vertex> inside(s.begin(), s.end());
    std::map<RSet, std::size_t> degree;
    for (const RSet& e : e1) {
        std::vector<Vertex> part;
        for (Vertex v : e)
            if (inside.count(v))
                part.push_back(v);
        if (part.size() + 1 != e.size())
            throw std::domain_error("edge " + e.to_string() + " does not have exactly one vertex outside S");
        ++degree[RSet(std::move(part))];
    }
    ShadowDegreeSplit out;
    for (const auto& [f, d] : degree) {
        (d == 1 ? out.f1 : out.f2plus).push_back(f);
        out.degree_sum += d;
    }
    return out;
}

ExtensionResult extend_rainbow(const EdgeColoring& coloring, const Hypergraph& h, std::span<const Vertex> core,
                               const CopyWitness& path, Shape mode, unsigned i)
{
    const unsigned n = coloring.n();
    const unsigned r = coloring.r();
    if (h.n() != n || h.r() != r)
        throw PreconditionError("H must be a subgraph of the coloured complete r-graph");
    if (n > max_vertices)
        throw PreconditionError("at most 64 vertices are supported");
    const auto l = validated_core(h, core);
    const unsigned t = static_cast<unsigned>(l.size());
    if (t == 0)
        throw PreconditionError("core must be nonempty");
    if (i < 1 || i > t)
        throw PreconditionError("i must lie in [1, t]");
    if (path.spec.shape != Shape::path || path.spec.tightness != Tightness::loose)
        throw PreconditionError("F must be given as a loose path");
    if (!classify_sequence(path.edges, path.spec))
        throw PreconditionError("F is not a loose path: " + classify_sequence(path.edges, path.spec).reason);
    const std::uint64_t core_mask = mask_of(l);
    for (const RSet& e : path.edges) {
        if (!h.contains(e))
            throw PreconditionError("F edge " + e.to_string() + " is not an edge of H");
        if (e.mask() & core_mask)
            throw PreconditionError("F edge " + e.to_string() + " meets the core");
    }
    if (!is_rainbow(coloring, path.edges))
        throw PreconditionError("F is not rainbow");
    if (!is_rainbow(coloring, h.edges()))
        throw PreconditionError("H is not rainbow");

    const unsigned ell = path.spec.k;
    const std::uint64_t tau = std::uint64_t{r} * (ell + 2 * t);
    const CoreDecomposition d = decompose(h, l, tau);
    if (2 * d.s.size() > n)
        throw PreconditionError("|S| exceeds n/2");
    std::uint64_t s_bar_mask = mask_of(d.s_bar);
    auto in_s_bar = [&](Vertex v) { return (s_bar_mask >> v) & 1U; };

    const EndData ends = end_data(path);
    std::vector<RSet> f = path.edges;
    Vertex x = 0;
    std::optional<Vertex> y;
    if (mode == Shape::cycle) {
        auto it = std::find_if(ends.end_pairs.begin(), ends.end_pairs.end(),
                               [&](const auto& p) { return in_s_bar(p.first) && in_s_bar(p.second); });
        if (it == ends.end_pairs.end())
            throw PreconditionError("no end pair of F lies in S-bar");
        x = f.front().contains(it->first) ? it->first : it->second;
        y = x == it->first ? it->second : it->first;
    }
    else {
        auto it = std::find_if(ends.end_points.begin(), ends.end_points.end(), in_s_bar);
        if (it == ends.end_points.end())
            throw PreconditionError("no end point of F lies in S-bar");
        x = *it;
        // the extension leaves F through its last edge
        if (f.front().contains(x))
            std::reverse(f.begin(), f.end());
    }

    std::uint64_t f_mask = 0;
    for (const RSet& e : f)
        f_mask |= e.mask();
    std::vector<Vertex> fresh;
    for (Vertex v : d.s_bar)
        if (!((f_mask >> v) & 1U) && fresh.size() < t)
            fresh.push_back(v);
    if (fresh.size() < t)
        return ConstructiveFailure{"fewer than t vertices of S-bar lie outside F", std::nullopt, 0};

    // x, v_1, u_1, v_2, ..., u_{i-1}, v_i, then y (cycle) or u_i (path)
    std::vector<Vertex> chain{x};
    for (unsigned j = 0; j < i; ++j) {
        chain.push_back(l[j]);
        if (j + 1 < i)
            chain.push_back(fresh[j]);
    }
    chain.push_back(mode == Shape::cycle ? *y : fresh[i - 1]);

    std::uint64_t used = f_mask | core_mask | mask_of(fresh) | (std::uint64_t{1} << x);
    std::vector<Color> used_colors;
    for (const RSet& e : f)
        used_colors.push_back(coloring.color(e));

    std::vector<RSet> bridge;
    for (std::size_t step = 0; step + 1 < chain.size(); ++step) {
        const Vertex a = chain[step];
        const Vertex b = chain[step + 1];
        const std::uint64_t pair_mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        std::optional<RSet> pick;
        for (EdgeRank rank : h.incidence(a)) {
            RSet e = h.edge(rank);
            const std::uint64_t m = e.mask();
            if ((m & pair_mask) != pair_mask || (m & ~pair_mask & used))
                continue;
            const Color c = coloring.color(rank);
            if (std::find(used_colors.begin(), used_colors.end(), c) != used_colors.end())
                continue;
            pick = std::move(e);
            break;
        }
        if (!pick)
            return ConstructiveFailure{"no edge of H through the pair avoids the used vertices and colours",
                                       std::make_pair(std::min(a, b), std::max(a, b)),
                                       static_cast<unsigned>(step + 1)};
        used |= pick->mask();
        used_colors.push_back(coloring.color(*pick));
        bridge.push_back(std::move(*pick));
    }

    CopyWitness out{PatternSpec::make(mode, Tightness::loose, ell + 2 * i), f};
    if (mode == Shape::cycle) {
        if (!f.front().contains(x))
            std::reverse(out.edges.begin(), out.edges.end());
        out.edges.insert(out.edges.end(), bridge.rbegin(), bridge.rend());
    }
    else {
        out.edges.insert(out.edges.end(), bridge.begin(), bridge.end());
    }
    if (!classify_sequence(out.edges, out.spec) || !is_rainbow(coloring, out.edges))
        throw std::logic_error("extension produced an invalid witness");
    return out;
}

std::vector<Vertex> greedy_core_detect(const Hypergraph& h, unsigned t)
{
    if (t >= h.n())
        throw std::invalid_argument("core size must be below n");
    if (h.n() > max_vertices)
        throw std::invalid_argument("greedy core detection supports at most 64 vertices");
    std::vector<std::uint64_t> masks;
    h.edge_set().for_each([&](EdgeRank e) { masks.push_back(h.edge(e).mask()); });

    std::uint64_t chosen = 0;
    std::vector<Vertex> core;
    for (unsigned step = 0; step < t; ++step) {
        Vertex best = 0;
        std::size_t best_cross = 0;
        bool have = false;
        for (Vertex v = 0; v < h.n(); ++v) {
            if ((chosen >> v) & 1U)
                continue;
            const std::uint64_t trial = chosen | (std::uint64_t{1} << v);
            std::size_t cross = 0;
            for (std::uint64_t m : masks)
                cross += std::popcount(m & trial) == 1;
            if (!have || cross > best_cross) {
                best = v;
                best_cross = cross;
                have = true;
            }
        }
        chosen |= std::uint64_t{1} << best;
        core.push_back(best);
    }
    std::sort(core.begin(), core.end());
    return core;
}

PlantedInstance planted_instance(std::uint64_t seed, unsigned n, unsigned r, unsigned t, unsigned ell)
{
    if (r < 3 || t < 1 || ell < 2 || n > max_vertices || n < 2 * t + r * ell + 8)
        throw std::invalid_argument("planted instance parameters out of range");
    Rng rng(seed);
    const std::uint64_t tau = std::uint64_t{r} * (ell + 2 * t);

    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v)
        order[v] = v;
    rng.shuffle(order);
    std::vector<Vertex> core(order.begin(), order.begin() + t);
    std::sort(core.begin(), core.end());
    const std::uint64_t core_mask = mask_of(core);

    // a few starved pairs (u in L, s outside) push s into S
    std::vector<std::pair<Vertex, Vertex>> starved;
    const std::size_t starve_count = 1 + rng.below(3);
    for (std::size_t j = 0; j < starve_count; ++j)
        starved.emplace_back(core[rng.below(t)], order[t + j]);

    const std::uint64_t total = binom(n, r);
    std::vector<EdgeRank> edges;
    std::vector<bool> in_h(total, false);
    for (EdgeRank e = 0; e < total; ++e) {
        const std::uint64_t m = unrank_rset(e, n, r).mask();
        if (!(m & core_mask))
            continue;
        bool keep = true;
        for (const auto& [u, s] : starved)
            if (((m >> u) & 1U) && ((m >> s) & 1U))
                keep = false;
        if (keep && rng.chance(0.9)) {
            edges.push_back(e);
            in_h[e] = true;
        }
    }
    const Hypergraph core_part(n, r, edges);
    const CoreDecomposition d = decompose(core_part, core, tau);

    // loose path in H - L whose first and last edges end in x, y from S-bar
    std::vector<Vertex> s_bar = d.s_bar;
    rng.shuffle(s_bar);
    const Vertex x = s_bar[0];
    const Vertex y = s_bar[1];
    std::vector<Vertex> pool;
    for (Vertex v : order)
        if (!((core_mask >> v) & 1U) && v != x && v != y)
            pool.push_back(v);
    std::size_t next_fresh = 0;
    auto fresh = [&]() { return pool.at(next_fresh++); };

    std::vector<std::vector<Vertex>> path_edges;
    std::vector<Vertex> first{x};
    while (first.size() < r)
        first.push_back(fresh());
    path_edges.push_back(first);
    std::vector<Vertex> carry(first.begin() + 1, first.end()); // vertices eligible for the next overlap
    for (unsigned j = 1; j < ell; ++j) {
        const std::size_t most = std::min<std::size_t>(r - 1, carry.size());
        const std::size_t overlap = 1 + rng.below(most);
        rng.shuffle(carry);
        std::vector<Vertex> e(carry.begin(), carry.begin() + overlap);
        std::vector<Vertex> added;
        if (j + 1 == ell)
            added.push_back(y);
        while (e.size() + added.size() < r)
            added.push_back(fresh());
        e.insert(e.end(), added.begin(), added.end());
        path_edges.push_back(e);
        carry = added;
        if (j + 1 == ell)
            carry.erase(carry.begin());
    }
    CopyWitness path{PatternSpec::loose_path(ell), {}};
    for (auto& e : path_edges) {
        path.edges.emplace_back(e);
        const EdgeRank rank = rank_rset(path.edges.back(), n);
        if (!in_h[rank]) {
            edges.push_back(rank);
            in_h[rank] = true;
        }
    }

    // noise inside H - L
    for (std::size_t j = 0; j < 3 * n; ++j) {
        const EdgeRank e = rng.below(total);
        if (!in_h[e] && !(unrank_rset(e, n, r).mask() & core_mask)) {
            edges.push_back(e);
            in_h[e] = true;
        }
    }

    // H is rainbow; the other edges reuse H's colours or a few extra ones
    std::vector<Color> colors(total, 0);
    std::vector<Color> h_colors(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j)
        h_colors[j] = static_cast<Color>(j);
    rng.shuffle(h_colors);
    for (std::size_t j = 0; j < edges.size(); ++j)
        colors[edges[j]] = h_colors[j];
    std::vector<EdgeRank> others;
    for (EdgeRank e = 0; e < total; ++e)
        if (!in_h[e])
            others.push_back(e);
    rng.shuffle(others);
    const std::size_t extra = std::min<std::size_t>(5, others.size());
    const Color palette = static_cast<Color>(edges.size() + extra);
    for (std::size_t j = 0; j < others.size(); ++j)
        colors[others[j]] = j < extra ? static_cast<Color>(edges.size() + j) : static_cast<Color>(rng.below(palette));

    PlantedInstance out;
    out.coloring = EdgeColoring(n, r, std::move(colors));
    out.h = Hypergraph(n, r, std::move(edges));
    out.core = core;
    out.path = std::move(path);
    out.tau = tau;
    return out;
}

} // namespace hgar
