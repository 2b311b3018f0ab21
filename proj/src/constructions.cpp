#include "hgar/constructions.hpp"

#include <stdexcept>

#include "hgar/binomial.hpp"

namespace hgar {

LBColoring lb_coloring(unsigned n, unsigned r, unsigned k)
{
    if (k < 4)
        throw std::domain_error("lower-bound colouring needs k >= 4");
    if (r < 2)
        throw std::domain_error("lower-bound colouring needs r >= 2");
    const unsigned t = k / 2;
    if (n < r + t)
        throw std::out_of_range("lower-bound colouring needs n >= r + t");

    LBColoring out;
    out.t = t;
    out.parity = k % 2 == 0 ? Parity::even : Parity::odd;
    for (Vertex v = 0; v + 1 < t; ++v)
        out.core.push_back(v);
    const std::uint64_t core_mask = t > 1 ? (std::uint64_t{1} << (t - 1)) - 1 : 0;

    const std::uint64_t total = binom(n, r);
    std::vector<Color> colors(total);
    std::vector<EdgeRank> remaining;
    Color next = 0;
    for (EdgeRank e = 0; e < total; ++e) {
        const RSet edge = unrank_rset(e, n, r);
        bool meets_core = false;
        for (Vertex v : edge)
            meets_core = meets_core || ((core_mask >> v) & 1U);
        if (meets_core)
            colors[e] = next++;
        else
            remaining.push_back(e);
    }
    const Vertex pivot = t - 1;
    for (EdgeRank e : remaining) {
        if (out.parity == Parity::even)
            colors[e] = next;
        else
            colors[e] = unrank_rset(e, n, r).contains(pivot) ? next : next + 1;
    }
    out.coloring = EdgeColoring(n, r, std::move(colors));
    out.colors_used = out.coloring.color_count();
    return out;
}

Hypergraph turan_extremal_loose(unsigned n, unsigned r, unsigned k)
{
    if (k < 4)
        throw std::domain_error("extremal loose construction needs k >= 4");
    const unsigned t = (k - 1) / 2;
    if (n < 2 * r + t)
        throw std::out_of_range("extremal loose construction needs n >= 2r + t");

    const std::uint64_t total = binom(n, r);
    std::vector<EdgeRank> edges;
    for (EdgeRank e = 0; e < total; ++e) {
        const RSet edge = unrank_rset(e, n, r);
        if (edge[0] < t)
            edges.push_back(e);
    }
    if (k % 2 == 0) {
        std::vector<Vertex> extra(r);
        for (unsigned i = 0; i < r; ++i)
            extra[i] = t + i;
        edges.push_back(rank_rset(RSet(std::move(extra)), n));
    }
    return Hypergraph(n, r, std::move(edges));
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::certified_rainbow_free:
        return "certified-rainbow-free";
    case Verdict::certified_f_free:
        return "certified-F-free";
    case Verdict::refuted:
        return "refuted";
    case Verdict::indeterminate:
        return "indeterminate";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& text)
{
    for (Verdict v : {Verdict::certified_rainbow_free, Verdict::certified_f_free, Verdict::refuted,
                      Verdict::indeterminate})
        if (to_string(v) == text)
            return v;
    throw std::invalid_argument("unknown verdict '" + text + "'");
}

namespace {

    template <class Search>
    Certificate certify(std::string kind, unsigned n, unsigned r, const std::vector<PatternSpec>& specs,
                        Verdict success, Search&& search)
    {
        if (specs.empty())
            throw std::invalid_argument("certificate needs at least one pattern");
        Certificate cert;
        cert.object_kind = std::move(kind);
        cert.n = n;
        cert.r = r;
        bool all_none = true;
        bool any_open = false;
        for (const PatternSpec& spec : specs) {
            SearchReport report = search(spec);
            if (report.status == SearchStatus::found && !cert.refutation)
                cert.refutation = report.witness;
            all_none = all_none && report.status == SearchStatus::none;
            any_open = any_open || report.status == SearchStatus::indeterminate;
            cert.checks.push_back({spec, std::move(report)});
        }
        if (cert.refutation)
            cert.verdict = Verdict::refuted;
        else if (any_open || !all_none)
            cert.verdict = Verdict::indeterminate;
        else
            cert.verdict = success;
        return cert;
    }

} // namespace

Certificate verify_construction(const EdgeColoring& coloring, const std::vector<PatternSpec>& specs,
                                const SearchOptions& options)
{
    return certify("coloring", coloring.n(), coloring.r(), specs, Verdict::certified_rainbow_free,
                   [&](const PatternSpec& spec) { return find_rainbow_copy(coloring, spec, options); });
}

Certificate verify_construction(const LBColoring& coloring, const std::vector<PatternSpec>& specs,
                                const SearchOptions& options)
{
    return verify_construction(coloring.coloring, specs, options);
}

Certificate verify_construction(const Hypergraph& h, const std::vector<PatternSpec>& specs,
                                const SearchOptions& options)
{
    return certify("hypergraph", h.n(), h.r(), specs, Verdict::certified_f_free,
                   [&](const PatternSpec& spec) { return find_copy(h, spec, options); });
}

nlohmann::json to_json(const Certificate& cert)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const SpecCheck& c : cert.checks) {
        nlohmann::json row{{"spec", c.spec},
                           {"status", to_string(c.report.status)},
                           {"nodes_expanded", c.report.nodes_expanded}};
        row["witness"] = c.report.witness ? nlohmann::json(*c.report.witness) : nlohmann::json(nullptr);
        checks.push_back(std::move(row));
    }
    return nlohmann::json{{"object", {{"kind", cert.object_kind}, {"n", cert.n}, {"r", cert.r}}},
                          {"checks", std::move(checks)},
                          {"verdict", to_string(cert.verdict)}};
}

} // namespace hgar
