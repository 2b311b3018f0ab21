#include "hgar/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "hgar/binomial.hpp"
#include "search_engine.hpp"

namespace hgar {

EdgeColoring::EdgeColoring(unsigned n, unsigned r, std::vector<Color> color_of)
    : n_(n), r_(r), color_of_(std::move(color_of))
{
    if (r < 1 || r > n)
        throw std::invalid_argument("need 1 <= r <= n");
    if (color_of_.size() != binom(n, r))
        throw std::invalid_argument("colouring must assign a colour to all C(n,r) edges");
    Color top = 0;
    for (Color c : color_of_)
        top = std::max(top, c);
    classes_.assign(color_of_.empty() ? 0 : std::size_t{top} + 1, {});
    for (EdgeRank e = 0; e < color_of_.size(); ++e)
        classes_[color_of_[e]].push_back(e);
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c].empty())
            throw std::invalid_argument("colour " + std::to_string(c) + " is unused; colour ids must be dense");
}

EdgeColoring EdgeColoring::rainbow_all(unsigned n, unsigned r)
{
    std::vector<Color> colors(binom(n, r));
    for (std::size_t i = 0; i < colors.size(); ++i)
        colors[i] = static_cast<Color>(i);
    return EdgeColoring(n, r, std::move(colors));
}

EdgeColoring EdgeColoring::monochromatic(unsigned n, unsigned r)
{
    return EdgeColoring(n, r, std::vector<Color>(binom(n, r), 0));
}

bool is_rainbow(const EdgeColoring& coloring, std::span<const RSet> edges)
{
    std::vector<Color> seen;
    seen.reserve(edges.size());
    for (const RSet& e : edges)
        seen.push_back(coloring.color(e));
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

RainbowSearchReport find_rainbow_copy(const EdgeColoring& coloring, const PatternSpec& spec,
                                      const SearchOptions& options)
{
    if (options.budget == 0)
        throw std::invalid_argument("search budget must be positive");
    auto host = detail::SearchHost::from(Hypergraph::complete(coloring.n(), coloring.r()));
    host.colors.reserve(host.ranks.size());
    for (EdgeRank e : host.ranks)
        host.colors.push_back(coloring.color(e));
    return detail::run_search(host, spec, options);
}

Hypergraph representative_subgraph(const EdgeColoring& coloring)
{
    std::vector<EdgeRank> picks;
    picks.reserve(coloring.color_count());
    for (const auto& cls : coloring.classes())
        picks.push_back(cls.front());
    return Hypergraph(coloring.n(), coloring.r(), std::move(picks));
}

EdgeColoring read_coloring(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    unsigned n = 0;
    unsigned r = 0;
    std::uint64_t c = 0;
    std::vector<Color> color_of;
    std::vector<bool> assigned;
    while (std::getline(in, line)) {
        ++line_no;
        std::string spaced;
        for (char ch : line.substr(0, line.find('#'))) {
            if (ch == ':')
                spaced += " : ";
            else
                spaced += ch;
        }
        auto tokens = detail::tokenize(spaced);
        if (tokens.empty())
            continue;
        if (!have_header) {
            if (tokens.size() != 3)
                throw ParseError(line_no, "header must be 'n r c'");
            n = static_cast<unsigned>(detail::parse_uint(tokens[0], line_no));
            r = static_cast<unsigned>(detail::parse_uint(tokens[1], line_no));
            c = detail::parse_uint(tokens[2], line_no);
            if (r < 1 || r > n)
                throw ParseError(line_no, "need 1 <= r <= n");
            color_of.assign(binom(n, r), 0);
            assigned.assign(color_of.size(), false);
            have_header = true;
            continue;
        }
        if (tokens.size() != r + 2 || tokens[r] != ":")
            throw ParseError(line_no, "expected " + std::to_string(r) + " vertices, ':' and a colour");
        std::vector<Vertex> vs;
        for (unsigned i = 0; i < r; ++i) {
            auto v = detail::parse_uint(tokens[i], line_no);
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex " + tokens[i] + " outside [1, " + std::to_string(n) + "]");
            vs.push_back(static_cast<Vertex>(v - 1));
        }
        const auto color = detail::parse_uint(tokens[r + 1], line_no);
        if (color >= c)
            throw ParseError(line_no, "colour " + tokens[r + 1] + " not below declared count " + std::to_string(c));
        EdgeRank rank = 0;
        try {
            rank = rank_rset(RSet(std::move(vs)), n);
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (assigned[rank])
            throw ParseError(line_no, "edge listed twice");
        assigned[rank] = true;
        color_of[rank] = static_cast<Color>(color);
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'n r c' header");
    for (EdgeRank e = 0; e < assigned.size(); ++e)
        if (!assigned[e])
            throw ParseError(line_no, "edge " + unrank_rset(e, n, r).to_string() + " (0-based) has no colour");
    EdgeColoring out;
    try {
        out = EdgeColoring(n, r, std::move(color_of));
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    if (out.color_count() != c)
        throw ParseError(line_no, "header declares " + std::to_string(c) + " colours, file uses "
                                      + std::to_string(out.color_count()));
    return out;
}

void write_coloring(std::ostream& out, const EdgeColoring& coloring)
{
    out << coloring.n() << ' ' << coloring.r() << ' ' << coloring.color_count() << '\n';
    for (EdgeRank e = 0; e < coloring.edge_count(); ++e) {
        const RSet edge = unrank_rset(e, coloring.n(), coloring.r());
        for (Vertex v : edge)
            out << v + 1 << ' ';
        out << ": " << coloring.color(e) << '\n';
    }
}

EdgeColoring load_coloring(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_coloring(in);
}

void save_coloring(const std::string& path, const EdgeColoring& coloring)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    write_coloring(out, coloring);
}

} // namespace hgar
