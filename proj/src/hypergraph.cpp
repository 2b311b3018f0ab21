#include "hgar/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "hgar/binomial.hpp"

namespace hgar {

EdgeSet::EdgeSet(std::uint64_t universe, std::vector<EdgeRank> ranks) : universe_(universe)
{
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
        throw std::invalid_argument("duplicate edge");
    if (!ranks.empty() && ranks.back() >= universe)
        throw std::invalid_argument("edge rank outside the complete r-graph");
    size_ = ranks.size();
    dense_ = size_ * 64 >= universe_ && universe_ > 0;
    if (dense_) {
        bits_.assign((universe_ + 63) / 64, 0);
        for (EdgeRank e : ranks)
            bits_[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    else {
        sparse_ = std::move(ranks);
    }
}

bool EdgeSet::contains(EdgeRank rank) const
{
    if (rank >= universe_)
        return false;
    if (dense_)
        return (bits_[rank / 64] >> (rank % 64)) & 1U;
    return std::binary_search(sparse_.begin(), sparse_.end(), rank);
}

std::vector<EdgeRank> EdgeSet::ranks() const
{
    if (!dense_)
        return sparse_;
    std::vector<EdgeRank> out;
    out.reserve(size_);
    for_each([&](EdgeRank e) { out.push_back(e); });
    return out;
}

Hypergraph::Hypergraph(unsigned n, unsigned r, std::vector<EdgeRank> ranks) : n_(n), r_(r)
{
    if (r < 1)
        throw std::invalid_argument("uniformity must be positive");
    if (r > n)
        throw std::invalid_argument("uniformity exceeds vertex count");
    edges_ = EdgeSet(binom(n, r), std::move(ranks));
    incidence_.assign(n, {});
    edges_.for_each([&](EdgeRank e) {
        for (Vertex v : unrank_rset(e, n_, r_))
            incidence_[v].push_back(e);
    });
}

Hypergraph Hypergraph::complete(unsigned n, unsigned r)
{
    std::vector<EdgeRank> all(binom(n, r));
    for (EdgeRank i = 0; i < all.size(); ++i)
        all[i] = i;
    return Hypergraph(n, r, std::move(all));
}

Hypergraph Hypergraph::from_rsets(unsigned n, unsigned r, const std::vector<RSet>& edges)
{
    std::vector<EdgeRank> ranks;
    ranks.reserve(edges.size());
    for (const RSet& e : edges) {
        if (e.size() != r)
            throw std::invalid_argument("edge " + e.to_string() + " does not have " + std::to_string(r) + " vertices");
        ranks.push_back(rank_rset(e, n));
    }
    return Hypergraph(n, r, std::move(ranks));
}

std::vector<RSet> Hypergraph::edges() const
{
    std::vector<RSet> out;
    out.reserve(edge_count());
    edges_.for_each([&](EdgeRank e) { out.push_back(unrank_rset(e, n_, r_)); });
    return out;
}

bool Hypergraph::contains(const RSet& edge) const
{
    if (edge.size() != r_ || edge.size() == 0 || edge.vertices().back() >= n_)
        return false;
    return edges_.contains(rank_rset(edge, n_));
}

bool Hypergraph::operator==(const Hypergraph& other) const
{
    return n_ == other.n_ && r_ == other.r_ && edge_ranks() == other.edge_ranks();
}

Hypergraph shadow(const Hypergraph& h)
{
    if (h.r() < 2)
        throw std::invalid_argument("shadow needs uniformity at least 2");
    std::vector<EdgeRank> out;
    h.edge_set().for_each([&](EdgeRank e) {
        RSet edge = h.edge(e);
        for (std::size_t skip = 0; skip < edge.size(); ++skip) {
            std::vector<Vertex> sub;
            sub.reserve(edge.size() - 1);
            for (std::size_t i = 0; i < edge.size(); ++i)
                if (i != skip)
                    sub.push_back(edge[i]);
            out.push_back(rank_rset(RSet(std::move(sub)), h.n()));
        }
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph(h.n(), h.r() - 1, std::move(out));
}

std::size_t pair_degree(const Hypergraph& h, Vertex u, Vertex v)
{
    if (u == v)
        throw std::domain_error("pair degree needs two distinct vertices");
    if (u >= h.n() || v >= h.n())
        throw std::invalid_argument("vertex out of range");
    const auto& a = h.incidence(u);
    const auto& b = h.incidence(v);
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace detail {

std::vector<std::string> tokenize(const std::string& line)
{
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

unsigned long long parse_uint(const std::string& token, std::size_t line)
{
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    try {
        return std::stoull(token);
    }
    catch (const std::exception&) {
        throw ParseError(line, "integer out of range: '" + token + "'");
    }
}

} // namespace detail

Hypergraph read_hypergraph(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    unsigned n = 0;
    unsigned r = 0;
    std::vector<EdgeRank> ranks;
    std::unordered_set<EdgeRank> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::tokenize(line);
        if (tokens.empty())
            continue;
        if (!have_header) {
            if (tokens.size() != 2)
                throw ParseError(line_no, "header must be 'n r'");
            n = static_cast<unsigned>(detail::parse_uint(tokens[0], line_no));
            r = static_cast<unsigned>(detail::parse_uint(tokens[1], line_no));
            if (r < 1 || r > n)
                throw ParseError(line_no, "need 1 <= r <= n");
            have_header = true;
            continue;
        }
        if (tokens.size() != r)
            throw ParseError(line_no, "edge must list exactly " + std::to_string(r) + " vertices");
        std::vector<Vertex> vs;
        for (const auto& t : tokens) {
            auto v = detail::parse_uint(t, line_no);
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex " + t + " outside [1, " + std::to_string(n) + "]");
            vs.push_back(static_cast<Vertex>(v - 1));
        }
        EdgeRank rank = 0;
        try {
            rank = rank_rset(RSet(std::move(vs)), n);
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (!seen.insert(rank).second)
            throw ParseError(line_no, "duplicate edge");
        ranks.push_back(rank);
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'n r' header");
    return Hypergraph(n, r, std::move(ranks));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << h.n() << ' ' << h.r() << '\n';
    h.edge_set().for_each([&](EdgeRank e) {
        RSet edge = h.edge(e);
        for (std::size_t i = 0; i < edge.size(); ++i)
            out << (i ? " " : "") << edge[i] + 1;
        out << '\n';
    });
}

Hypergraph load_hypergraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_hypergraph(in);
}

void save_hypergraph(const std::string& path, const Hypergraph& h)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    write_hypergraph(out, h);
}

} // namespace hgar
