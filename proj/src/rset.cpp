#include "hgar/rset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hgar/binomial.hpp"

namespace hgar {

RSet::RSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("r-set has a repeated vertex: " + to_string());
}

RSet::RSet(std::initializer_list<Vertex> vertices) : RSet(std::vector<Vertex>(vertices)) {}

bool RSet::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::uint64_t RSet::mask() const
{
    std::uint64_t m = 0;
    for (Vertex v : vertices_) {
        if (v >= max_vertices)
            throw std::out_of_range("vertex id does not fit a 64-bit mask");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

std::size_t RSet::intersection_size(const RSet& other) const
{
    std::size_t count = 0;
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

std::string RSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        os << (i ? "," : "") << vertices_[i];
    os << '}';
    return os.str();
}

void validate(const RSet& edge, unsigned n)
{
    if (edge.size() == 0)
        throw std::invalid_argument("empty r-set");
    if (edge.vertices().back() >= n)
        throw std::invalid_argument("vertex out of range in " + edge.to_string() + " for n=" + std::to_string(n));
}

EdgeRank rank_rset(const RSet& edge, unsigned n)
{
    validate(edge, n);
    EdgeRank rank = 0;
    for (std::size_t i = 0; i < edge.size(); ++i)
        rank += binom(edge[i], i + 1);
    return rank;
}

RSet unrank_rset(EdgeRank index, unsigned n, unsigned r)
{
    if (r == 0 || r > n || index >= binom(n, r))
        throw std::out_of_range("rank " + std::to_string(index) + " outside [0, C(" + std::to_string(n) + ","
                                + std::to_string(r) + "))");
    std::vector<Vertex> out(r);
    Vertex top = n;
    for (unsigned i = r; i-- > 0;) {
        // largest c < top with C(c, i+1) <= index
        Vertex c = top - 1;
        while (binom(c, i + 1) > index)
            --c;
        out[i] = c;
        index -= binom(c, i + 1);
        top = c;
    }
    return RSet(std::move(out));
}

RSet rset_from_mask(std::uint64_t mask)
{
    std::vector<Vertex> out;
    out.reserve(std::popcount(mask));
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return RSet(std::move(out));
}

} // namespace hgar
