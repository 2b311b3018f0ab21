#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgar/rset.hpp"

namespace hgar {

/// Edge ranks of an r-graph. Stored as a bitset over [0, C(n,r)) when at least
/// 1/64 of all r-sets are present, as a sorted rank list otherwise.
class EdgeSet {
public:
    EdgeSet() = default;
    /// Throws std::invalid_argument on a duplicate or out-of-universe rank.
    EdgeSet(std::uint64_t universe, std::vector<EdgeRank> ranks);

    std::uint64_t universe() const { return universe_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool dense() const { return dense_; }
    bool contains(EdgeRank rank) const;

    /// Ascending ranks.
    std::vector<EdgeRank> ranks() const;

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        if (!dense_) {
            for (EdgeRank e : sparse_)
                fn(e);
            return;
        }
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                fn(static_cast<EdgeRank>(w * 64 + static_cast<unsigned>(std::countr_zero(word))));
                word &= word - 1;
            }
        }
    }

private:
    std::uint64_t universe_ = 0;
    std::size_t size_ = 0;
    bool dense_ = false;
    std::vector<std::uint64_t> bits_;
    std::vector<EdgeRank> sparse_;
};

/// An r-uniform hypergraph on vertices [0, n). Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(unsigned n, unsigned r, std::vector<EdgeRank> ranks);

    static Hypergraph complete(unsigned n, unsigned r);
    static Hypergraph from_rsets(unsigned n, unsigned r, const std::vector<RSet>& edges);

    unsigned n() const { return n_; }
    unsigned r() const { return r_; }
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeSet& edge_set() const { return edges_; }
    std::vector<EdgeRank> edge_ranks() const { return edges_.ranks(); }
    std::vector<RSet> edges() const;

    bool contains(EdgeRank rank) const { return edges_.contains(rank); }
    bool contains(const RSet& edge) const;

    /// Sorted ranks of the edges through v.
    const std::vector<EdgeRank>& incidence(Vertex v) const { return incidence_.at(v); }

    RSet edge(EdgeRank rank) const { return unrank_rset(rank, n_, r_); }

    bool operator==(const Hypergraph& other) const;

private:
    unsigned n_ = 0;
    unsigned r_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<EdgeRank>> incidence_;
};

/// The (r-1)-graph of all (r-1)-subsets of edges of h.
Hypergraph shadow(const Hypergraph& h);

/// Number of edges containing both u and v. Throws std::domain_error when u == v.
std::size_t pair_degree(const Hypergraph& h, Vertex u, Vertex v);

/// Parse failure with the 1-based line where it happened.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Text format: "n r" header, then one edge per line as 1-based vertex ids.
/// Blank lines and '#' comments are ignored.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);

namespace detail {
    /// Splits a line into whitespace-separated tokens after stripping '#' comments.
    std::vector<std::string> tokenize(const std::string& line);
    unsigned long long parse_uint(const std::string& token, std::size_t line);
} // namespace detail

} // namespace hgar
