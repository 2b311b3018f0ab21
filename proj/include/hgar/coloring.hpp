#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hgar/hypergraph.hpp"
#include "hgar/search.hpp"

namespace hgar {

using Color = std::uint32_t;

/// Total, surjective colouring of K_n^r with dense colour ids [0, c).
class EdgeColoring {
public:
    EdgeColoring() = default;
    /// color_of[rank] for every rank in [0, C(n,r)). Throws std::invalid_argument when the
    /// map is not total or skips a colour id.
    EdgeColoring(unsigned n, unsigned r, std::vector<Color> color_of);

    static EdgeColoring rainbow_all(unsigned n, unsigned r);
    static EdgeColoring monochromatic(unsigned n, unsigned r);

    unsigned n() const { return n_; }
    unsigned r() const { return r_; }
    std::size_t edge_count() const { return color_of_.size(); }
    std::size_t color_count() const { return classes_.size(); }

    Color color(EdgeRank rank) const { return color_of_.at(rank); }
    Color color(const RSet& edge) const { return color_of_.at(rank_rset(edge, n_)); }
    const std::vector<Color>& colors() const { return color_of_; }
    /// classes()[c] lists the ranks coloured c, ascending.
    const std::vector<std::vector<EdgeRank>>& classes() const { return classes_; }

    bool operator==(const EdgeColoring& other) const
    {
        return n_ == other.n_ && r_ == other.r_ && color_of_ == other.color_of_;
    }

private:
    unsigned n_ = 0;
    unsigned r_ = 0;
    std::vector<Color> color_of_;
    std::vector<std::vector<EdgeRank>> classes_;
};

bool is_rainbow(const EdgeColoring& coloring, std::span<const RSet> edges);

using RainbowSearchReport = SearchReport;

/// Same search as find_copy on K_n^r, restricted to sequences with pairwise distinct colours.
RainbowSearchReport find_rainbow_copy(const EdgeColoring& coloring, const PatternSpec& spec,
                                      const SearchOptions& options = {});

/// One edge per colour class, the lowest rank in each class.
Hypergraph representative_subgraph(const EdgeColoring& coloring);

/// Text format: "n r c" header, then "v1 ... vr : color" per edge with 1-based vertices
/// and 0-based colours. Every r-set must be listed exactly once.
EdgeColoring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const EdgeColoring& coloring);

EdgeColoring load_coloring(const std::string& path);
void save_coloring(const std::string& path, const EdgeColoring& coloring);

} // namespace hgar
