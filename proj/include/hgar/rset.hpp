#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hgar {

using Vertex = std::uint32_t;
using EdgeRank = std::uint64_t;

/// Largest vertex count supported by the bitmask search kernels.
inline constexpr unsigned max_vertices = 64;

/// An r-subset of vertices, kept strictly increasing.
class RSet {
public:
    RSet() = default;

    /// Sorts the input; throws std::invalid_argument on a repeated vertex.
    explicit RSet(std::vector<Vertex> vertices);
    RSet(std::initializer_list<Vertex> vertices);

    std::span<const Vertex> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(Vertex v) const;

    /// Bit i set iff vertex i is in the set. Requires every vertex < 64.
    std::uint64_t mask() const;

    /// Number of shared vertices.
    std::size_t intersection_size(const RSet& other) const;

    std::string to_string() const;

    auto operator<=>(const RSet&) const = default;
    bool operator==(const RSet&) const = default;

private:
    std::vector<Vertex> vertices_;
};

/// Throws std::invalid_argument unless every vertex is < n.
void validate(const RSet& edge, unsigned n);

/// Colex rank of an r-set; independent of n once the edge is valid over n.
EdgeRank rank_rset(const RSet& edge, unsigned n);

/// Inverse of rank_rset. Throws std::out_of_range when index >= C(n, r).
RSet unrank_rset(EdgeRank index, unsigned n, unsigned r);

/// The vertices of a bitmask as an RSet.
RSet rset_from_mask(std::uint64_t mask);

} // namespace hgar
