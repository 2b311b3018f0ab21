#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hgar/coloring.hpp"
#include "hgar/hypergraph.hpp"
#include "hgar/pattern.hpp"

namespace hgar {

/// Raised when an instance is larger than the exact oracle is configured to handle.
class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleOptions {
    /// Largest C(n,r) accepted; 0 selects the per-oracle default (40 for ex, 12 for ar).
    std::size_t edge_limit = 0;
    /// Shards are fixed decision prefixes of this depth; results never depend on workers.
    unsigned split_depth = 6;
    unsigned workers = 1;
};

struct OracleStats {
    std::uint64_t nodes = 0;
    std::size_t shards = 0;
    std::size_t copies = 0; ///< copies of family members in K_n^r
};

struct ExOracleResult {
    std::size_t value = 0;
    Hypergraph witness;         ///< an F-free hypergraph with `value` edges
    bool witness_verified = false; ///< find_copy reports none for every family member
    OracleStats stats;
};

struct ArOracleResult {
    /// False when K_n^r holds no family member; no colour count then forces a rainbow copy.
    bool attainable = false;
    std::size_t value = 0;                 ///< ar = max_rainbow_free_colors + 1
    std::size_t max_rainbow_free_colors = 0;
    std::optional<EdgeColoring> witness;   ///< rainbow-free with max_rainbow_free_colors colours
    bool witness_verified = false;
    OracleStats stats;
};

/// Maximum number of edges of an F-free r-graph on n vertices, by branch and bound
/// over edges in colex order with a greedy star warm start.
ExOracleResult brute_ex(unsigned n, unsigned r, const std::vector<PatternSpec>& family,
                        const OracleOptions& options = {});

/// Minimum c such that every surjective c-colouring of K_n^r has a rainbow family member,
/// by restricted-growth enumeration of edge partitions.
ArOracleResult brute_ar(unsigned n, unsigned r, const std::vector<PatternSpec>& family,
                        const OracleOptions& options = {});

/// Maximum edge count of a graph on n <= 10 vertices without a path of k edges.
ExOracleResult brute_ex_graph_paths(unsigned n, unsigned k, const OracleOptions& options = {});

} // namespace hgar
