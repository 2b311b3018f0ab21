#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hgar/coloring.hpp"
#include "hgar/hypergraph.hpp"
#include "hgar/pattern.hpp"

namespace hgar {

/// Partition of V(H) into the core L, the vertices S with at least one tau-small
/// pair into L, and the rest.
struct CoreDecomposition {
    std::vector<Vertex> core;
    std::uint64_t tau = 0;
    std::vector<Vertex> s;
    std::vector<Vertex> s_bar;
};

struct EdgeClassCounts {
    std::size_t cross = 0;   ///< edges of H with exactly one vertex in L
    std::size_t missing = 0; ///< r-sets with exactly one vertex in L that are not edges
    std::size_t reduced_edges = 0;    ///< |E(H - L)|
    std::vector<std::size_t> by_s_bar; ///< [i] = edges of H - L with i vertices in S-bar
    std::size_t f1 = 0;
    std::size_t f2plus = 0;
};

struct ShadowDegreeSplit {
    std::vector<RSet> f1;     ///< (r-1)-sets inside S covered by exactly one edge
    std::vector<RSet> f2plus; ///< covered by two or more
    std::size_t degree_sum = 0; ///< sum of the covering degrees over f1 and f2plus
};

/// Pairs (u, v), u in L and v outside L, with d_H(u,v) <= tau * C(n, r-3).
std::vector<std::pair<Vertex, Vertex>> tau_small_pairs(const Hypergraph& h, std::span<const Vertex> core,
                                                       std::uint64_t tau);

/// Number of core vertices forming a tau-small pair with v. Throws std::domain_error when v is in L.
std::size_t small_degree(const Hypergraph& h, std::span<const Vertex> core, std::uint64_t tau, Vertex v);

CoreDecomposition decompose(const Hypergraph& h, std::span<const Vertex> core, std::uint64_t tau);

/// Counts crossing and missing edges for L and the partition of H - L by |e & S-bar|.
/// Missing edges are enumerated, not derived, and both identities are checked before returning.
/// Throws std::domain_error when S-bar meets L.
EdgeClassCounts edge_class_counts(const Hypergraph& h, std::span<const Vertex> core, std::span<const Vertex> s_bar);

/// Splits the (r-1)-sets inside S covered by e1 by covering degree. Every edge of e1 must have
/// exactly one vertex outside S, otherwise std::domain_error.
ShadowDegreeSplit shadow_degree_split(const std::vector<RSet>& e1, std::span<const Vertex> s);

/// Raised when extend_rainbow is called outside its hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The construction got stuck: no admissible edge through `stuck_pair`.
struct ConstructiveFailure {
    std::string reason;
    std::optional<std::pair<Vertex, Vertex>> stuck_pair;
    unsigned step = 0;
};

using ExtensionResult = std::variant<CopyWitness, ConstructiveFailure>;

/// Extends the rainbow loose path F in H - L by 2i edges routed alternately through
/// the core L = {v_1..v_t} and fresh vertices u_1..u_t of S-bar, with tau = r(l + 2t).
/// mode = cycle closes F through an end pair in S-bar into a loose cycle of length l + 2i;
/// mode = path continues from an end point in S-bar into a loose path of length l + 2i.
/// Every edge is the colex-first edge of H through its pair that avoids all used vertices
/// and colours.
ExtensionResult extend_rainbow(const EdgeColoring& coloring, const Hypergraph& h, std::span<const Vertex> core,
                               const CopyWitness& path, Shape mode, unsigned i);

/// Greedy choice of t vertices maximising the number of crossing edges; ties go to the
/// lowest vertex. A heuristic, with no optimality claim.
std::vector<Vertex> greedy_core_detect(const Hypergraph& h, unsigned t);

/// A coloured K_n^r with a rainbow subgraph H satisfying the extension hypotheses:
/// pairs into the core are big except a few planted starved ones, and H - L holds a
/// rainbow loose path with both end edges ending in S-bar.
struct PlantedInstance {
    EdgeColoring coloring;
    Hypergraph h;
    std::vector<Vertex> core;
    CopyWitness path;
    std::uint64_t tau = 0;
};

PlantedInstance planted_instance(std::uint64_t seed, unsigned n, unsigned r, unsigned t, unsigned ell);

} // namespace hgar
