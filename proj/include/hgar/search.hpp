#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "hgar/hypergraph.hpp"
#include "hgar/pattern.hpp"

namespace hgar {

enum class SearchStatus { found, none, indeterminate };

std::string to_string(SearchStatus status);

struct SearchOptions {
    /// Node-expansion limit; a node is one partial sequence pushed by the search.
    std::uint64_t budget = 2'000'000'000;
    /// Shards on the first edge are handed to this many threads. Statuses, witnesses and
    /// node counts do not depend on it.
    unsigned workers = 1;
};

struct SearchReport {
    SearchStatus status = SearchStatus::none;
    std::optional<CopyWitness> witness;
    std::uint64_t nodes_expanded = 0;
};

/// Backtracking search for one copy of the pattern in h. Returns the canonically
/// smallest copy (paths with rank(e_1) < rank(e_k), cycles starting at their
/// minimum-rank edge followed by its smaller neighbour). "none" means the search
/// space was exhausted within the budget.
SearchReport find_copy(const Hypergraph& h, const PatternSpec& spec, const SearchOptions& options = {});

/// Calls visit with the ranks of every canonical copy in search order until it returns false.
void for_each_copy(const Hypergraph& h, const PatternSpec& spec,
                   const std::function<bool(std::span<const EdgeRank>)>& visit);

} // namespace hgar
