#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hgar/pattern.hpp"

namespace hgar::naive {

/// Reference enumerator that shares no code with the pruned search: it walks every
/// ordered k-tuple of distinct edges and checks the pattern definition with std::set
/// intersections. Only meant for hosts with a few dozen edges.
///
/// `edges` are vertex sets; `colors`, when given, must be parallel to `edges` and
/// restricts the check to tuples with distinct colours.
bool contains_copy(const std::vector<std::set<unsigned>>& edges, const PatternSpec& spec,
                   const std::vector<unsigned>* colors = nullptr);

/// Smallest n in [1, n_max] whose complete r-graph contains the pattern, if any.
std::optional<unsigned> min_host_size(unsigned r, const PatternSpec& spec, unsigned n_max);

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::set<unsigned>> all_rsets(unsigned n, unsigned r);

} // namespace hgar::naive
