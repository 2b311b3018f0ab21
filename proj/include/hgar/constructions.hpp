#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgar/coloring.hpp"
#include "hgar/hypergraph.hpp"
#include "hgar/pattern.hpp"
#include "hgar/search.hpp"

namespace hgar {

enum class Parity { even, odd };

/// Lower-bound colouring of K_n^r: every edge meeting the core gets its own colour,
/// the remaining edges share one colour (even k) or two colours (odd k).
struct LBColoring {
    EdgeColoring coloring;
    std::vector<Vertex> core; ///< {0, ..., t-2}
    Parity parity = Parity::even;
    unsigned t = 0;
    std::size_t colors_used = 0;
};

/// Throws std::domain_error for k < 4 and std::out_of_range when n < r + t.
/// For odd k the remaining edges through vertex t-1 form one extra class, all other
/// remaining edges the second.
LBColoring lb_coloring(unsigned n, unsigned r, unsigned k);

/// All edges meeting {0, ..., t-1}, t = floor((k-1)/2), plus for even k the colex-smallest
/// r-set avoiding that set. Throws std::out_of_range when n < 2r + t.
Hypergraph turan_extremal_loose(unsigned n, unsigned r, unsigned k);

enum class Verdict { certified_rainbow_free, certified_f_free, refuted, indeterminate };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& text);

struct SpecCheck {
    PatternSpec spec;
    SearchReport report;
};

struct Certificate {
    std::string object_kind; ///< "coloring" or "hypergraph"
    unsigned n = 0;
    unsigned r = 0;
    std::vector<SpecCheck> checks;
    Verdict verdict = Verdict::indeterminate;
    std::optional<CopyWitness> refutation;
};

/// Runs a rainbow search for each spec to completion.
Certificate verify_construction(const EdgeColoring& coloring, const std::vector<PatternSpec>& specs,
                                const SearchOptions& options = {});
Certificate verify_construction(const LBColoring& coloring, const std::vector<PatternSpec>& specs,
                                const SearchOptions& options = {});
/// Runs find_copy for each spec to completion.
Certificate verify_construction(const Hypergraph& h, const std::vector<PatternSpec>& specs,
                                const SearchOptions& options = {});

nlohmann::json to_json(const Certificate& cert);

} // namespace hgar
