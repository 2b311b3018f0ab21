#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hgar/rset.hpp"

namespace hgar {

enum class Shape { path, cycle };
enum class Tightness { loose, linear };

/// A target family: loose or linear paths or cycles with k edges.
struct PatternSpec {
    Shape shape = Shape::path;
    Tightness tightness = Tightness::loose;
    unsigned k = 2;

    /// Throws std::invalid_argument for k < 2, or k < 3 on cycles.
    static PatternSpec make(Shape shape, Tightness tightness, unsigned k);
    static PatternSpec loose_path(unsigned k) { return make(Shape::path, Tightness::loose, k); }
    static PatternSpec loose_cycle(unsigned k) { return make(Shape::cycle, Tightness::loose, k); }
    static PatternSpec linear_path(unsigned k) { return make(Shape::path, Tightness::linear, k); }
    static PatternSpec linear_cycle(unsigned k) { return make(Shape::cycle, Tightness::linear, k); }

    /// "loose-path:4", "linear-cycle:5", ...
    static PatternSpec parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const PatternSpec&) const = default;
};

/// Comma separated list of PatternSpec::parse strings.
std::vector<PatternSpec> parse_family(const std::string& text);

/// An ordered edge sequence realizing a pattern.
struct CopyWitness {
    PatternSpec spec;
    std::vector<RSet> edges;

    bool operator==(const CopyWitness&) const = default;
};

struct Classification {
    bool accepted = false;
    std::string reason; ///< first violated constraint when rejected

    explicit operator bool() const { return accepted; }
};

/// Checks every intersection constraint of the pattern, cycles wrapping e_{k+1} = e_1.
/// Non-consecutive pairs, including e_1 and e_k of a path, must be disjoint.
Classification classify_sequence(std::span<const RSet> edges, const PatternSpec& spec);

struct EndData {
    std::vector<Vertex> end_points;                  ///< sorted
    std::vector<std::pair<Vertex, Vertex>> end_pairs; ///< (a, b) with a < b, sorted
};

/// End points and end pairs of a path witness. Throws std::domain_error on cycles.
EndData end_data(const CopyWitness& w);

void to_json(nlohmann::json& j, const PatternSpec& spec);
void from_json(const nlohmann::json& j, PatternSpec& spec);
/// Witness JSON uses 1-based vertices.
void to_json(nlohmann::json& j, const CopyWitness& w);
void from_json(const nlohmann::json& j, CopyWitness& w);

} // namespace hgar
