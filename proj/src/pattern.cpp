#include "hgar/pattern.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hgar {

PatternSpec PatternSpec::make(Shape shape, Tightness tightness, unsigned k)
{
    if (k < 2)
        throw std::invalid_argument("pattern length must be at least 2");
    if (shape == Shape::cycle && k < 3)
        throw std::invalid_argument("cycles need at least 3 edges");
    return PatternSpec{shape, tightness, k};
}

PatternSpec PatternSpec::parse(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pattern '" + text + "' is not of the form tightness-shape:k");
    std::string kind = text.substr(0, colon);
    std::string len = text.substr(colon + 1);
    Tightness tightness;
    Shape shape;
    if (kind == "loose-path")
        tightness = Tightness::loose, shape = Shape::path;
    else if (kind == "loose-cycle")
        tightness = Tightness::loose, shape = Shape::cycle;
    else if (kind == "linear-path")
        tightness = Tightness::linear, shape = Shape::path;
    else if (kind == "linear-cycle")
        tightness = Tightness::linear, shape = Shape::cycle;
    else
        throw std::invalid_argument("unknown pattern kind '" + kind + "'");
    if (len.empty() || !std::all_of(len.begin(), len.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("bad pattern length '" + len + "'");
    return make(shape, tightness, static_cast<unsigned>(std::stoul(len)));
}

std::string PatternSpec::to_string() const
{
    return std::string(tightness == Tightness::loose ? "loose-" : "linear-") + (shape == Shape::path ? "path:" : "cycle:")
           + std::to_string(k);
}

std::vector<PatternSpec> parse_family(const std::string& text)
{
    std::vector<PatternSpec> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(PatternSpec::parse(item));
    if (out.empty())
        throw std::invalid_argument("empty pattern family");
    return out;
}

Classification classify_sequence(std::span<const RSet> edges, const PatternSpec& spec)
{
    auto reject = [](std::string why) { return Classification{false, std::move(why)}; };
    const std::size_t k = edges.size();
    if (k != spec.k)
        return reject("sequence has " + std::to_string(k) + " edges, pattern needs " + std::to_string(spec.k));
    for (std::size_t i = 1; i < k; ++i)
        if (edges[i].size() != edges[0].size())
            return reject("edges e1 and e" + std::to_string(i + 1) + " have different sizes");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (edges[i] == edges[j])
                return reject("edges e" + std::to_string(i + 1) + " and e" + std::to_string(j + 1) + " coincide");

    const bool cycle = spec.shape == Shape::cycle;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (cycle && i == 0 && j == k - 1);
            const std::size_t common = edges[i].intersection_size(edges[j]);
            const std::string pair = "e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1);
            if (!consecutive) {
                if (common != 0)
                    return reject(pair + " are not consecutive but intersect");
                continue;
            }
            if (common == 0)
                return reject(pair + " are consecutive but disjoint");
            if (spec.tightness == Tightness::linear && common != 1)
                return reject(pair + " share " + std::to_string(common) + " vertices, linear needs exactly 1");
        }
    }
    return {true, {}};
}

EndData end_data(const CopyWitness& w)
{
    if (w.spec.shape != Shape::path)
        throw std::domain_error("cycles have no end edges");
    if (w.edges.size() < 2)
        throw std::domain_error("end data needs a path with at least two edges");
    std::map<Vertex, int> degree;
    for (const RSet& e : w.edges)
        for (Vertex v : e)
            ++degree[v];
    auto ends_of = [&](const RSet& e) {
        std::vector<Vertex> out;
        for (Vertex v : e)
            if (degree[v] == 1)
                out.push_back(v);
        return out;
    };
    const auto first = ends_of(w.edges.front());
    const auto last = ends_of(w.edges.back());

    EndData out;
    std::set_union(first.begin(), first.end(), last.begin(), last.end(), std::back_inserter(out.end_points));
    for (Vertex a : first)
        for (Vertex b : last)
            out.end_pairs.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(out.end_pairs.begin(), out.end_pairs.end());
    return out;
}

void to_json(nlohmann::json& j, const PatternSpec& spec)
{
    j = nlohmann::json{{"shape", spec.shape == Shape::path ? "path" : "cycle"},
                       {"tightness", spec.tightness == Tightness::loose ? "loose" : "linear"},
                       {"k", spec.k}};
}

void from_json(const nlohmann::json& j, PatternSpec& spec)
{
    const auto shape = j.at("shape").get<std::string>();
    const auto tightness = j.at("tightness").get<std::string>();
    if ((shape != "path" && shape != "cycle") || (tightness != "loose" && tightness != "linear"))
        throw std::invalid_argument("bad pattern spec json");
    spec = PatternSpec::make(shape == "path" ? Shape::path : Shape::cycle,
                             tightness == "loose" ? Tightness::loose : Tightness::linear, j.at("k").get<unsigned>());
}

void to_json(nlohmann::json& j, const CopyWitness& w)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const RSet& e : w.edges) {
        nlohmann::json row = nlohmann::json::array();
        for (Vertex v : e)
            row.push_back(v + 1);
        edges.push_back(std::move(row));
    }
    j = nlohmann::json{{"spec", w.spec}, {"edges", std::move(edges)}};
}

void from_json(const nlohmann::json& j, CopyWitness& w)
{
    w.spec = j.at("spec").get<PatternSpec>();
    w.edges.clear();
    for (const auto& row : j.at("edges")) {
        std::vector<Vertex> vs;
        for (const auto& v : row) {
            auto id = v.get<long long>();
            if (id < 1)
                throw std::invalid_argument("witness vertices are 1-based");
            vs.push_back(static_cast<Vertex>(id - 1));
        }
        w.edges.emplace_back(std::move(vs));
    }
}

} // namespace hgar
