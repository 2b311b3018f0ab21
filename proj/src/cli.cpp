#include "hgar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgar/audit.hpp"
#include "hgar/closed_forms.hpp"
#include "hgar/coloring.hpp"
#include "hgar/constructions.hpp"
#include "hgar/hypergraph.hpp"
#include "hgar/oracles.hpp"
#include "hgar/structure.hpp"

namespace hgar::cli {

namespace {

    namespace fs = std::filesystem;
    using nlohmann::json;

    class UsageError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    /// "4", "4..7" or "3,5,8" (the forms may be mixed: "3,5..7").
    std::vector<unsigned> parse_range(const std::string& text, const char* flag)
    {
        std::vector<unsigned> out;
        std::stringstream ss(text);
        std::string part;
        auto number = [&](const std::string& s) {
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(s, &used);
                if (used != s.size() || v > 100000)
                    throw std::invalid_argument(s);
                return static_cast<unsigned>(v);
            }
            catch (const std::exception&) {
                throw UsageError(std::string("bad value '") + s + "' for " + flag);
            }
        };
        while (std::getline(ss, part, ',')) {
            const auto dots = part.find("..");
            if (dots == std::string::npos) {
                out.push_back(number(part));
                continue;
            }
            const unsigned lo = number(part.substr(0, dots));
            const unsigned hi = number(part.substr(dots + 2));
            if (lo > hi)
                throw UsageError(std::string("empty range '") + part + "' for " + flag);
            for (unsigned v = lo; v <= hi; ++v)
                out.push_back(v);
        }
        if (out.empty())
            throw UsageError(std::string("no values for ") + flag);
        return out;
    }

    std::vector<Vertex> parse_vertices(const std::string& text)
    {
        std::vector<Vertex> out;
        for (unsigned v : parse_range(text, "--core")) {
            if (v == 0)
                throw UsageError("vertices are 1-based");
            out.push_back(v - 1);
        }
        return out;
    }

    json one_based(std::span<const Vertex> vs)
    {
        json out = json::array();
        for (Vertex v : vs)
            out.push_back(v + 1);
        return out;
    }

    std::string family_tag(const std::vector<PatternSpec>& family)
    {
        std::string out;
        for (const auto& spec : family) {
            std::string s = spec.to_string();
            std::replace(s.begin(), s.end(), ':', '-');
            out += (out.empty() ? "" : "+") + s;
        }
        return out;
    }

    std::string family_text(const std::vector<PatternSpec>& family)
    {
        std::string out;
        for (const auto& spec : family)
            out += (out.empty() ? "" : ",") + spec.to_string();
        return out;
    }

    int exit_for(Verdict v)
    {
        switch (v) {
        case Verdict::certified_rainbow_free:
        case Verdict::certified_f_free:
            return pass;
        case Verdict::refuted:
            return fail;
        case Verdict::indeterminate:
            break;
        }
        return indeterminate;
    }

    void write_file(const fs::path& path, const std::string& text)
    {
        if (path.has_parent_path())
            fs::create_directories(path.parent_path());
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot write " + path.string());
        f << text;
    }

    double seconds_since(std::chrono::steady_clock::time_point start)
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    struct Common {
        unsigned workers = 1;
        std::uint64_t budget = SearchOptions{}.budget;
        std::uint64_t seed = 1;
        std::string out_dir;

        SearchOptions search() const { return {budget, workers}; }
    };

    // ---- formulas

    struct FormulasArgs {
        std::string n, r, k;
        std::string format = "csv";
    };

    int cmd_formulas(const FormulasArgs& a, const Common& c, std::ostream& out)
    {
        const auto ns = parse_range(a.n, "--n");
        const auto rs = parse_range(a.r, "--r");
        const auto ks = parse_range(a.k, "--k");
        std::ostringstream text;
        json rows = json::array();
        if (a.format == "csv")
            text << "n,r,k,ar_loose,ar_linear,ex_loose_path,ex_linear_path,applicability\n";
        for (unsigned n : ns)
            for (unsigned r : rs)
                for (unsigned k : ks) {
                    std::optional<Applicability> weakest;
                    auto eval = [&](auto&& f) -> std::string {
                        try {
                            const FormulaValue v = f();
                            if (!weakest || v.applicability > *weakest)
                                weakest = v.applicability;
                            return v.value.str();
                        }
                        catch (const std::logic_error&) {
                            return "";
                        }
                    };
                    const std::string cells[] = {
                        eval([&] { return ar_loose(n, r, k); }),
                        eval([&] { return ar_linear(n, r, k); }),
                        eval([&] { return ex_loose(n, r, k, Shape::path); }),
                        eval([&] { return ex_linear(n, r, k, Shape::path); }),
                    };
                    const std::string app = weakest ? to_string(*weakest) : "undefined";
                    if (a.format == "csv") {
                        text << n << ',' << r << ',' << k;
                        for (const auto& cell : cells)
                            text << ',' << cell;
                        text << ',' << app << '\n';
                    }
                    else {
                        auto cell = [](const std::string& s) { return s.empty() ? json(nullptr) : json(s); };
                        rows.push_back({{"n", n}, {"r", r}, {"k", k}, {"ar_loose", cell(cells[0])},
                                        {"ar_linear", cell(cells[1])}, {"ex_loose_path", cell(cells[2])},
                                        {"ex_linear_path", cell(cells[3])}, {"applicability", app}});
                    }
                }
        if (a.format != "csv")
            text << rows.dump(2) << '\n';
        out << text.str();
        if (!c.out_dir.empty())
            write_file(fs::path(c.out_dir) / (a.format == "csv" ? "formulas.csv" : "formulas.json"), text.str());
        return pass;
    }

    // ---- construct / verify

    struct ConstructArgs {
        std::string kind = "lb";
        unsigned n = 0, r = 0, k = 0;
        std::string family;
    };

    json certificate_file(const Certificate& cert, const std::string& object_file,
                          const std::vector<PatternSpec>& family)
    {
        json j = to_json(cert);
        j["object_file"] = object_file;
        j["family"] = family_text(family);
        return j;
    }

    int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out)
    {
        const fs::path dir = c.out_dir.empty() ? fs::path(".") : fs::path(c.out_dir);
        const std::string stem =
            a.kind + "_n" + std::to_string(a.n) + "_r" + std::to_string(a.r) + "_k" + std::to_string(a.k);
        std::vector<PatternSpec> family;
        if (!a.family.empty())
            family = parse_family(a.family);

        Certificate cert;
        std::string object_file;
        json construction{{"kind", a.kind}, {"n", a.n}, {"r", a.r}, {"k", a.k}};
        if (a.kind == "lb") {
            const LBColoring lb = lb_coloring(a.n, a.r, a.k);
            if (family.empty())
                family = {PatternSpec::loose_path(a.k), PatternSpec::loose_cycle(a.k)};
            object_file = stem + ".coloring";
            std::ostringstream text;
            write_coloring(text, lb.coloring);
            write_file(dir / object_file, text.str());
            cert = verify_construction(lb, family, c.search());
            construction["colors_used"] = lb.colors_used;
            construction["core"] = one_based(lb.core);
        }
        else if (a.kind == "turan") {
            const Hypergraph h = turan_extremal_loose(a.n, a.r, a.k);
            if (family.empty())
                family = {PatternSpec::loose_path(a.k)};
            object_file = stem + ".hg";
            std::ostringstream text;
            write_hypergraph(text, h);
            write_file(dir / object_file, text.str());
            cert = verify_construction(h, family, c.search());
            construction["edges"] = h.edge_count();
        }
        else {
            throw UsageError("--kind must be lb or turan");
        }
        json cert_json = certificate_file(cert, object_file, family);
        cert_json["construction"] = construction;
        write_file(dir / (stem + ".cert.json"), cert_json.dump(2) + "\n");
        out << json{{"verdict", to_string(cert.verdict)},
                    {"object", (dir / object_file).string()},
                    {"certificate", (dir / (stem + ".cert.json")).string()},
                    {"construction", construction}}
                   .dump(2)
            << '\n';
        return exit_for(cert.verdict);
    }

    struct VerifyArgs {
        std::string coloring, hypergraph, certificate, family;
    };

    Certificate verify_object(const std::string& kind, const std::string& path,
                              const std::vector<PatternSpec>& family, const Common& c)
    {
        if (kind == "coloring")
            return verify_construction(load_coloring(path), family, c.search());
        if (kind == "hypergraph")
            return verify_construction(load_hypergraph(path), family, c.search());
        throw UsageError("unknown object kind '" + kind + "'");
    }

    int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out)
    {
        const int given = !a.coloring.empty() + !a.hypergraph.empty() + !a.certificate.empty();
        if (given != 1)
            throw UsageError("give exactly one of --coloring, --hypergraph, --certificate");

        if (!a.certificate.empty()) {
            std::ifstream f(a.certificate);
            if (!f)
                throw std::runtime_error("cannot open " + a.certificate);
            json stored;
            try {
                stored = json::parse(f);
            }
            catch (const json::parse_error& e) {
                throw std::runtime_error(a.certificate + ": " + e.what());
            }
            const std::string kind = stored.at("object").at("kind").get<std::string>();
            const fs::path object = fs::path(a.certificate).parent_path() / stored.at("object_file").get<std::string>();
            const auto family = parse_family(stored.at("family").get<std::string>());
            const Certificate cert = verify_object(kind, object.string(), family, c);
            const std::string was = stored.at("verdict").get<std::string>();
            const bool agrees = to_string(cert.verdict) == was;
            out << json{{"verdict", to_string(cert.verdict)}, {"stored_verdict", was}, {"agrees", agrees},
                        {"certificate", certificate_file(cert, object.filename().string(), family)}}
                       .dump(2)
                << '\n';
            if (!agrees)
                return fail;
            return exit_for(cert.verdict);
        }

        if (a.family.empty())
            throw UsageError("--family is required with --coloring or --hypergraph");
        const auto family = parse_family(a.family);
        const bool coloring = !a.coloring.empty();
        const std::string path = coloring ? a.coloring : a.hypergraph;
        const Certificate cert = verify_object(coloring ? "coloring" : "hypergraph", path, family, c);
        const json cert_json = certificate_file(cert, fs::path(path).filename().string(), family);
        out << cert_json.dump(2) << '\n';
        if (!c.out_dir.empty())
            write_file(fs::path(c.out_dir) / (fs::path(path).filename().string() + ".cert.json"),
                       cert_json.dump(2) + "\n");
        return exit_for(cert.verdict);
    }

    // ---- oracles

    struct OracleArgs {
        unsigned n = 0, r = 0;
        std::string family;
        std::size_t edge_limit = 0;
        unsigned split_depth = OracleOptions{}.split_depth;
    };

    int cmd_oracle(bool anti_ramsey, const OracleArgs& a, const Common& c, std::ostream& out)
    {
        const auto family = parse_family(a.family);
        OracleOptions options;
        options.edge_limit = a.edge_limit;
        options.split_depth = a.split_depth;
        options.workers = c.workers;
        const fs::path dir = c.out_dir.empty() ? fs::path(".") : fs::path(c.out_dir);
        const std::string stem = std::string(anti_ramsey ? "oracle-ar" : "oracle-ex") + "_n" + std::to_string(a.n) +
                                 "_r" + std::to_string(a.r) + "_" + family_tag(family);
        const auto start = std::chrono::steady_clock::now();
        json report{{"n", a.n}, {"r", a.r}, {"family", family_text(family)}};
        bool verified = false;
        if (anti_ramsey) {
            const ArOracleResult res = brute_ar(a.n, a.r, family, options);
            report["attainable"] = res.attainable;
            report["value"] = res.attainable ? json(res.value) : json(nullptr);
            report["max_rainbow_free_colors"] = res.max_rainbow_free_colors;
            report["witness_path"] = nullptr;
            if (res.witness) {
                std::ostringstream text;
                write_coloring(text, *res.witness);
                write_file(dir / (stem + ".coloring"), text.str());
                report["witness_path"] = (dir / (stem + ".coloring")).string();
            }
            verified = res.witness_verified || !res.attainable;
            report["witness_verified"] = res.witness_verified;
            report["nodes"] = res.stats.nodes;
            report["shards"] = res.stats.shards;
        }
        else {
            const ExOracleResult res = brute_ex(a.n, a.r, family, options);
            report["value"] = res.value;
            std::ostringstream text;
            write_hypergraph(text, res.witness);
            write_file(dir / (stem + ".hg"), text.str());
            report["witness_path"] = (dir / (stem + ".hg")).string();
            verified = res.witness_verified;
            report["witness_verified"] = res.witness_verified;
            report["nodes"] = res.stats.nodes;
            report["shards"] = res.stats.shards;
        }
        report["wall_seconds"] = seconds_since(start);
        out << report.dump(2) << '\n';
        return verified ? pass : fail;
    }

    // ---- analyze

    struct AnalyzeArgs {
        std::string hypergraph, coloring, core;
        unsigned t = 0;
        std::uint64_t tau = 0;
    };

    int cmd_analyze(const AnalyzeArgs& a, const Common& c, std::ostream& out)
    {
        if (a.hypergraph.empty() == a.coloring.empty())
            throw UsageError("give exactly one of --hypergraph, --coloring");
        if (a.core.empty() == (a.t == 0))
            throw UsageError("give exactly one of --core, --t");
        if (a.tau == 0)
            throw UsageError("--tau must be positive");
        const Hypergraph h =
            a.hypergraph.empty() ? representative_subgraph(load_coloring(a.coloring)) : load_hypergraph(a.hypergraph);
        const std::vector<Vertex> core = a.core.empty() ? greedy_core_detect(h, a.t) : parse_vertices(a.core);
        const CoreDecomposition d = decompose(h, core, a.tau);
        const EdgeClassCounts counts = edge_class_counts(h, d.core, d.s_bar);

        json pairs = json::array();
        for (const auto& [u, v] : tau_small_pairs(h, d.core, a.tau))
            pairs.push_back({u + 1, v + 1});
        std::size_t partition_sum = 0;
        for (std::size_t b : counts.by_s_bar)
            partition_sum += b;
        const std::uint64_t rhs = d.core.size() * binom(h.n() - d.core.size(), h.r() - 1);
        const bool id1 = counts.cross + counts.missing == rhs;
        const bool id2 = partition_sum == counts.reduced_edges;
        const json report{
            {"n", h.n()},
            {"r", h.r()},
            {"edges", h.edge_count()},
            {"core", one_based(d.core)},
            {"core_source", a.core.empty() ? "greedy" : "given"},
            {"tau", a.tau},
            {"S", one_based(d.s)},
            {"S_bar", one_based(d.s_bar)},
            {"tau_small_pairs", pairs},
            {"counts",
             {{"cross", counts.cross},
              {"missing", counts.missing},
              {"reduced_edges", counts.reduced_edges},
              {"by_s_bar", counts.by_s_bar},
              {"f1", counts.f1},
              {"f2plus", counts.f2plus}}},
            {"identities",
             {{"cross_plus_missing", {{"lhs", counts.cross + counts.missing}, {"rhs", rhs}, {"holds", id1}}},
              {"partition_of_reduced",
               {{"lhs", partition_sum}, {"rhs", counts.reduced_edges}, {"holds", id2}}}}},
        };
        const std::string text = report.dump(2) + "\n";
        out << text;
        if (!c.out_dir.empty())
            write_file(fs::path(c.out_dir) / "analysis.json", text);
        return id1 && id2 ? pass : fail;
    }

    // ---- audit

    struct AuditArgs {
        std::string grid = "small";
        bool skip_determinism = false;
    };

    int cmd_audit(const AuditArgs& a, const Common& c, std::ostream& out)
    {
        AuditConfig config;
        config.grid = a.grid;
        config.seed = c.seed;
        config.workers = c.workers;
        config.determinism = !a.skip_determinism;
        const AuditResult result = run_audit(config, [&](const CriterionResult& r) {
            out << "criterion " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << "  " << r.title << "  ("
                << r.summary << ")";
            if (r.seconds > r.limit_seconds)
                out << " over time limit " << r.limit_seconds << "s";
            out << '\n' << std::flush;
        });
        if (!c.out_dir.empty()) {
            write_file(fs::path(c.out_dir) / "audit_values.json", result.values_json().dump(2) + "\n");
            write_file(fs::path(c.out_dir) / "audit_timing.json", result.timing_json().dump(2) + "\n");
        }
        out << (result.passed() ? "audit: PASS" : "audit: FAIL") << '\n';
        return result.passed() ? pass : fail;
    }

    void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                      std::optional<std::size_t> line = std::nullopt)
    {
        json j{{"status", "error"}, {"kind", kind}, {"message", message}};
        if (line)
            j["line"] = *line;
        err << j.dump() << '\n';
    }

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Loose and linear path/cycle toolkit: closed forms, constructions, exact oracles"};
    app.name("hgar");
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool search) {
        sub->add_option("--out", common.out_dir, "output directory");
        if (search) {
            sub->add_option("--workers", common.workers, "worker threads")->check(CLI::Range(1U, 256U));
            sub->add_option("--budget", common.budget, "node limit per search")->check(CLI::PositiveNumber);
        }
    };

    FormulasArgs fa;
    auto* formulas = app.add_subcommand("formulas", "closed-form values over a parameter grid");
    formulas->add_option("--n", fa.n, "n values, e.g. 20 or 10..30")->required();
    formulas->add_option("--r", fa.r, "r values")->required();
    formulas->add_option("--k", fa.k, "k values")->required();
    formulas->add_option("--format", fa.format)->check(CLI::IsMember({"csv", "json"}));
    add_common(formulas, false);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a construction and certify it by search");
    construct->add_option("--kind", ca.kind)->check(CLI::IsMember({"lb", "turan"}));
    construct->add_option("--n", ca.n)->required();
    construct->add_option("--r", ca.r)->required();
    construct->add_option("--k", ca.k)->required();
    construct->add_option("--family", ca.family, "patterns to certify against (default: the natural ones)");
    add_common(construct, true);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "certify a coloring or hypergraph file, or re-check a certificate");
    verify->add_option("--coloring", va.coloring);
    verify->add_option("--hypergraph", va.hypergraph);
    verify->add_option("--certificate", va.certificate);
    verify->add_option("--family", va.family, "e.g. loose-path:4,loose-cycle:4");
    add_common(verify, true);

    OracleArgs oa;
    auto* oracle_ex = app.add_subcommand("oracle-ex", "exact Turan number by branch and bound");
    auto* oracle_ar = app.add_subcommand("oracle-ar", "exact anti-Ramsey number by partition enumeration");
    for (auto* sub : {oracle_ex, oracle_ar}) {
        sub->add_option("--n", oa.n)->required();
        sub->add_option("--r", oa.r)->required();
        sub->add_option("--family", oa.family)->required();
        sub->add_option("--edge-limit", oa.edge_limit, "largest C(n,r) accepted (0 = default)");
        sub->add_option("--split-depth", oa.split_depth);
        add_common(sub, true);
    }

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "core decomposition and edge-class counts");
    analyze->add_option("--hypergraph", aa.hypergraph);
    analyze->add_option("--coloring", aa.coloring, "analyze one edge per colour class");
    analyze->add_option("--core", aa.core, "1-based core vertices, e.g. 1,2");
    analyze->add_option("--t", aa.t, "detect a core of this size greedily");
    analyze->add_option("--tau", aa.tau)->required();
    add_common(analyze, false);

    AuditArgs ua;
    auto* audit = app.add_subcommand("audit", "run every acceptance criterion");
    audit->add_option("--grid", ua.grid)->check(CLI::IsMember({"small", "full"}));
    audit->add_option("--seed", common.seed);
    audit->add_flag("--skip-determinism", ua.skip_determinism, "do not re-run the suite for criterion 9");
    add_common(audit, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return pass;
    }
    catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return fail;
    }

    try {
        if (formulas->parsed())
            return cmd_formulas(fa, common, out);
        if (construct->parsed())
            return cmd_construct(ca, common, out);
        if (verify->parsed())
            return cmd_verify(va, common, out);
        if (oracle_ex->parsed() || oracle_ar->parsed())
            return cmd_oracle(oracle_ar->parsed(), oa, common, out);
        if (analyze->parsed())
            return cmd_analyze(aa, common, out);
        if (audit->parsed())
            return cmd_audit(ua, common, out);
    }
    catch (const ParseError& e) {
        report_error(err, "parse", e.what(), e.line());
        return fail;
    }
    catch (const UsageError& e) {
        report_error(err, "usage", e.what());
        return fail;
    }
    catch (const OracleLimitError& e) {
        report_error(err, "limit", e.what());
        return fail;
    }
    catch (const std::exception& e) {
        report_error(err, "error", e.what());
        return fail;
    }
    return fail;
}

} // namespace hgar::cli
