#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hgar/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run hgar_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hgar");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hgar::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("hgar_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("formulas")
{
    const Run r = hgar_run({"formulas", "--n", "20", "--r", "3", "--k", "4..5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n,r,k,ar_loose,ar_linear,ex_loose_path,ex_linear_path,applicability\n") == 0);
    CHECK(r.out.find("20,3,4,173,173,172,188,asymptotic") != std::string::npos);
    CHECK(r.out.find("20,3,5,174,190,324,324,asymptotic") != std::string::npos);

    const Run j = hgar_run({"formulas", "--n", "20,21", "--r", "3", "--k", "4", "--format", "json"});
    CHECK(j.code == 0);
    const auto rows = nlohmann::json::parse(j.out);
    CHECK(rows.size() == 2);
    CHECK(rows[0]["ar_loose"] == "173");

    CHECK(hgar_run({"formulas", "--n", "20", "--r", "3", "--k", "5..4"}).code == 1);
}

TEST_CASE("oracles")
{
    const fs::path dir = scratch("oracles");
    const Run ar = hgar_run({"oracle-ar", "--n", "5", "--r", "3", "--family", "loose-path:2", "--out", dir.string()});
    CHECK(ar.code == 0);
    const auto j = nlohmann::json::parse(ar.out);
    CHECK(j["value"] == 2);
    CHECK(fs::exists(j["witness_path"].get<std::string>()));

    const Run unatt = hgar_run({"oracle-ar", "--n", "5", "--r", "3", "--family", "loose-path:3", "--out", dir.string()});
    CHECK(unatt.code == 0);
    CHECK(nlohmann::json::parse(unatt.out)["attainable"] == false);

    const Run ex = hgar_run({"oracle-ex", "--n", "6", "--r", "3", "--family", "loose-path:2", "--out", dir.string()});
    CHECK(ex.code == 0);
    CHECK(nlohmann::json::parse(ex.out)["value"] == 2);

    const Run big = hgar_run({"oracle-ar", "--n", "7", "--r", "3", "--family", "loose-path:2"});
    CHECK(big.code == 1);
    CHECK(nlohmann::json::parse(big.err)["kind"] == "limit");
}

TEST_CASE("construct, verify and re-verify")
{
    const fs::path dir = scratch("construct");
    const Run c = hgar_run({"construct", "--kind", "lb", "--n", "10", "--r", "3", "--k", "4", "--out", dir.string()});
    REQUIRE(c.code == 0);
    const fs::path cert = dir / "lb_n10_r3_k4.cert.json";
    REQUIRE(fs::exists(cert));
    REQUIRE(fs::exists(dir / "lb_n10_r3_k4.coloring"));

    const Run again = hgar_run({"verify", "--certificate", cert.string()});
    CHECK(again.code == 0);
    CHECK(nlohmann::json::parse(again.out)["agrees"] == true);

    // byte-identical outputs on a second run
    const std::string first = slurp(cert) + slurp(dir / "lb_n10_r3_k4.coloring");
    REQUIRE(hgar_run({"construct", "--kind", "lb", "--n", "10", "--r", "3", "--k", "4", "--out", dir.string()})
                .code == 0);
    CHECK(first == slurp(cert) + slurp(dir / "lb_n10_r3_k4.coloring"));

    const Run turan = hgar_run({"construct", "--kind", "turan", "--n", "10", "--r", "3", "--k", "5", "--out",
                                dir.string()});
    CHECK(turan.code == 0);
    CHECK(hgar_run({"verify", "--certificate", (dir / "turan_n10_r3_k5.cert.json").string()}).code == 0);

    // refutation and indeterminate exit codes
    const std::string coloring = (dir / "lb_n10_r3_k4.coloring").string();
    CHECK(hgar_run({"verify", "--coloring", coloring, "--family", "loose-path:3"}).code == 1);
    CHECK(hgar_run({"verify", "--coloring", coloring, "--family", "loose-path:4", "--budget", "3"}).code == 2);
    CHECK(hgar_run({"verify", "--coloring", coloring, "--family", "loose-path:4,loose-cycle:4"}).code == 0);
}

TEST_CASE("analyze")
{
    const fs::path dir = scratch("analyze");
    REQUIRE(hgar_run({"construct", "--kind", "turan", "--n", "12", "--r", "3", "--k", "6", "--out", dir.string()})
                .code == 0);
    const Run a = hgar_run({"analyze", "--hypergraph", (dir / "turan_n12_r3_k6.hg").string(), "--t", "2", "--tau",
                            "1"});
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["core"] == nlohmann::json::array({1, 2}));
    CHECK(j["identities"]["cross_plus_missing"]["holds"] == true);
    CHECK(j["identities"]["partition_of_reduced"]["holds"] == true);

    const Run given = hgar_run({"analyze", "--hypergraph", (dir / "turan_n12_r3_k6.hg").string(), "--core", "3,4",
                                "--tau", "2"});
    CHECK(given.code == 0);
    CHECK(nlohmann::json::parse(given.out)["core_source"] == "given");

    CHECK(hgar_run({"analyze", "--hypergraph", (dir / "turan_n12_r3_k6.hg").string(), "--tau", "2"}).code == 1);
}

TEST_CASE("errors are machine readable")
{
    const fs::path dir = scratch("errors");
    {
        std::ofstream f(dir / "bad.hg");
        f << "5 3\n1 2 3\n# fine so far\n1 2 9\n";
    }
    const Run bad = hgar_run({"verify", "--hypergraph", (dir / "bad.hg").string(), "--family", "loose-path:2"});
    CHECK(bad.code == 1);
    const auto e = nlohmann::json::parse(bad.err);
    CHECK(e["kind"] == "parse");
    CHECK(e["line"] == 4);

    {
        std::ofstream f(dir / "bad.coloring");
        f << "4 3 2\n1 2 3 : 0\n1 2 4 : 1\n";
    }
    const Run badc = hgar_run({"verify", "--coloring", (dir / "bad.coloring").string(), "--family", "loose-path:2"});
    CHECK(badc.code == 1);
    CHECK(nlohmann::json::parse(badc.err)["kind"] == "parse");

    CHECK(hgar_run({}).code == 1);
    CHECK(hgar_run({"frobnicate"}).code == 1);
    CHECK(hgar_run({"verify", "--family", "loose-path:2"}).code == 1);
    CHECK(hgar_run({"oracle-ex", "--n", "5", "--r", "3", "--family", "wobbly-path:2"}).code == 1);
    CHECK(hgar_run({"--help"}).code == 0);
}

TEST_CASE("audit subset is reproducible")
{
    const fs::path a = scratch("audit_a");
    const fs::path b = scratch("audit_b");
    const Run ra = hgar_run({"audit", "--seed", "3", "--skip-determinism", "--out", a.string()});
    const Run rb =
        hgar_run({"audit", "--seed", "3", "--skip-determinism", "--workers", "4", "--out", b.string()});
    CHECK(ra.code == 0);
    CHECK(rb.code == 0);
    CHECK(ra.out.find("criterion 8: PASS") != std::string::npos);
    CHECK(slurp(a / "audit_values.json") == slurp(b / "audit_values.json"));
}
