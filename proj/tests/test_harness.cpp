#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symreg/harness.hpp"
#include "test_helpers.hpp"

using namespace symreg;
using testutil::cycle;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// JSONL text with every "timings_ms" object removed, for determinism diffs.
std::string strip_timings(const std::string& jsonl) {
    std::stringstream out, in(jsonl);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        j.erase("timings_ms");
        out << j.dump() << '\n';
    }
    return out.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name) {
        path = std::filesystem::temp_directory_path() / name;
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("check name validation and s gating") {
    CensusConfig cfg;
    cfg.s_range = {2};
    std::vector<std::string> checks = effective_checks(cfg);
    CHECK(std::find(checks.begin(), checks.end(), "conjA_s2") != checks.end());
    CHECK(std::find(checks.begin(), checks.end(), "conjA_s3") == checks.end());
    CHECK(std::find(checks.begin(), checks.end(), "fourth_closure_identity") == checks.end());
    CHECK(std::find(checks.begin(), checks.end(), "char_compare") == checks.end());
    cfg.checks = {"no_such_check"};
    CHECK_THROWS_AS(effective_checks(cfg), Error);
}

TEST_CASE("verify_graph on C3") {
    CensusConfig cfg;
    cfg.s_range = {2, 3, 4};
    CheckReport report = verify_graph(cycle(3), cfg);
    REQUIRE(report.checks.count("conjA_s2"));
    CHECK(report.checks.at("conjA_s2").passed());
    CHECK(report.checks.at("conjA_s2").details == "reg I^2 = 4, reg I^(2) = 4");
    for (const auto& [name, outcome] : report.checks) {
        INFO(name << ": " << outcome.details);
        CHECK(outcome.passed());
    }
    CHECK(report.n == 3);
    CHECK(report.m == 3);
    CHECK_THROWS_AS(verify_graph(SimpleGraph(3), cfg), Error);
}

TEST_CASE("verify_graph on bipartite C4") {
    CensusConfig cfg;
    cfg.s_range = {2};
    cfg.checks = {"bipartite_collapse"};
    CheckReport report = verify_graph(cycle(4), cfg);
    CHECK(report.checks.at("bipartite_collapse").passed());
    CHECK(report.checks.at("bipartite_collapse").details == "ideals equal for s = 2,3,4");
}

TEST_CASE("check report JSON round trip is lossless") {
    CensusConfig cfg;
    cfg.s_range = {2};
    cfg.checks = {"conjA_s2", "dual_engine"};
    CheckReport report = verify_graph(cycle(3), cfg);
    CheckReport back = CheckReport::from_json_string(report.to_json_string());
    CHECK(back.to_json_string() == report.to_json_string());
    // a synthetic failing outcome with reproducer also survives
    CheckReport synthetic;
    synthetic.graph_id = "Bw";
    synthetic.n = 3;
    synthetic.m = 3;
    synthetic.field_char = 2;
    synthetic.checks["conjA_s2"] = {"fail", "reg I^2 = 9, reg I^(2) = 8", "{\"s\":2}"};
    synthetic.timings_ms["conjA_s2"] = 1.25;
    CheckReport sback = CheckReport::from_json_string(synthetic.to_json_string());
    CHECK(sback.to_json_string() == synthetic.to_json_string());
    CHECK(sback.checks.at("conjA_s2").status == "fail");
}

TEST_CASE("census at max_n = 3 visits exactly the edge, the path and the triangle") {
    CensusConfig cfg;
    cfg.max_n = 3;
    cfg.s_range = {2};
    cfg.checks = {"conjA_s2"};
    CensusResult result = run_census(cfg);
    REQUIRE(result.reports.size() == 3);
    SimpleGraph k2(2);
    k2.add_edge(1, 2);
    CHECK(result.reports[0].graph_id == canonical_graph6(k2));
    CHECK(result.reports[1].graph_id == canonical_graph6(testutil::path(3)));
    CHECK(result.reports[2].graph_id == canonical_graph6(cycle(3)));
    CHECK(result.summary.all_passed());
    CHECK(result.summary.checks_failed == 0);
}

TEST_CASE("census per-n counts match the known census") {
    CensusConfig cfg;
    cfg.max_n = 5;
    cfg.s_range = {2};
    cfg.checks = {"boundB_s2"};
    CensusResult result = run_census(cfg);
    std::map<int, int> by_n;
    for (const auto& r : result.reports) ++by_n[r.n];
    CHECK(by_n[2] == 1);
    CHECK(by_n[3] == 2);
    CHECK(by_n[4] == 6);
    CHECK(by_n[5] == 21);
}

TEST_CASE("census JSONL is deterministic and resume avoids duplicates") {
    CensusConfig cfg;
    cfg.max_n = 4;
    cfg.s_range = {2};
    cfg.checks = {"conjA_s2", "key2_identity", "red0_sweep"};
    TempDir dir_a("symreg_test_census_a"), dir_b("symreg_test_census_b");

    cfg.out_dir = dir_a.path.string();
    run_census(cfg);
    cfg.out_dir = dir_b.path.string();
    cfg.threads = 2;  // scheduling must not change the bytes
    run_census(cfg);

    std::string a = slurp((dir_a.path / "census_reports.jsonl").string());
    std::string b = slurp((dir_b.path / "census_reports.jsonl").string());
    CHECK(strip_timings(a) == strip_timings(b));
    CHECK(!a.empty());

    // truncate the first file to simulate an interrupted run, then resume
    {
        std::stringstream keep, in(a);
        std::string line;
        int kept = 0;
        while (std::getline(in, line) && kept < 3) {
            keep << line << '\n';
            ++kept;
        }
        std::ofstream out(dir_a.path / "census_reports.jsonl", std::ios::trunc);
        out << keep.str();
    }
    cfg.out_dir = dir_a.path.string();
    cfg.threads = 1;
    cfg.resume = true;
    CensusResult resumed = run_census(cfg);
    std::string after = slurp((dir_a.path / "census_reports.jsonl").string());
    CHECK(strip_timings(after) == strip_timings(b));
    std::set<std::string> ids;
    for (const auto& r : resumed.reports) CHECK(ids.insert(r.graph_id).second);
    // the reg cache persisted values for the resumed graphs
    CHECK(std::filesystem::exists(dir_a.path / "reg_cache.jsonl"));
}

TEST_CASE("reg cache stores and reloads") {
    TempDir dir("symreg_test_cache");
    std::string path = (dir.path / "cache.jsonl").string();
    {
        RegCache cache(path);
        cache.store(RegCache::make_key("Bw", "ordinary", 2, 32003), 3);
        CHECK(cache.lookup(RegCache::make_key("Bw", "ordinary", 2, 32003)) == 3);
        CHECK(!cache.lookup(RegCache::make_key("Bw", "ordinary", 3, 32003)).has_value());
    }
    RegCache reloaded(path);
    CHECK(reloaded.lookup(RegCache::make_key("Bw", "ordinary", 2, 32003)) == 3);
}

TEST_CASE("CSV emission") {
    TempDir dir("symreg_test_csv");
    std::string path = (dir.path / "summary.csv").string();
    write_reports_csv(path, {}, {"conjA_s2"});
    CHECK(slurp(path) == "graph_id,n,m,char,conjA_s2,total_ms\n");

    CensusConfig cfg;
    cfg.s_range = {2};
    cfg.checks = {"conjA_s2"};
    CheckReport report = verify_graph(cycle(3), cfg);
    write_reports_csv(path, {report}, {"conjA_s2"});
    std::string text = slurp(path);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find(report.graph_id) != std::string::npos);
}

TEST_CASE("failing checks surface in the summary") {
    // a fabricated failing report: the summary must refuse to declare success
    CheckReport bad;
    bad.checks["conjA_s2"] = {"fail", "", ""};
    CensusSummary summary;
    summary.graphs = 1;
    for (const auto& [name, outcome] : bad.checks) {
        if (outcome.status == "fail") ++summary.checks_failed;
    }
    CHECK_FALSE(summary.all_passed());
    CensusSummary skipped;
    skipped.checks_skipped = 1;
    CHECK_FALSE(skipped.all_passed());  // a timeout is never a pass
}

TEST_CASE("per-graph timeout reports skip, not pass") {
    CensusConfig cfg;
    cfg.s_range = {2, 3};
    cfg.checks = {"conjA_s2", "conjA_s3"};
    cfg.per_graph_timeout_s = 0.0;
    CheckReport report = verify_graph(cycle(5), cfg);
    for (const auto& [name, outcome] : report.checks) CHECK(outcome.status == "skip");
}

TEST_CASE("thread budget respects the environment cap") {
    CHECK(thread_budget(3) >= 1);
#ifdef _WIN32
#else
    setenv("SYMREG_THREADS", "1", 1);
    CHECK(thread_budget(8) == 1);
    unsetenv("SYMREG_THREADS");
#endif
}
