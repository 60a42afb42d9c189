#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symreg/census.hpp"
#include "symreg/graph.hpp"
#include "symreg/regularity.hpp"

namespace symreg {

struct CensusConfig {
    int max_n = 6;
    bool connected_only = true;
    std::set<int> s_range = {2, 3};
    std::vector<std::string> checks;  // empty means all
    int field_char = 32003;
    std::string out_dir;
    bool resume = false;
    int threads = 0;  // 0: hardware concurrency, capped by SYMREG_THREADS
    double per_graph_timeout_s = 120.0;
};

struct CheckOutcome {
    std::string status;  // "pass" | "fail" | "skip"
    std::string details;
    std::string reproducer;  // JSON text; empty unless failing

    bool passed() const { return status == "pass"; }
};

struct CheckReport {
    std::string graph_id;  // canonical graph6
    int n = 0;
    int m = 0;
    int field_char = 0;
    std::map<std::string, CheckOutcome> checks;
    std::map<std::string, double> timings_ms;

    std::string to_json_string() const;
    static CheckReport from_json_string(const std::string& text);
};

/// Regularity value cache keyed by (canonical graph, kind, s, char), with an
/// optional JSONL append-only persistence file.
class RegCache {
public:
    RegCache() = default;
    explicit RegCache(const std::string& jsonl_path);
    ~RegCache();

    static std::string make_key(const std::string& graph_id, const std::string& kind, int s,
                                int prime);

    std::optional<int> lookup(const std::string& key) const;
    void store(const std::string& key, int reg_quotient);

private:
    struct Impl;
    Impl* impl_ = nullptr;
};

/// Names of every implemented check, in report-column order.
const std::vector<std::string>& all_check_names();

/// The subset of cfg.checks compatible with cfg.s_range (all checks when
/// cfg.checks is empty).  Unknown names raise an error.
std::vector<std::string> effective_checks(const CensusConfig& cfg);

/// Runs the configured checks on one graph (at least one edge required).
CheckReport verify_graph(const SimpleGraph& G, const CensusConfig& cfg,
                         RegCache* cache = nullptr);

struct CensusSummary {
    int graphs = 0;
    int checks_passed = 0;
    int checks_failed = 0;
    int checks_skipped = 0;
    std::vector<std::string> skipped_graph_ids;  // graphs with timeouts, listed loudly

    bool all_passed() const { return checks_failed == 0 && checks_skipped == 0; }
};

struct CensusResult {
    std::vector<CheckReport> reports;
    CensusSummary summary;
};

/// Enumerates the census, verifies every graph, appends reports to
/// <out_dir>/census_reports.jsonl incrementally in canonical order, and
/// writes <out_dir>/census_summary.csv at the end.  With cfg.resume, graphs
/// already present in the JSONL are not recomputed.
CensusResult run_census(const CensusConfig& cfg);

void write_reports_jsonl(const std::string& path, const std::vector<CheckReport>& reports,
                         bool append);
void write_reports_csv(const std::string& path, const std::vector<CheckReport>& reports,
                       const std::vector<std::string>& check_columns);

/// Thread count from the environment cap SYMREG_THREADS (0 = no cap).
int thread_budget(int requested);

}  // namespace symreg
