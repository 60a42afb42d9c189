#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symreg/errors.hpp"
#include "symreg/harness.hpp"
#include "symreg/regularity.hpp"
#include "symreg/symbolic.hpp"

namespace {

symreg::SimpleGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw symreg::Error("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return symreg::parse_graph(buf.str());
}

std::set<int> parse_s_list(const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.insert(std::stoi(item));
    }
    return out;
}

std::vector<std::string> parse_check_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_reg(const std::string& input, int s, const std::string& kind, int prime,
            const std::string& engine) {
    symreg::SimpleGraph G = load_graph(input);
    symreg::MonomialIdeal I = symreg::edge_ideal(G);
    symreg::MonomialIdeal J;
    if (kind == "ordinary") {
        J = (s == 1) ? I : symreg::power(I, s);
    } else if (kind == "symbolic") {
        J = (s == 1) ? I : symreg::symbolic_power(I, s);
    } else {
        throw symreg::Error("kind must be 'ordinary' or 'symbolic'");
    }

    nlohmann::json out;
    out["graph_id"] = symreg::canonical_graph6(G);
    out["kind"] = kind;
    out["power"] = s;
    out["char"] = prime;
    out["ideal"] = nlohmann::json::parse(J.to_json_string());

    bool agree = true;
    if (engine == "takayama" || engine == "both") {
        symreg::RegOptions opts;
        opts.prime = prime;
        opts.threads = symreg::thread_budget(0);
        symreg::RegResult res = symreg::reg_takayama(J, opts);
        out["takayama"]["reg_quotient"] = res.reg_quotient;
        out["takayama"]["reg_ideal"] = res.reg_quotient + 1;
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : res.certificates) certs.push_back(nlohmann::json::parse(c.to_json_string()));
        out["takayama"]["certificates"] = certs;
    }
    if (engine == "betti" || engine == "both") {
        long long sigma = 0;
        for (int r : J.rho()) sigma += r;
        int cap = std::max<long long>(J.ambient() + 2 * J.max_generator_degree(), sigma);
        symreg::BettiTable table = symreg::betti_oracle(J, prime, cap);
        out["betti"] = nlohmann::json::parse(table.to_json_string());
        out["betti"]["reg_ideal"] = table.regularity() + 1;
    }
    if (engine == "both") {
        agree = out["takayama"]["reg_quotient"].get<int>() ==
                out["betti"]["regularity"].get<int>();
        out["engines_agree"] = agree;
    }
    std::cout << out.dump(2) << '\n';
    return agree ? 0 : 1;
}

int cmd_symbolic_gens(const std::string& input, int s) {
    symreg::SimpleGraph G = load_graph(input);
    symreg::MonomialIdeal I = symreg::edge_ideal(G);
    symreg::MonomialIdeal J = (s == 1) ? I : symreg::symbolic_power(I, s);
    std::cout << J.to_json_string() << '\n';
    return 0;
}

int report_exit(const symreg::CheckReport& report, bool print_json) {
    bool all_pass = true;
    for (const auto& [name, outcome] : report.checks) {
        if (!print_json)
            std::cout << (outcome.passed() ? "[PASS] " : (outcome.status == "skip" ? "[SKIP] " : "[FAIL] "))
                      << name << ": " << outcome.details << '\n';
        if (!outcome.passed()) all_pass = false;
    }
    if (print_json) std::cout << report.to_json_string() << '\n';
    return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& checks, const std::string& s_list,
               int prime, double timeout, bool print_json) {
    symreg::SimpleGraph G = load_graph(input);
    symreg::CensusConfig cfg;
    cfg.s_range = parse_s_list(s_list);
    cfg.checks = parse_check_list(checks);
    cfg.field_char = prime;
    cfg.per_graph_timeout_s = timeout;
    symreg::CheckReport report = symreg::verify_graph(G, cfg);
    return report_exit(report, print_json);
}

int cmd_census(int max_n, const std::string& s_list, const std::string& checks,
               const std::string& out_dir, bool resume, int prime, double timeout,
               bool include_disconnected) {
    symreg::CensusConfig cfg;
    cfg.max_n = max_n;
    cfg.s_range = parse_s_list(s_list);
    cfg.checks = parse_check_list(checks);
    cfg.out_dir = out_dir;
    cfg.resume = resume;
    cfg.field_char = prime;
    cfg.per_graph_timeout_s = timeout;
    cfg.connected_only = !include_disconnected;
    symreg::CensusResult result = symreg::run_census(cfg);
    const auto& s = result.summary;
    std::cout << "graphs: " << s.graphs << "  pass: " << s.checks_passed
              << "  fail: " << s.checks_failed << "  skip: " << s.checks_skipped << '\n';
    if (!s.skipped_graph_ids.empty()) {
        std::cout << "graphs with skipped checks (timeouts):\n";
        for (const auto& id : s.skipped_graph_ids) std::cout << "  " << id << '\n';
    }
    for (const auto& r : result.reports)
        for (const auto& [name, outcome] : r.checks)
            if (outcome.status == "fail")
                std::cout << "FAIL " << r.graph_id << " " << name << ": " << outcome.details
                          << '\n';
    return s.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic/ordinary power regularity toolkit for edge ideals"};
    app.require_subcommand(1);

    std::string input, kind = "ordinary", engine = "takayama", checks, out_dir;
    std::string s_list = "2,3";
    int s = 2, prime = 32003, max_n = 6;
    double timeout = 120.0;
    bool resume = false, print_json = false, include_disconnected = false;

    auto* reg = app.add_subcommand("reg", "regularity of a power of an edge ideal");
    reg->add_option("--input", input, "graph file (edge list or graph6)")->required();
    reg->add_option("--power", s, "power s >= 1")->default_val(2);
    reg->add_option("--kind", kind, "ordinary | symbolic")->default_val("ordinary");
    reg->add_option("--char", prime, "field characteristic")->default_val(32003);
    reg->add_option("--engine", engine, "takayama | betti | both")->default_val("takayama");

    auto* symbolic = app.add_subcommand("symbolic", "symbolic power operations");
    auto* gens = symbolic->add_subcommand("gens", "minimal generators of I(G)^(s)");
    gens->add_option("--input", input, "graph file")->required();
    gens->add_option("--s", s, "power s >= 1")->default_val(2);

    auto* verify = app.add_subcommand("verify", "run theorem checks on one graph");
    verify->add_option("--input", input, "graph file")->required();
    verify->add_option("--checks", checks, "comma-separated check names (default: all)");
    verify->add_option("--s", s_list, "powers to include, e.g. 2,3,4")->default_val("2,3,4");
    verify->add_option("--char", prime, "field characteristic")->default_val(32003);
    verify->add_option("--timeout", timeout, "per-graph seconds")->default_val(120.0);
    verify->add_flag("--json", print_json, "emit the JSON report instead of text lines");

    auto* census = app.add_subcommand("census", "verify all small graphs up to isomorphism");
    census->add_option("--max-n", max_n, "largest vertex count (<= 8)")->required();
    census->add_option("--s", s_list, "powers to include, e.g. 2,3")->default_val("2,3");
    census->add_option("--checks", checks, "comma-separated check names (default: all)");
    census->add_option("--out", out_dir, "output directory for JSONL/CSV/caches");
    census->add_flag("--resume", resume, "skip graphs already present in the JSONL");
    census->add_option("--char", prime, "field characteristic")->default_val(32003);
    census->add_option("--timeout", timeout, "per-graph seconds")->default_val(120.0);
    census->add_flag("--include-disconnected", include_disconnected,
                     "census over all graphs, not only connected ones");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reg->parsed()) return cmd_reg(input, s, kind, prime, engine);
        if (symbolic->parsed()) {
            if (!gens->parsed()) {
                std::cerr << "usage: symreg symbolic gens --input G.txt --s s\n";
                return 2;
            }
            return cmd_symbolic_gens(input, s);
        }
        if (verify->parsed())
            return cmd_verify(input, checks, s_list, prime, timeout, print_json);
        if (census->parsed())
            return cmd_census(max_n, s_list, checks, out_dir, resume, prime, timeout,
                              include_disconnected);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
