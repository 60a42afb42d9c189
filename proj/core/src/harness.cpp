#include "symreg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "symreg/errors.hpp"
#include "symreg/symbolic.hpp"

namespace symreg {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

std::string CheckReport::to_json_string() const {
    json j;
    j["graph_id"] = graph_id;
    j["n"] = n;
    j["m"] = m;
    j["char"] = field_char;
    json checks_j = json::object();
    for (const auto& [name, outcome] : checks) {
        json o;
        o["status"] = outcome.status;
        o["details"] = outcome.details;
        if (!outcome.reproducer.empty()) o["reproducer"] = json::parse(outcome.reproducer);
        checks_j[name] = o;
    }
    j["checks"] = checks_j;
    j["timings_ms"] = timings_ms;
    return j.dump();
}

CheckReport CheckReport::from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what(), 1);
    }
    CheckReport r;
    r.graph_id = j.at("graph_id").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.field_char = j.at("char").get<int>();
    for (const auto& [name, o] : j.at("checks").items()) {
        CheckOutcome out;
        out.status = o.at("status").get<std::string>();
        out.details = o.at("details").get<std::string>();
        if (o.contains("reproducer")) out.reproducer = o.at("reproducer").dump();
        r.checks[name] = out;
    }
    if (j.contains("timings_ms"))
        r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
}

// ---------------------------------------------------------------------------
// Regularity cache.
// ---------------------------------------------------------------------------

struct RegCache::Impl {
    std::unordered_map<std::string, int> map;
    mutable std::mutex mu;
    std::ofstream out;
};

RegCache::RegCache(const std::string& jsonl_path) : impl_(new Impl) {
    if (jsonl_path.empty()) return;
    std::ifstream in(jsonl_path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            impl_->map[j.at("key").get<std::string>()] = j.at("reg_quotient").get<int>();
        } catch (const json::exception&) {
            // a torn trailing line from an interrupted run is ignored
        }
    }
    in.close();
    impl_->out.open(jsonl_path, std::ios::app);
}

RegCache::~RegCache() { delete impl_; }

std::string RegCache::make_key(const std::string& graph_id, const std::string& kind, int s,
                               int prime) {
    return graph_id + "|" + kind + "|" + std::to_string(s) + "|" + std::to_string(prime);
}

std::optional<int> RegCache::lookup(const std::string& key) const {
    if (!impl_) return std::nullopt;
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->map.find(key);
    if (it == impl_->map.end()) return std::nullopt;
    return it->second;
}

void RegCache::store(const std::string& key, int reg_quotient) {
    if (!impl_) return;
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto [it, inserted] = impl_->map.emplace(key, reg_quotient);
    if (inserted && impl_->out.is_open()) {
        json j;
        j["key"] = key;
        j["reg_quotient"] = reg_quotient;
        impl_->out << j.dump() << '\n';
        impl_->out.flush();
    }
}

int thread_budget(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* env = std::getenv("SYMREG_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) t = std::min(t, cap);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Per-graph check machinery.
// ---------------------------------------------------------------------------

namespace {

struct CheckContext {
    const SimpleGraph& G;
    const CensusConfig& cfg;
    RegCache* cache;
    std::string graph_id;
    std::chrono::steady_clock::time_point deadline;

    std::map<std::pair<std::string, int>, MonomialIdeal> ideal_memo;

    const MonomialIdeal& ideal(const std::string& kind, int s) {
        auto key = std::make_pair(kind, s);
        auto it = ideal_memo.find(key);
        if (it != ideal_memo.end()) return it->second;
        MonomialIdeal J;
        if (kind == "ordinary") {
            J = (s == 1) ? edge_ideal(G) : power(edge_ideal(G), s);
        } else if (kind == "symbolic") {
            J = (s == 1) ? edge_ideal(G) : symbolic_power(edge_ideal(G), s);
        } else if (kind == "closure") {
            J = fourth_closure(G);
        } else {
            throw Error("unknown ideal kind: " + kind);
        }
        return ideal_memo.emplace(key, std::move(J)).first->second;
    }

    RegOptions reg_options(bool collect) const {
        RegOptions opts;
        opts.prime = cfg.field_char;
        opts.collect_certificates = collect;
        opts.threads = 1;
        opts.deadline = deadline;
        return opts;
    }

    /// reg(S/J) for the given kind/s, through the cross-run cache.
    int reg_quotient(const std::string& kind, int s) {
        std::string key = RegCache::make_key(graph_id, kind, s, cfg.field_char);
        if (cache) {
            if (auto hit = cache->lookup(key)) return *hit;
        }
        int r = reg_takayama(ideal(kind, s), reg_options(false)).reg_quotient;
        if (cache) cache->store(key, r);
        return r;
    }

    std::string reproducer(json extra) const {
        json j;
        j["graph"] = to_edge_list_text(G);
        j["graph_id"] = graph_id;
        for (auto& [k, v] : extra.items()) j[k] = v;
        return j.dump();
    }
};

CheckOutcome pass(std::string details) { return {"pass", std::move(details), ""}; }
CheckOutcome fail(std::string details, std::string repro) {
    return {"fail", std::move(details), std::move(repro)};
}

CheckOutcome check_conjA(CheckContext& ctx, int s) {
    int ro = ctx.reg_quotient("ordinary", s) + 1;
    int rs = ctx.reg_quotient("symbolic", s) + 1;
    std::string stat = "reg I^" + std::to_string(s) + " = " + std::to_string(ro) +
                       ", reg I^(" + std::to_string(s) + ") = " + std::to_string(rs);
    if (ro == rs) return pass(stat);
    return fail(stat, ctx.reproducer({{"s", s}}));
}

CheckOutcome check_boundB(CheckContext& ctx, int s) {
    int r1 = ctx.reg_quotient("ordinary", 1) + 1;
    int rs = ctx.reg_quotient("ordinary", s) + 1;
    std::string stat = "reg I^" + std::to_string(s) + " = " + std::to_string(rs) +
                       " <= reg I + " + std::to_string(2 * s - 2) + " = " +
                       std::to_string(r1 + 2 * s - 2);
    if (rs <= r1 + 2 * s - 2) return pass(stat);
    return fail(stat, ctx.reproducer({{"s", s}}));
}

CheckOutcome check_boundSym(CheckContext& ctx, int s) {
    int r1 = ctx.reg_quotient("ordinary", 1) + 1;
    int rs = ctx.reg_quotient("symbolic", s) + 1;
    std::string stat = "reg I^(" + std::to_string(s) + ") = " + std::to_string(rs) +
                       " <= reg I + " + std::to_string(2 * s - 2) + " = " +
                       std::to_string(r1 + 2 * s - 2);
    if (rs <= r1 + 2 * s - 2) return pass(stat);
    return fail(stat, ctx.reproducer({{"s", s}}));
}

CheckOutcome check_bipartite_collapse(CheckContext& ctx) {
    if (!is_bipartite(ctx.G)) return pass("not bipartite (vacuous)");
    for (int s = 2; s <= 4; ++s) {
        if (ctx.ideal("symbolic", s) != ctx.ideal("ordinary", s))
            return fail("I^(" + std::to_string(s) + ") != I^" + std::to_string(s),
                        ctx.reproducer({{"s", s}}));
    }
    return pass("ideals equal for s = 2,3,4");
}

/// Sweeps all exponents in the componentwise box of the two ideals; colon by
/// x^a stabilizes beyond the box, so this covers every a in N^n.
template <typename Fn>
bool sweep_exponent_box(const std::vector<int>& rho, Fn&& visit) {
    int n = static_cast<int>(rho.size());
    std::vector<int> a(n, 0);
    while (true) {
        if (!visit(a)) return false;
        int j = n - 1;
        for (; j >= 0; --j) {
            if (a[j] < rho[j]) {
                ++a[j];
                break;
            }
            a[j] = 0;
        }
        if (j < 0) return true;
    }
}

std::vector<int> joint_rho(const MonomialIdeal& A, const MonomialIdeal& B) {
    std::vector<int> ra = A.rho(), rb = B.rho();
    for (size_t i = 0; i < ra.size(); ++i) ra[i] = std::max(ra[i], rb[i]);
    return ra;
}

CheckOutcome check_key2(CheckContext& ctx) {
    const MonomialIdeal& I2 = ctx.ideal("ordinary", 2);
    const MonomialIdeal& Is2 = ctx.ideal("symbolic", 2);
    long long tested = 0;
    std::string repro;
    bool ok = sweep_exponent_box(joint_rho(I2, Is2), [&](const std::vector<int>& a) {
        Monomial xa{std::vector<int>(a)};
        if (Is2.contains(xa)) return true;
        ++tested;
        if (radical_colon(Is2, Exponent(a)) == radical_colon(I2, Exponent(a))) return true;
        repro = ctx.reproducer({{"s", 2}, {"a", a}});
        return false;
    });
    if (ok) return pass("radical colons agree at " + std::to_string(tested) + " exponents");
    return fail("radical colons differ", repro);
}

CheckOutcome check_key3(CheckContext& ctx) {
    const MonomialIdeal& I3 = ctx.ideal("ordinary", 3);
    const MonomialIdeal& Is3 = ctx.ideal("symbolic", 3);
    const MonomialIdeal J1 = aux_ideals(ctx.G).j1;
    long long tested = 0, differing = 0;
    std::string repro;
    bool ok = sweep_exponent_box(joint_rho(I3, Is3), [&](const std::vector<int>& a) {
        Monomial xa{std::vector<int>(a)};
        if (Is3.contains(xa)) return true;
        ++tested;
        MonomialIdeal rsym = radical_colon(Is3, Exponent(a));
        MonomialIdeal rord = radical_colon(I3, Exponent(a));
        if (rsym == rord) return true;
        ++differing;
        for (const auto& g : rord.gens()) {
            if (!rsym.contains(g)) {
                repro = ctx.reproducer({{"s", 3}, {"a", a}, {"why", "ordinary colon not inside symbolic colon"}});
                return false;
            }
        }
        std::vector<int> supp_a = Exponent(a).support();
        for (const auto& f : rsym.gens()) {
            if (rord.contains(f)) continue;
            bool deg_one = f.degree() == 1;
            bool outside =
                deg_one && !std::binary_search(supp_a.begin(), supp_a.end(), f.support()[0]);
            if (!deg_one || !outside) {
                repro = ctx.reproducer(
                    {{"s", 3}, {"a", a}, {"offender", f.a.v}, {"why", "offender not a fresh variable"}});
                return false;
            }
        }
        if (!J1.is_zero() && J1.contains(xa)) return true;
        repro = ctx.reproducer({{"s", 3}, {"a", a}, {"why", "no triangle divides x^a"}});
        return false;
    });
    if (ok)
        return pass("structure verified at " + std::to_string(tested) + " exponents (" +
                    std::to_string(differing) + " with differing colons)");
    return fail("colon structure violated", repro);
}

CheckOutcome check_red0(CheckContext& ctx) {
    std::vector<int> svals{1};
    for (int s : {2, 3})
        if (ctx.cfg.s_range.count(s)) svals.push_back(s);
    long long extensions = 0, certs_total = 0;
    for (int s : svals) {
        const MonomialIdeal& J = ctx.ideal("ordinary", s);
        RegResult res = reg_takayama(J, ctx.reg_options(true));
        if (ctx.cache)
            ctx.cache->store(RegCache::make_key(ctx.graph_id, "ordinary", s, ctx.cfg.field_char),
                             res.reg_quotient);
        certs_total += static_cast<long long>(res.certificates.size());
        std::set<int> ts;
        for (const auto& cert : res.certificates) {
            MonomialIdeal R = radical_colon(J, cert.a);
            std::vector<int> supp = cert.a.support();
            for (int t = 1; t <= J.ambient(); ++t) {
                if (std::binary_search(supp.begin(), supp.end(), t)) continue;
                std::vector<int> e(J.ambient(), 0);
                e[t - 1] = 1;
                if (R.contains(Monomial(e))) ts.insert(t);
            }
        }
        for (int t : ts) {
            std::vector<int> e(J.ambient(), 0);
            e[t - 1] = 1;
            MonomialIdeal extended =
                add(J, MonomialIdeal::from_generators(J.ambient(), {Monomial(e)}));
            ++extensions;
            int r_ext = reg_takayama(extended, ctx.reg_options(false)).reg_quotient;
            if (r_ext != res.reg_quotient) {
                return fail("reg changed when adding x" + std::to_string(t) + " at s = " +
                                std::to_string(s),
                            ctx.reproducer({{"s", s}, {"t", t}}));
            }
        }
    }
    return pass("verified " + std::to_string(extensions) + " variable extensions across " +
                std::to_string(certs_total) + " certificates");
}

CheckOutcome check_fourth_closure(CheckContext& ctx) {
    const MonomialIdeal& H = ctx.ideal("closure", 4);
    MonomialIdeal rhs = add(ctx.ideal("symbolic", 4), ctx.ideal("ordinary", 3));
    if (H == rhs) return pass("I^3 + J1*J1 + J3 = I^(4) + I^3");
    return fail("closed form differs from I^(4) + I^3", ctx.reproducer({{"s", 4}}));
}

CheckOutcome check_induced_matching_formula(CheckContext& ctx) {
    int mu = matching_stats(ctx.G).induced_matching_number;
    int regI = ctx.reg_quotient("ordinary", 1) + 1;
    if (regI != mu + 1)
        return pass("premise reg I = mu + 1 fails (reg I = " + std::to_string(regI) +
                    ", mu = " + std::to_string(mu) + "); vacuous");
    std::vector<int> tested;
    for (int s : ctx.cfg.s_range) {
        if (s < 2 || s > 4) continue;
        int rs = ctx.reg_quotient("symbolic", s) + 1;
        if (rs != 2 * s + mu - 1) {
            return fail("reg I^(" + std::to_string(s) + ") = " + std::to_string(rs) +
                            " != " + std::to_string(2 * s + mu - 1),
                        ctx.reproducer({{"s", s}, {"mu", mu}}));
        }
        tested.push_back(s);
    }
    std::string slist;
    for (size_t k = 0; k < tested.size(); ++k)
        slist += (k ? "," : "") + std::to_string(tested[k]);
    return pass("reg I^(s) = 2s + mu - 1 for s = " + slist + " (mu = " + std::to_string(mu) + ")");
}

CheckOutcome check_dual_engine(CheckContext& ctx) {
    std::vector<std::pair<std::string, int>> targets{{"ordinary", 1}};
    for (int s : {2, 3}) {
        if (!ctx.cfg.s_range.count(s)) continue;
        targets.push_back({"ordinary", s});
        targets.push_back({"symbolic", s});
    }
    if (ctx.cfg.s_range.count(4)) {
        targets.push_back({"symbolic", 4});
        targets.push_back({"closure", 4});
    }
    for (auto& [kind, s] : targets) {
        int rt = ctx.reg_quotient(kind, s);
        int rb = betti_regularity(ctx.ideal(kind, s), ctx.cfg.field_char);
        if (rt != rb) {
            return fail("takayama = " + std::to_string(rt) + ", betti = " + std::to_string(rb) +
                            " on " + kind + " s = " + std::to_string(s),
                        ctx.reproducer({{"kind", kind}, {"s", s}}));
        }
    }
    return pass("engines agree on " + std::to_string(targets.size()) + " ideals");
}

CheckOutcome check_char_compare(CheckContext& ctx) {
    std::string notes;
    for (int s : ctx.cfg.s_range) {
        for (const std::string kind : {"ordinary", "symbolic"}) {
            RegOptions opts = ctx.reg_options(false);
            opts.prime = 2;
            int r2 = reg_takayama(ctx.ideal(kind, s), opts).reg_quotient;
            int rp = ctx.reg_quotient(kind, s);
            if (r2 != rp)
                notes += kind + " s=" + std::to_string(s) + ": GF(2)=" + std::to_string(r2) +
                         " GF(" + std::to_string(ctx.cfg.field_char) + ")=" + std::to_string(rp) +
                         "; ";
        }
    }
    if (notes.empty()) return pass("no characteristic dependence observed");
    return pass("characteristic differences: " + notes);
}

struct CheckSpec {
    std::string name;
    int required_s;  // 0 when independent of s_range
    CheckOutcome (*fn)(CheckContext&);
};

CheckOutcome run_conjA_s2(CheckContext& c) { return check_conjA(c, 2); }
CheckOutcome run_conjA_s3(CheckContext& c) { return check_conjA(c, 3); }
CheckOutcome run_boundB_s2(CheckContext& c) { return check_boundB(c, 2); }
CheckOutcome run_boundB_s3(CheckContext& c) { return check_boundB(c, 3); }
CheckOutcome run_boundSym_s2(CheckContext& c) { return check_boundSym(c, 2); }
CheckOutcome run_boundSym_s3(CheckContext& c) { return check_boundSym(c, 3); }
CheckOutcome run_boundSym_s4(CheckContext& c) { return check_boundSym(c, 4); }

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry{
        {"conjA_s2", 2, run_conjA_s2},
        {"conjA_s3", 3, run_conjA_s3},
        {"boundB_s2", 2, run_boundB_s2},
        {"boundB_s3", 3, run_boundB_s3},
        {"boundSym_s2", 2, run_boundSym_s2},
        {"boundSym_s3", 3, run_boundSym_s3},
        {"boundSym_s4", 4, run_boundSym_s4},
        {"bipartite_collapse", 0, check_bipartite_collapse},
        {"key2_identity", 2, check_key2},
        {"key3_structure", 3, check_key3},
        {"red0_sweep", 0, check_red0},
        {"fourth_closure_identity", 4, check_fourth_closure},
        {"induced_matching_formula", 0, check_induced_matching_formula},
        {"dual_engine", 0, check_dual_engine},
        {"char_compare", 0, check_char_compare},
    };
    return registry;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& spec : check_registry()) out.push_back(spec.name);
        return out;
    }();
    return names;
}

std::vector<std::string> effective_checks(const CensusConfig& cfg) {
    std::vector<std::string> requested = cfg.checks;
    if (requested.empty()) {
        for (const auto& spec : check_registry())
            if (spec.name != "char_compare") requested.push_back(spec.name);
    }
    std::vector<std::string> out;
    for (const std::string& name : requested) {
        const CheckSpec* found = nullptr;
        for (const auto& spec : check_registry())
            if (spec.name == name) found = &spec;
        if (!found) throw Error("unknown check name: " + name);
        if (found->required_s != 0 && !cfg.s_range.count(found->required_s)) continue;
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
}

CheckReport verify_graph(const SimpleGraph& G, const CensusConfig& cfg, RegCache* cache) {
    if (G.edge_count() == 0) throw Error("verify_graph requires a graph with at least one edge");
    CheckReport report;
    report.graph_id = canonical_graph6(G);
    report.n = G.n();
    report.m = G.edge_count();
    report.field_char = cfg.field_char;

    CheckContext ctx{G,
                     cfg,
                     cache,
                     report.graph_id,
                     std::chrono::steady_clock::now() +
                         std::chrono::milliseconds(
                             static_cast<long long>(cfg.per_graph_timeout_s * 1000.0))};

    for (const std::string& name : effective_checks(cfg)) {
        const CheckSpec* spec = nullptr;
        for (const auto& s : check_registry())
            if (s.name == name) spec = &s;
        auto t0 = std::chrono::steady_clock::now();
        CheckOutcome outcome;
        if (t0 > ctx.deadline) {
            outcome = {"skip", "per-graph timeout budget exhausted", ""};
        } else {
            try {
                outcome = spec->fn(ctx);
            } catch (const TimeoutError&) {
                outcome = {"skip", "per-graph timeout hit during check", ""};
            } catch (const Error& e) {
                outcome = {"fail", std::string("error: ") + e.what(), ctx.reproducer({})};
            }
        }
        auto t1 = std::chrono::steady_clock::now();
        report.checks[name] = outcome;
        report.timings_ms[name] =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Census driver.
// ---------------------------------------------------------------------------

namespace {

void validate_config(const CensusConfig& cfg) {
    if (cfg.max_n < 2 || cfg.max_n > 8) throw Error("census max_n must be in [2, 8]");
    if (cfg.s_range.empty()) throw Error("census s_range must be nonempty");
    for (int s : cfg.s_range)
        if (s < 2 || s > 4) throw Error("census s_range entries must be 2, 3 or 4");
    effective_checks(cfg);  // validates names
}

}  // namespace

void write_reports_jsonl(const std::string& path, const std::vector<CheckReport>& reports,
                         bool append) {
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) throw Error("cannot open " + path);
    for (const auto& r : reports) out << r.to_json_string() << '\n';
}

void write_reports_csv(const std::string& path, const std::vector<CheckReport>& reports,
                       const std::vector<std::string>& check_columns) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot open " + path);
    out << "graph_id,n,m,char";
    for (const auto& c : check_columns) out << ',' << c;
    out << ",total_ms\n";
    for (const auto& r : reports) {
        out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.field_char;
        double total = 0;
        for (const auto& [k, v] : r.timings_ms) total += v;
        for (const auto& c : check_columns) {
            auto it = r.checks.find(c);
            out << ',' << (it == r.checks.end() ? "-" : it->second.status);
        }
        out << ',' << total << '\n';
    }
}

CensusResult run_census(const CensusConfig& cfg) {
    validate_config(cfg);
    std::vector<SimpleGraph> graphs = enumerate_graphs_up_to(cfg.max_n, cfg.connected_only);
    graphs.erase(std::remove_if(graphs.begin(), graphs.end(),
                                [](const SimpleGraph& G) { return G.edge_count() == 0; }),
                 graphs.end());

    std::string reports_path, csv_path, cache_path;
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        reports_path = cfg.out_dir + "/census_reports.jsonl";
        csv_path = cfg.out_dir + "/census_summary.csv";
        cache_path = cfg.out_dir + "/reg_cache.jsonl";
    }

    std::unordered_map<std::string, CheckReport> resumed;
    if (cfg.resume && !reports_path.empty()) {
        std::ifstream in(reports_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            CheckReport r = CheckReport::from_json_string(line);
            resumed.emplace(r.graph_id, std::move(r));
        }
    } else if (!reports_path.empty()) {
        std::ofstream truncate(reports_path, std::ios::trunc);
    }

    RegCache cache(cache_path);

    struct Slot {
        bool ready = false;
        bool from_resume = false;
        CheckReport report;
    };
    std::vector<Slot> slots(graphs.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;

    int threads = thread_budget(cfg.threads);
    auto worker = [&] {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= graphs.size()) break;
            std::string id = to_graph6(graphs[idx]);  // already canonical
            Slot slot;
            try {
                auto it = resumed.find(id);
                if (it != resumed.end()) {
                    slot.report = it->second;
                    slot.from_resume = true;
                } else {
                    slot.report = verify_graph(graphs[idx], cfg, &cache);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                cv.notify_all();
                return;
            }
            slot.ready = true;
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[idx] = std::move(slot);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    // emit reports incrementally in canonical order
    CensusResult result;
    {
        std::ofstream out;
        if (!reports_path.empty()) out.open(reports_path, std::ios::app);
        std::unique_lock<std::mutex> lock(mu);
        for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
            cv.wait(lock, [&] { return slots[idx].ready || failed.load(); });
            if (failed.load() && !slots[idx].ready) break;
            CheckReport& r = slots[idx].report;
            if (out.is_open() && !slots[idx].from_resume) {
                out << r.to_json_string() << '\n';
                out.flush();
            }
            result.reports.push_back(std::move(r));
        }
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    CensusSummary& summary = result.summary;
    summary.graphs = static_cast<int>(result.reports.size());
    for (const auto& r : result.reports) {
        bool skipped = false;
        for (const auto& [name, outcome] : r.checks) {
            if (outcome.status == "pass") ++summary.checks_passed;
            else if (outcome.status == "fail") ++summary.checks_failed;
            else {
                ++summary.checks_skipped;
                skipped = true;
            }
        }
        if (skipped) summary.skipped_graph_ids.push_back(r.graph_id);
    }
    if (!csv_path.empty()) write_reports_csv(csv_path, result.reports, effective_checks(cfg));
    return result;
}

}  // namespace symreg
