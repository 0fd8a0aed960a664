// eqlc: command-line front end for the equitable list-coloring toolkit.
// Graphs come in as edge-list text ("n m" header, then one "u v" line per
// edge); every report is a JSON document echoing the graph, the flags, and
// the seed when randomness is involved, so runs are reproducible.
// Exit codes: 0 = done, 1 = a mathematical check failed, 2 = usage/budget.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "eqlc/choosable.hpp"
#include "eqlc/coloring.hpp"
#include "eqlc/discharge.hpp"
#include "eqlc/enumerate.hpp"
#include "eqlc/good_string.hpp"
#include "eqlc/graph.hpp"
#include "eqlc/potential.hpp"
#include "eqlc/random.hpp"
#include "eqlc/safety.hpp"
#include "eqlc/sharpness.hpp"
#include "eqlc/structure.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace eqlc;

namespace {

constexpr int schema_version = 1;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

graph read_graph(const std::string& path) {
    auto r = load_graph(read_all(path));
    if (!r.ok()) throw usage_error("bad graph " + path + ": " + to_string(r.status) +
                                   (r.detail.empty() ? "" : " (" + r.detail + ")"));
    return r.g;
}

json graph_json(const graph& g) {
    json edges = json::array();
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u], [&](int v) {
            if (u < v) edges.push_back({u, v});
        });
    return {{"n", g.n}, {"edges", edges}};
}

std::string edge_list_text(const graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u], [&](int v) {
            if (u < v) out << u << " " << v << "\n";
        });
    return out.str();
}

json vset_json(vset s) { return json(set_to_vector(s)); }

json lists_json(const list_assignment& L) {
    json out = json::array();
    for (const auto& l : L) out.push_back(l);
    return out;
}

// {"0": [1,2,3], ...}; every vertex of the graph must be present
list_assignment parse_lists(const std::string& path, int n) {
    json doc = json::parse(read_all(path), nullptr, true, true);
    if (!doc.is_object()) throw usage_error("list file must be a JSON object");
    list_assignment L(n);
    std::vector<bool> seen(n, false);
    for (auto& [key, val] : doc.items()) {
        int v = -1;
        try {
            v = std::stoi(key);
        } catch (...) {
            throw usage_error("list file: bad vertex key '" + key + "'");
        }
        if (v < 0 || v >= n) throw usage_error("list file: vertex " + key + " out of range");
        if (!val.is_array()) throw usage_error("list file: entry " + key + " is not an array");
        for (auto& c : val) L[v].push_back(c.get<int>());
        seen[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw usage_error("list file: vertex " + std::to_string(v) + " missing");
    return L;
}

// accepts "3" or "1/3"
std::pair<std::int64_t, std::int64_t> parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return {std::stoll(s), 1};
        std::int64_t num = std::stoll(s.substr(0, slash));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den <= 0) throw usage_error("rational denominator must be positive: " + s);
        return {num, den};
    } catch (const usage_error&) {
        throw;
    } catch (...) {
        throw usage_error("bad rational: " + s);
    }
}

std::string rational_string(std::int64_t num, std::int64_t den) {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw usage_error("cannot write " + out_path);
    out << text;
}

int worker_count() {
    if (const char* env = std::getenv("EQLC_WORKERS")) {
        int w = std::atoi(env);
        if (w < 1 || w > 64) throw usage_error("EQLC_WORKERS must be in 1..64");
        return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

// deterministic per-item seed, independent of worker count
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + (idx + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const char* to_string(solve_status s) {
    switch (s) {
        case solve_status::found: return "found";
        case solve_status::none: return "none";
        default: return "cap_exceeded";
    }
}

const char* to_string(choosable_verdict v) {
    switch (v) {
        case choosable_verdict::yes: return "yes";
        case choosable_verdict::no: return "no";
        case choosable_verdict::budget_exceeded: return "budget_exceeded";
        default: return "inconclusive";
    }
}

const char* to_string(thread_kind k) {
    switch (k) {
        case thread_kind::plain: return "plain";
        case thread_kind::loose: return "loose";
        default: return "closed";
    }
}

const char* to_string(bug_tag t) {
    switch (t) {
        case bug_tag::fork: return "fork";
        case bug_tag::wishbone: return "wishbone";
        case bug_tag::jellyfish: return "jellyfish";
        default: return "none";
    }
}

json stages_json(const std::vector<safety_stage>& stages) {
    json out = json::array();
    for (const auto& st : stages)
        out.push_back({{"method", st.method == stage_method::ordered ? "ordered" : "greedy"},
                       {"vertices", st.vertices}});
    return out;
}

// ---- subcommand bodies ---------------------------------------------------

int run_potential(const std::string& graph_path, int k, const std::string& method, int brute_cap,
                  const std::string& out_path) {
    graph g = read_graph(graph_path);
    potential_method m =
        method == "brute" ? potential_method::brute : potential_method::flow;
    potential_result r;
    try {
        r = max_potential(g, k, m, brute_cap);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    json doc = {{"schema_version", schema_version},
                {"subcommand", "potential"},
                {"graph", graph_json(g)},
                {"k", k},
                {"method", method},
                {"value", r.value},
                {"witness", vset_json(r.witness)},
                {"extreme_union", vset_json(r.extreme_union)},
                {"sigma", sigma(g, k)}};
    emit(doc, out_path);
    return 0;
}

int run_sparse_check(const std::string& graph_path, std::int64_t num, std::int64_t den,
                     const std::string& add, const std::string& out_path) {
    graph g = read_graph(graph_path);
    auto [add_num, add_den] = parse_rational(add);
    sparseness_result r;
    try {
        r = check_sparseness(g, num, den, add_num, add_den);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    json doc = {{"schema_version", schema_version},
                {"subcommand", "sparse-check"},
                {"graph", graph_json(g)},
                {"num", num},
                {"den", den},
                {"add", rational_string(add_num, add_den)},
                {"ok", r.ok},
                {"witness", vset_json(r.witness)}};
    if (g.n > 0) {
        auto mad = max_average_degree(g);
        doc["mad"] = rational_string(mad.num, mad.den);
    }
    emit(doc, out_path);
    return 0;
}

void require_k34(int k) {
    if (k != 3 && k != 4) throw usage_error("--k must be 3 or 4");
}

int run_structure(const std::string& graph_path, int k, const std::string& out_path) {
    require_k34(k);
    graph g = read_graph(graph_path);
    json threads = json::array();
    for (const auto& t : find_threads(g))
        threads.push_back({{"kind", to_string(t.kind)},
                           {"root", t.root},
                           {"end", t.end},
                           {"t", t.t},
                           {"path", t.path}});
    json bugs = json::array();
    for_each_bit(v3plus(g), [&](int r) {
        auto b = maximal_bug(g, r);
        auto c = classify_bug(g, b, k);
        json row = {{"root", r},
                    {"size", popcnt(b.members)},
                    {"members", vset_json(b.members)},
                    {"legs", vset_json(b.legs)},
                    {"bodies", vset_json(b.bodies)},
                    {"lambda", b.lambda},
                    {"pi", b.pi},
                    {"tag", to_string(c.tag)}};
        if (c.tag == bug_tag::fork) row["fork_degree"] = c.fork_degree;
        bugs.push_back(row);
    });
    json doc = {{"schema_version", schema_version},
                {"subcommand", "structure"},
                {"graph", graph_json(g)},
                {"k", k},
                {"threads", threads},
                {"bugs", bugs},
                {"fork_roots", fork_roots(g, k)}};
    emit(doc, out_path);
    return 0;
}

int run_solve(const std::string& graph_path, int k, const std::string& mode,
              const std::string& lists_path, int cap, const std::string& out_path) {
    graph g = read_graph(graph_path);
    solve_mode m = mode == "equitable-k"      ? solve_mode::equitable_k
                   : mode == "equitable-list" ? solve_mode::equitable_list
                                              : solve_mode::se;
    list_assignment L =
        lists_path.empty() ? uniform_lists(g.n, k) : parse_lists(lists_path, g.n);
    solve_result r;
    try {
        r = solve(g, k, L, m, cap);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    json doc = {{"schema_version", schema_version},
                {"subcommand", "solve"},
                {"graph", graph_json(g)},
                {"k", k},
                {"mode", mode},
                {"lists", lists_json(L)},
                {"status", to_string(r.status)}};
    if (r.status == solve_status::found) {
        doc["coloring"] = r.coloring;
        json sizes = json::array();
        for (auto [c, s] : class_sizes(r.coloring)) sizes.push_back({c, s});
        doc["class_sizes"] = sizes;
    }
    emit(doc, out_path);
    return 0;
}

int run_choosable(const std::string& graph_path, int k, const std::string& mode,
                  std::int64_t budget, int cap, int trials, std::uint64_t seed,
                  const std::string& out_path) {
    graph g = read_graph(graph_path);
    choosable_mode m = mode == "se" ? choosable_mode::se : choosable_mode::equitable;
    json doc = {{"schema_version", schema_version},
                {"subcommand", "choosable"},
                {"graph", graph_json(g)},
                {"k", k},
                {"mode", mode}};
    if (trials > 0) {
        rng r(seed);
        auto res = sampled_choosable(g, k, m, trials, r);
        doc["sampler"] = "random";
        doc["seed"] = seed;
        doc["trials_run"] = res.trials_run;
        doc["verdict"] = to_string(res.verdict);
        if (res.verdict == choosable_verdict::no) doc["witness_lists"] = lists_json(res.witness);
    } else {
        choosable_result res;
        try {
            res = is_choosable(g, k, m, budget, cap);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
        doc["sampler"] = "exhaustive";
        doc["verdict"] = to_string(res.verdict);
        doc["solver_calls"] = res.solver_calls;
        doc["complete_assignments"] = res.complete_assignments;
        if (res.verdict == choosable_verdict::no) doc["witness_lists"] = lists_json(res.witness);
    }
    emit(doc, out_path);
    return 0;
}

int run_safety(const std::string& graph_path, int root, int k, bool verify, int replays,
               std::uint64_t seed, const std::string& out_path) {
    graph g = read_graph(graph_path);
    if (root < 0 || root >= g.n) throw usage_error("--root out of range");
    auto b = maximal_bug(g, root);
    safety_verdict v;
    try {
        v = bug_safety(g, b, k);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    json doc = {{"schema_version", schema_version},
                {"subcommand", "safety"},
                {"graph", graph_json(g)},
                {"k", k},
                {"root", root},
                {"bug",
                 {{"members", vset_json(b.members)},
                  {"legs", vset_json(b.legs)},
                  {"bodies", vset_json(b.bodies)},
                  {"lambda", b.lambda},
                  {"pi", b.pi}}},
                {"status", v.status == safety_status::safe ? "safe" : "unknown"},
                {"rule", v.rule},
                {"stages", stages_json(v.stages)}};
    int rc = 0;
    if (verify && v.status == safety_status::safe) {
        doc["seed"] = seed;
        vset su = stage_union(v.stages);
        vset comp = g.vertices() & ~su;
        rng r(seed);
        int ran = 0, skipped = 0;
        std::string failure;
        for (int t = 0; t < replays && failure.empty(); ++t) {
            list_assignment L(g.n);
            if (t == 0) {
                L = uniform_lists(g.n, k);
            } else {
                for (int u = 0; u < g.n; ++u) L[u] = r.sample(2 * k, k);
            }
            auto [sub, back] = induced_subgraph(g, comp);
            list_assignment subL(sub.n);
            for (int u = 0; u < sub.n; ++u) subL[u] = L[back[u]];
            auto sr = solve(sub, k, subL, solve_mode::se);
            if (sr.status != solve_status::found) {
                ++skipped;
                continue;
            }
            std::vector<int> f(g.n, -1);
            for (int u = 0; u < sub.n; ++u) f[back[u]] = sr.coloring[u];
            try {
                f = replay_stages(g, k, L, v.stages, g.vertices(), std::move(f));
                if (!is_se(g, k, L, f)) failure = "replayed coloring is not SE";
            } catch (const std::exception& e) {
                failure = e.what();
            }
            ++ran;
        }
        doc["replays_run"] = ran;
        doc["replays_skipped"] = skipped;
        doc["verified"] = failure.empty();
        if (!failure.empty()) {
            doc["failure"] = failure;
            rc = exit_violation;
        }
    }
    emit(doc, out_path);
    return rc;
}

int run_discharge(const std::string& graph_path, int k, const std::string& y_spec,
                  const std::string& y_file, const std::string& out_path) {
    graph g = read_graph(graph_path);
    std::vector<int> yv;
    if (!y_file.empty()) {
        std::istringstream in(read_all(y_file));
        int v;
        while (in >> v) yv.push_back(v);
    } else if (!y_spec.empty()) {
        yv = parse_id_list(y_spec);
    }
    for (int v : yv)
        if (v < 0 || v >= g.n) throw usage_error("Y vertex out of range: " + std::to_string(v));
    vset y = vector_to_set(yv);
    audit_result a;
    try {
        a = audit(g, k, y);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    auto p = params_for(k);
    long long lhs = 2 * rho_subset(g, k, g.vertices());
    long long rhs = 2 * rho_subset(g, k, y);
    json rows = json::array();
    for (const auto& rep : a.reports) {
        int d = g.degree(rep.v);
        std::string row = d == 1 ? "V1" : d == 2 ? "V2" : "d" + std::to_string(d);
        json r = {{"v", rep.v},
                  {"degree", d},
                  {"table_row", row},
                  {"charge_halves", rep.final_halves},
                  {"in_scope", rep.in_scope},
                  {"status", !rep.in_scope       ? "out_of_scope"
                             : rep.ok            ? "ok"
                                                 : "below_claim"}};
        if (rep.in_scope) r["claim_halves"] = rep.claim_halves;
        rows.push_back(r);
        rhs += rep.final_halves;
    }
    json doc = {{"schema_version", schema_version},
                {"subcommand", "discharge"},
                {"graph", graph_json(g)},
                {"k", k},
                {"epsilon", p.epsilon},
                {"nu", p.nu},
                {"Y", yv},
                {"identity_lhs", lhs},
                {"identity_rhs", rhs},
                {"identity_holds", a.identity_holds},
                {"conservation_holds", a.conservation_holds},
                {"outside_edges_cleared", a.outside_edges_cleared},
                {"y_untouched", a.y_untouched},
                {"all_in_scope_ok", a.all_in_scope_ok},
                {"fork_roots_outside_Y", a.fork_roots_outside_y},
                {"per_vertex", rows}};
    emit(doc, out_path);
    bool bookkeeping = a.identity_holds && a.conservation_holds && a.outside_edges_cleared &&
                       a.y_untouched;
    // the per-vertex bounds are only promised once every fork root sits in Y
    bool bounds_due = a.fork_roots_outside_y.empty();
    return bookkeeping && (!bounds_due || a.all_in_scope_ok) ? 0 : exit_violation;
}

int run_gen_sharpness(int k, int n, int l, bool verify, bool solver, int brute_cap,
                      const std::string& out_path) {
    require_k34(k);
    sharp_family fam;
    try {
        fam = k == 3 ? gen_sharpness3(l, n) : gen_sharpness4(l, n);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    std::cout << edge_list_text(fam.g);
    if (!verify) return 0;
    auto rep = verify_sharpness(fam, solver, brute_cap);
    long long expected_rho = k == 3 ? 3 : 3 - (l % 2);
    bool ok = rep.rho_value == expected_rho && rep.rho_matches_brute && rep.cap_blocks &&
              rep.leaf_count == l;
    if (k == 3) ok = ok && rep.triangle_free;  // the matched pairs of the k=4 family form triangles
    if (solver) ok = ok && rep.solver_confirms;
    json doc = {{"schema_version", schema_version},
                {"subcommand", "gen-sharpness"},
                {"graph", graph_json(fam.g)},
                {"k", k},
                {"n", n},
                {"l", l},
                {"center", fam.center},
                {"rho", rep.rho_value},
                {"expected_rho", expected_rho},
                {"rho_matches_brute", rep.rho_matches_brute},
                {"leaf_count", rep.leaf_count},
                {"class_cap", rep.class_cap},
                {"class_floor", rep.class_floor},
                {"cap_blocks", rep.cap_blocks},
                {"triangle_free", rep.triangle_free},
                {"solver_ran", solver},
                {"solver_confirms", rep.solver_confirms},
                {"ok", ok}};
    emit(doc, out_path);
    return ok ? 0 : exit_violation;
}

struct theorem_row {
    json entry;
    bool in_scope = false;
    bool violation = false;
    bool sampled = false;
};

int run_verify_theorem(int k, int nmax, const std::string& sampler, std::uint64_t seed, int count,
                       int list_trials, const std::string& out_path) {
    require_k34(k);
    if (count < 1 || list_trials < 1) throw usage_error("--count and --list-trials must be >= 1");
    bool exhaustive = sampler == "exhaustive";
    if (exhaustive && nmax > catalog_max_n)
        throw usage_error("exhaustive sampler supports nmax <= " +
                          std::to_string(catalog_max_n));
    if (!exhaustive && nmax > 12) throw usage_error("random sampler supports nmax <= 12");
    if (!exhaustive && nmax < 4) throw usage_error("random sampler needs nmax >= 4");

    std::vector<graph> gs;
    if (exhaustive) {
        for (int n = 1; n <= nmax; ++n)
            for (auto& g : connected_graphs(n)) gs.push_back(g);
    } else {
        rng r(seed);
        for (int i = 0; i < count; ++i) {
            int n = 4 + r.below_int(nmax - 3);
            // keep samples sparse; small n caps the spare edges below n+1
            int spare = std::min(n + 1, n * (n - 1) / 2 - (n - 1));
            gs.push_back(random_connected_graph(r, n, r.below_int(spare + 1)));
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<theorem_row> rows(gs.size());
    std::atomic<std::size_t> next{0};
    int workers = worker_count();
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= gs.size()) return;
            const graph& g = gs[i];
            theorem_row& row = rows[i];
            try {
                auto pot = max_potential_flow(g, k);
                int sg = sigma(g, k);
                if (pot.value > 2 - sg) continue;
                row.in_scope = true;
                std::string verdict;
                json witness;
                if (g.n <= choosable_default_cap && exhaustive) {
                    auto res = is_choosable(g, k, choosable_mode::se);
                    row.violation = res.verdict != choosable_verdict::yes;
                    verdict = to_string(res.verdict);
                    if (row.violation) witness = lists_json(res.witness);
                } else {
                    row.sampled = true;
                    rng gr(mix_seed(seed, i));
                    auto res = sampled_choosable(g, k, choosable_mode::se, list_trials, gr);
                    row.violation = res.verdict == choosable_verdict::no;
                    verdict = row.violation ? "no" : "yes_sampled_only";
                    if (row.violation) witness = lists_json(res.witness);
                }
                if (row.violation) {
                    row.entry = {{"graph", graph_json(g)},
                                 {"rho", pot.value},
                                 {"sigma", sg},
                                 {"verdict", verdict},
                                 {"witness_lists", witness}};
                }
            } catch (const std::exception& e) {
                row.violation = true;
                row.entry = {{"graph", graph_json(g)}, {"verdict", "internal_error"},
                             {"detail", e.what()}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    json violations = json::array();
    std::int64_t in_scope = 0, sampled = 0;
    for (auto& row : rows) {
        in_scope += row.in_scope;
        sampled += row.sampled;
        if (row.violation) violations.push_back(row.entry);
    }
    json doc = {{"schema_version", schema_version},
                {"subcommand", "verify-theorem"},
                {"k", k},
                {"nmax", nmax},
                {"sampler", sampler},
                {"graphs_considered", gs.size()},
                {"graphs_in_scope", in_scope},
                {"checked_with_sampled_lists", sampled},
                {"complete", exhaustive && sampled == 0},
                {"violations", violations}};
    if (!exhaustive) {
        doc["seed"] = seed;
        doc["count"] = count;
        doc["list_trials"] = list_trials;
    }
    emit(doc, out_path);
    std::cerr << "verify-theorem: " << gs.size() << " graphs, " << in_scope << " in scope, "
              << violations.size() << " violations, " << ms << " ms, " << workers
              << " workers\n";
    return violations.empty() ? 0 : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for equitable and strongly-equitable list coloring"};
    app.require_subcommand(1);

    std::string graph_path, out_path, lists_path, method = "flow", mode, add = "0";
    std::string y_spec, y_file, sampler = "exhaustive";
    int k = 3, brute_cap = brute_default_cap, cap = solve_default_cap;
    int choose_cap = choosable_default_cap, gen_brute_cap = 22;
    int root = 0, replays = 4, trials = 0, nmax = 6, count = 200, list_trials = 200;
    int fam_n = 0, fam_l = 0;
    std::int64_t num = 0, den = 1, budget = -1;
    std::uint64_t seed = 1;
    bool verify = false, solver = true;

    auto add_graph_arg = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "edge-list file, or - for stdin")->required();
        sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    };

    auto* p_pot = app.add_subcommand("potential", "maximize the potential over vertex subsets");
    add_graph_arg(p_pot);
    p_pot->add_option("--k", k, "colors, 3 or 4")->required();
    p_pot->add_option("--method", method, "brute or flow")
        ->check(CLI::IsMember({"brute", "flow"}));
    p_pot->add_option("--brute-cap", brute_cap, "vertex cap for the brute method");

    auto* p_sparse = app.add_subcommand("sparse-check",
                                        "check den*||G[A]|| <= num*|A| + den*add for every A");
    add_graph_arg(p_sparse);
    p_sparse->add_option("--num", num)->required();
    p_sparse->add_option("--den", den)->required();
    p_sparse->add_option("--add", add, "integer or p/q");

    auto* p_struct = app.add_subcommand("structure", "inventory threads, bugs, and fork roots");
    add_graph_arg(p_struct);
    p_struct->add_option("--k", k, "colors, 3 or 4");

    auto* p_solve = app.add_subcommand("solve", "run the exact coloring solver");
    add_graph_arg(p_solve);
    p_solve->add_option("--k", k)->required();
    p_solve->add_option("--mode", mode, "equitable-k, equitable-list, or se")
        ->required()
        ->check(CLI::IsMember({"equitable-k", "equitable-list", "se"}));
    p_solve->add_option("--lists", lists_path, "JSON {vertex: [colors]}; default uniform 1..k");
    p_solve->add_option("--cap", cap, "solver vertex cap");

    auto* p_choose = app.add_subcommand("choosable", "decide k-choosability in the given mode");
    add_graph_arg(p_choose);
    p_choose->add_option("--k", k)->required();
    p_choose->add_option("--mode", mode, "equitable or se")
        ->required()
        ->check(CLI::IsMember({"equitable", "se"}));
    p_choose->add_option("--budget", budget, "max solver calls, -1 = unlimited");
    p_choose->add_option("--cap", choose_cap, "exhaustive vertex cap");
    p_choose->add_option("--trials", trials, "sample this many list assignments instead");
    p_choose->add_option("--seed", seed, "seed for --trials");

    auto* p_safe = app.add_subcommand("safety", "rule cascade verdict for the bug at a root");
    add_graph_arg(p_safe);
    p_safe->add_option("--root", root)->required();
    p_safe->add_option("--k", k)->required();
    p_safe->add_flag("--verify", verify, "replay the stages against the exact solver");
    p_safe->add_option("--replays", replays, "list assignments to replay under --verify");
    p_safe->add_option("--seed", seed, "seed for the random replay lists");

    auto* p_dis = app.add_subcommand("discharge", "audit the charge redistribution");
    add_graph_arg(p_dis);
    p_dis->add_option("--k", k)->required();
    p_dis->add_option("--y", y_spec, "comma-separated Y vertices");
    p_dis->add_option("--y-file", y_file, "file of whitespace-separated Y vertices");

    auto* p_gen = app.add_subcommand("gen-sharpness", "emit a tight-family member");
    p_gen->add_option("--k", k)->required();
    p_gen->add_option("--n", fam_n, "gadget count")->required();
    p_gen->add_option("--l", fam_l, "leaf count")->required();
    p_gen->add_flag("--verify", verify, "append the verification JSON");
    p_gen->add_flag("--solver,!--no-solver", solver, "run the exact solver during --verify");
    p_gen->add_option("--brute-cap", gen_brute_cap, "brute cross-check cap during --verify");
    p_gen->add_option("--out", out_path, "write the JSON report here instead of stdout");

    auto* p_thm = app.add_subcommand("verify-theorem",
                                     "low potential implies SE k-choosable, on many graphs");
    p_thm->add_option("--k", k)->required();
    p_thm->add_option("--nmax", nmax, "largest vertex count");
    p_thm->add_option("--sampler", sampler, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    p_thm->add_option("--seed", seed, "seed for the random sampler");
    p_thm->add_option("--count", count, "graphs to sample in random mode");
    p_thm->add_option("--list-trials", list_trials, "sampled list assignments per big graph");
    p_thm->add_option("--out", out_path, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (p_pot->parsed()) return run_potential(graph_path, k, method, brute_cap, out_path);
        if (p_sparse->parsed()) return run_sparse_check(graph_path, num, den, add, out_path);
        if (p_struct->parsed()) return run_structure(graph_path, k, out_path);
        if (p_solve->parsed()) return run_solve(graph_path, k, mode, lists_path, cap, out_path);
        if (p_choose->parsed())
            return run_choosable(graph_path, k, mode, budget, choose_cap, trials, seed, out_path);
        if (p_safe->parsed())
            return run_safety(graph_path, root, k, verify, replays, seed, out_path);
        if (p_dis->parsed()) return run_discharge(graph_path, k, y_spec, y_file, out_path);
        if (p_gen->parsed())
            return run_gen_sharpness(k, fam_n, fam_l, verify, solver, gen_brute_cap, out_path);
        if (p_thm->parsed())
            return run_verify_theorem(k, nmax, sampler, seed, count, list_trials, out_path);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return exit_violation;
    }
    return exit_usage;
}
