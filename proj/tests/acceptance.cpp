// Release gates: ten end-to-end criteria, printed one line each as
// [PASS]/[FAIL]. The process exits with the number of failed criteria, so
// the test harness fails exactly when a gate does. Criterion 10 drives the
// installed CLI binary, whose path arrives as argv[1].

#include "ordturan/construction.hpp"
#include "ordturan/containment.hpp"
#include "ordturan/errors.hpp"
#include "ordturan/harness.hpp"
#include "ordturan/ordered_graph.hpp"
#include "ordturan/parameters.hpp"
#include "ordturan/rational.hpp"
#include "ordturan/rng.hpp"
#include "ordturan/simplex.hpp"
#include "ordturan/solvers.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ordturan;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

Outcome ok() { return {true, ""}; }
Outcome fail(std::string note) { return {false, std::move(note)}; }

// --- shared helpers --------------------------------------------------------

// Decode a flat pair index into the edge (u, v), u < v, over [n].
Edge decode_pair(int n, std::uint64_t idx) {
    for (int u = 1; u < n; ++u) {
        std::uint64_t row = static_cast<std::uint64_t>(n - u);
        if (idx < row) return {u, u + 1 + static_cast<int>(idx)};
        idx -= row;
    }
    throw std::logic_error("pair index out of range");
}

OrderedGraph random_graph(int n, int edge_target, SeededRng& rng) {
    auto max_pairs = static_cast<std::uint32_t>(n) * (n - 1) / 2;
    auto picks = rng.sample_without_replacement(max_pairs,
                                                static_cast<std::uint32_t>(edge_target));
    std::vector<Edge> edges;
    edges.reserve(picks.size());
    for (auto p : picks) edges.push_back(decode_pair(n, p));
    return OrderedGraph(n, edges);
}

std::string rat_str(const Rat& r) { return rat_to_string(r); }

// --- criterion 1: closed-form edge count ------------------------------------

Outcome c1_edge_count() {
    for (int d = 0; d <= 5; ++d) {
        for (int m = 1; m <= 8; ++m) {
            int n = m << d;
            ConstructionParams params{Rat(1), d, 2, n,
                                      derive_seed(111, static_cast<std::uint64_t>(d) * 16 + m)};
            ConstructedGraph built = build_g(params, CertMode::attempt);
            long long expect = edge_count_formula(n, d);
            if (built.graph.edge_count() != expect)
                return fail("(d=" + std::to_string(d) + ", m=" + std::to_string(m) + "): " +
                            std::to_string(built.graph.edge_count()) + " edges, expected " +
                            std::to_string(expect));
        }
    }
    return ok();
}

// --- criterion 2: recursion inequality triples ------------------------------

Outcome c2_recursion_suite() {
    const int triples = 10000;
    for (int k = 2; k <= 5; ++k) {
        for (int d = 1; d <= 8; ++d) {
            SeededRng rng(derive_seed(222, static_cast<std::uint64_t>(k) * 64 + d));
            for (int t = 0; t < triples; ++t) {
                SimplexVector beta = random_simplex(k, rng);
                SimplexVector gamma = random_simplex(k, rng);
                BoundReport rep = check_recursion(beta, gamma, d);
                if (!rep.holds)
                    return fail("violated at k=" + std::to_string(k) + " d=" + std::to_string(d) +
                                " lhs=" + rat_str(rep.lhs) + " rhs=" + rat_str(rep.rhs));
            }
        }
    }
    return ok();
}

// --- criterion 3: leveling lower bound --------------------------------------

Outcome c3_leveling_mean() {
    SeededRng host_rng(333);
    OrderedGraph host = random_graph(30, 200, host_rng);
    const long long e = host.edge_count();
    const int draws = 100000;
    for (int levels = 2; levels <= 4; ++levels) {
        long long total_kept = 0;
        for (int i = 0; i < draws; ++i) {
            auto [sub, leveling] = random_leveling_subgraph(
                host, levels,
                derive_seed(333, static_cast<std::uint64_t>(levels) * 1000000 + i));
            total_kept += sub.edge_count();
            if (!leveling.certifies(sub))
                return fail("draw " + std::to_string(i) + " at L=" + std::to_string(levels) +
                            " not certified by its level map");
            if (longest_monotone_path_len(sub) >= levels)
                return fail("draw " + std::to_string(i) + " at L=" + std::to_string(levels) +
                            " contains an ascending path with " + std::to_string(levels) +
                            " edges");
        }
        Rat mean(total_kept, e * static_cast<long long>(draws));
        Rat target(levels - 1, 2 * levels);
        Rat err = mean - target;
        if (err < 0) err = -err;
        if (err > Rat(1, 100))
            return fail("L=" + std::to_string(levels) + ": mean " + rat_str(mean) + " vs target " +
                        rat_str(target) + " differs by more than 1/100");
    }
    return ok();
}

// --- criterion 4: solver equals the subset oracle ---------------------------

Outcome c4_solver_oracle() {
    SeededRng rng(444);
    for (int g_i = 0; g_i < 200; ++g_i) {
        int n = 4 + static_cast<int>(rng.below(6));
        auto max_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        int e = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(18, max_pairs)));
        OrderedGraph g = random_graph(n, e, rng);
        for (int k : {2, 3}) {
            SolveResult exact = max_pkfree_exact(g, k);
            SolveResult oracle = max_ffree_oracle(g, make_path(k));
            if (!exact.optimal)
                return fail("solver hit its budget on graph " + std::to_string(g_i));
            if (exact.kept_edges.size() != oracle.kept_edges.size())
                return fail("graph " + std::to_string(g_i) + " k=" + std::to_string(k) +
                            ": solver " + std::to_string(exact.kept_edges.size()) + " vs oracle " +
                            std::to_string(oracle.kept_edges.size()));
            OrderedGraph sub(g.n(), exact.kept_edges);
            if (!sub.is_edge_subset_of(g) || longest_monotone_path_len(sub) >= k)
                return fail("solver subgraph invalid on graph " + std::to_string(g_i));
        }
    }
    return ok();
}

// --- criteria 5-7 share the certified grid ----------------------------------

struct GridInstance {
    int m = 0, d = 0, n = 0;
    std::uint64_t expected_seed = 0;
    const char* golden_exact = "";
    std::uint64_t found_seed = 0;
    ConstructedGraph built;
    SolveResult exact;
    SolveResult lower;
};

struct GridState {
    std::string error;
    std::vector<GridInstance> instances;
    std::optional<ConstructedGraph> big;  // spectrally certified large instance
};

// Golden values recorded from the first certified run of this grid and
// pinned; the seed column is the first seed whose build certifies.
GridState build_grid_state() {
    GridState s;
    const struct {
        int m, d, n;
        std::uint64_t seed;
        const char* exact;
    } golden[] = {
        {2, 1, 4, 0, "1/1"},  {2, 2, 8, 0, "5/8"},   {2, 3, 16, 6, "13/24"},
        {3, 1, 6, 0, "1/1"},  {3, 2, 12, 0, "11/18"}, {3, 3, 24, 0, "1/2"},
    };
    for (const auto& row : golden) {
        GridInstance inst;
        inst.m = row.m;
        inst.d = row.d;
        inst.n = row.n;
        inst.expected_seed = row.seed;
        inst.golden_exact = row.exact;
        std::optional<ConstructedGraph> built;
        for (std::uint64_t seed = 0; seed < 200 && !built; ++seed) {
            try {
                built = build_g(ConstructionParams{Rat(1), row.d, 2, row.n, seed});
                inst.found_seed = seed;
            } catch (const CertificationError&) {
            }
        }
        if (!built) {
            s.error = "no certifying seed in 0..199 for n=" + std::to_string(row.n) +
                      " d=" + std::to_string(row.d);
            return s;
        }
        inst.built = std::move(*built);
        inst.exact = max_pkfree_exact(inst.built.graph, 2);
        inst.lower = best_leveling_sampled(inst.built.graph, 2, 256, 77);
        s.instances.push_back(std::move(inst));
    }
    try {
        s.big = build_g(ConstructionParams{Rat(1), 2, 2, 256, 0});
    } catch (const CertificationError& e) {
        s.error = std::string("large spectral instance failed: ") + e.what();
    }
    return s;
}

GridState& grid() {
    static GridState s = build_grid_state();
    return s;
}

Outcome c5_sandwich() {
    GridState& s = grid();
    if (!s.error.empty()) return fail(s.error);
    Rat prev_ratio;
    int prev_m = -1;
    for (const auto& inst : s.instances) {
        if (!inst.built.all_certified())
            return fail("instance n=" + std::to_string(inst.n) + " not fully certified");
        if (inst.found_seed != inst.expected_seed)
            return fail("first certifying seed moved: n=" + std::to_string(inst.n) + " d=" +
                        std::to_string(inst.d) + " got " + std::to_string(inst.found_seed) +
                        " pinned " + std::to_string(inst.expected_seed));
        if (!inst.exact.optimal)
            return fail("exact solve not optimal at n=" + std::to_string(inst.n));
        std::string id = "m=" + std::to_string(inst.m) + " d=" + std::to_string(inst.d);
        if (rat_str(inst.exact.ratio) != inst.golden_exact)
            return fail(id + ": exact ratio " + rat_str(inst.exact.ratio) + " vs pinned " +
                        inst.golden_exact);
        if (inst.exact.ratio < Rat(1, 4)) return fail(id + ": exact ratio below 1/4");
        if (inst.d == 1 && inst.exact.ratio != Rat(1))
            return fail(id + ": depth-1 instance keeps everything, ratio must be 1");
        if (inst.lower.ratio > inst.exact.ratio)
            return fail(id + ": sampled lower bound exceeds the exact ratio");
        if (inst.m == prev_m && inst.exact.ratio > prev_ratio)
            return fail(id + ": exact ratio increased along d at fixed density scale");
        prev_m = inst.m;
        prev_ratio = inst.exact.ratio;
    }
    return ok();
}

Outcome c6_partition_bound() {
    GridState& s = grid();
    if (!s.error.empty()) return fail(s.error);
    const int partitions = 1000;
    const int k = 2;
    auto check_graph = [&](const ConstructedGraph& built, std::uint64_t salt) -> std::string {
        const int n = built.params.n;
        const int d = built.params.d;
        SeededRng rng(derive_seed(666, salt));
        for (int p = 0; p < partitions; ++p) {
            std::vector<std::vector<int>> parts(k);
            std::vector<Rat> alpha_coords(k, Rat(0));
            for (int v = 1; v <= n; ++v) {
                auto c = static_cast<size_t>(rng.below(k));
                parts[c].push_back(v);
                alpha_coords[c] += Rat(1, n);
            }
            SimplexVector alpha(alpha_coords);
            Rat lhs = ascending_cross_edges(built.graph, parts);
            Rat rhs = (h(alpha, d) + d * Rat(1)) * Rat(BigInt(n) * n, BigInt(1) << (d + 2));
            if (lhs > rhs)
                return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " partition " +
                       std::to_string(p) + ": " + rat_str(lhs) + " > " + rat_str(rhs);
        }
        return "";
    };
    std::uint64_t salt = 0;
    for (const auto& inst : s.instances) {
        std::string err = check_graph(inst.built, salt++);
        if (!err.empty()) return fail(err);
    }
    if (!s.big) return fail("large spectral instance unavailable");
    std::string err = check_graph(*s.big, salt);
    if (!err.empty()) return fail(err);
    return ok();
}

Outcome c7_ratio_bound() {
    GridState& s = grid();
    if (!s.error.empty()) return fail(s.error);
    auto verify = [&](const ConstructedGraph& built, const std::vector<Edge>& edges,
                      const std::string& label) -> std::string {
        OrderedGraph sub(built.params.n, edges);
        BoundReport rep = verify_ratio_bound(built, sub, 2);
        if (!rep.holds)
            return label + ": ratio bound violated, lhs=" + rat_str(rep.lhs) +
                   " rhs=" + rat_str(rep.rhs);
        return "";
    };
    for (size_t i = 0; i < s.instances.size(); ++i) {
        const auto& inst = s.instances[i];
        std::string id = "n=" + std::to_string(inst.n) + " d=" + std::to_string(inst.d);
        std::string err = verify(inst.built, inst.exact.kept_edges, id + " exact");
        if (!err.empty()) return fail(err);
        err = verify(inst.built, inst.lower.kept_edges, id + " sampled");
        if (!err.empty()) return fail(err);
        for (int j = 0; j < 5; ++j) {
            auto [sub, leveling] = random_leveling_subgraph(
                inst.built.graph, 2, derive_seed(777, i * 8 + static_cast<std::uint64_t>(j)));
            (void)leveling;
            std::vector<Edge> edges(sub.edges().begin(), sub.edges().end());
            err = verify(inst.built, edges, id + " draw " + std::to_string(j));
            if (!err.empty()) return fail(err);
        }
    }
    if (!s.big) return fail("large spectral instance unavailable");
    SolveResult big_lower = best_leveling_sampled(s.big->graph, 2, 64, 91);
    std::string err = verify(*s.big, big_lower.kept_edges, "n=256 sampled");
    if (!err.empty()) return fail(err);
    for (int j = 0; j < 3; ++j) {
        auto [sub, leveling] =
            random_leveling_subgraph(s.big->graph, 2, derive_seed(778, static_cast<std::uint64_t>(j)));
        (void)leveling;
        std::vector<Edge> edges(sub.edges().begin(), sub.edges().end());
        err = verify(*s.big, edges, "n=256 draw " + std::to_string(j));
        if (!err.empty()) return fail(err);
    }
    return ok();
}

// --- criterion 8: transversal machinery at brute-force scale ----------------

OrderedGraph random_graph_bits(int n, SeededRng& rng, bool require_edge) {
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.below(2) == 1) edges.emplace_back(u, v);
        if (!require_edge || !edges.empty()) return OrderedGraph(n, std::move(edges));
    }
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Outcome c8_transversals() {
    // (a) identity: the transversal-sum equals t^(m-2) times the subgraph size
    for (int m = 2; m <= 4; ++m) {
        for (int t = 1; t <= 4; ++t) {
            for (int rep_i = 0; rep_i < 3; ++rep_i) {
                SeededRng rng(derive_seed(888, static_cast<std::uint64_t>(m) * 100 + t * 10 + rep_i));
                OrderedGraph base = random_graph_bits(m, rng, false);
                auto [full, layout] = blow_up(base, t);
                std::vector<Edge> kept;
                for (const auto& e : full.edges())
                    if (rng.below(2) == 1) kept.push_back(e);
                OrderedGraph h_prime(full.n(), kept);
                TransversalReport report =
                    transversal_report(h_prime, layout, Rat(0), make_path(1));
                long long expect = ipow(t, m - 2) * h_prime.edge_count();
                if (report.sum_of_induced_edges != expect)
                    return fail("identity (m=" + std::to_string(m) + ", t=" + std::to_string(t) +
                                "): " + std::to_string(report.sum_of_induced_edges) + " vs " +
                                std::to_string(expect));
            }
        }
    }
    // (b) rich transversals: density hypothesis forces at least eps * t^m
    {
        const Rat rho(1, 2), eps(1, 8);
        int case_idx = 0;
        for (int m : {3, 4}) {
            for (int t : {3, 4}) {
                for (int rep_i = 0; rep_i < 5; ++rep_i, ++case_idx) {
                    SeededRng rng(derive_seed(889, static_cast<std::uint64_t>(case_idx)));
                    OrderedGraph base = random_graph_bits(m, rng, true);
                    auto [full, layout] = blow_up(base, t);
                    auto full_edges = full.edges();
                    Rat target_r = (rho + 2 * eps) * Rat(full.edge_count());
                    BigInt target_big = (numerator(target_r) + denominator(target_r) - 1) /
                                        denominator(target_r);
                    auto target = target_big.convert_to<std::uint32_t>();
                    auto picks = rng.sample_without_replacement(
                        static_cast<std::uint32_t>(full.edge_count()), target);
                    std::vector<Edge> kept;
                    for (auto idx : picks) kept.push_back(full_edges[idx]);
                    OrderedGraph h_prime(full.n(), kept);
                    Rat threshold = (rho + eps) * Rat(base.edge_count());
                    TransversalReport report =
                        transversal_report(h_prime, layout, threshold, make_path(1));
                    if (Rat(report.rich_count) < eps * Rat(ipow(t, m)))
                        return fail("rich count " + std::to_string(report.rich_count) +
                                    " below bound at m=" + std::to_string(m) +
                                    " t=" + std::to_string(t));
                }
            }
        }
    }
    // (c) monotonicity: pattern-free hosts stay blow-up-free
    for (int i = 0; i < 100; ++i) {
        SeededRng rng(derive_seed(890, static_cast<std::uint64_t>(i)));
        OrderedGraph f = random_graph_bits(3 + static_cast<int>(rng.below(2)), rng, true);
        OrderedGraph host = random_graph_bits(5 + static_cast<int>(rng.below(3)), rng, false);
        while (auto emb = contains(host, f)) {
            auto f_edges = f.edges();
            const auto& [a, b] = f_edges[rng.below(f_edges.size())];
            Edge victim{emb->mapping[static_cast<size_t>(a - 1)],
                        emb->mapping[static_cast<size_t>(b - 1)]};
            std::vector<Edge> rest;
            for (const auto& e : host.edges())
                if (e != victim) rest.push_back(e);
            host = OrderedGraph(host.n(), rest);
        }
        int t = 1 + static_cast<int>(rng.below(2));
        auto [ft, layout] = blow_up(f, t);
        (void)layout;
        if (contains(host, ft))
            return fail("case " + std::to_string(i) + ": pattern-free host contains the t=" +
                        std::to_string(t) + " blow-up");
    }
    return ok();
}

// --- criterion 9: exact parameter formulas ----------------------------------

Outcome c9_parameters() {
    for (int k = 1; k <= 6; ++k) {
        OrderedGraph p = make_path(k);
        if (interval_chromatic(p) != k + 1)
            return fail("interval chromatic of the " + std::to_string(k) + "-edge path is " +
                        std::to_string(interval_chromatic(p)) + ", expected " +
                        std::to_string(k + 1));
        TuranParameters tp = turan_parameters(p);
        if (tp.vec_pi != Rat(k - 1, k))
            return fail("ordered density of the " + std::to_string(k) + "-edge path is " +
                        rat_str(tp.vec_pi) + ", expected " + rat_str(Rat(k - 1, k)));
    }
    for (int l = 3; l <= 8; ++l) {
        TuranParameters tp = turan_parameters(make_cycle(l));
        if (tp.rho_lower != Rat(l - 2, 2 * l - 2))
            return fail("cycle length " + std::to_string(l) + ": lower bound " +
                        rat_str(tp.rho_lower) + ", expected " + rat_str(Rat(l - 2, 2 * l - 2)));
    }
    return ok();
}

// --- criterion 10: CLI replay determinism -----------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return "<unreadable>";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_wall_clock(const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("wall_clock_ms") == std::string::npos) {
            out += line;
            out += '\n';
        }
    return out;
}

Outcome c10_determinism(const std::string& cli) {
    if (cli.empty() || !fs::exists(cli)) return fail("CLI binary path not provided or missing");
    fs::path dir = fs::current_path() / "acceptance_tmp";
    fs::create_directories(dir);
    auto run = [&](const std::string& args, const std::string& tag) -> bool {
        std::string cmd = "\"" + cli + "\" " + args + " > \"" + (dir / (tag + ".out")).string() +
                          "\" 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    struct Cmd {
        std::string tag;
        std::string args;
    };
    fs::path csv = dir / "rep.csv";
    fs::path json = dir / "rep.json";
    std::vector<Cmd> cmds{
        {"converge", "converge --k 2 --eps 1 --d 1 2 --multiplier 4 --seed 9 --trials 32"
                     " --csv-out \"" + csv.string() + "\" --json-out \"" + json.string() + "\""},
        {"check", "check --depth-table --k 2 --eps 1 --json-out \"" + json.string() + "\""},
        {"audit", "blowup-audit --cases 25 --seed 6 --json-out \"" + json.string() + "\""},
    };
    for (const auto& cmd : cmds) {
        if (!run(cmd.args, cmd.tag)) return fail(cmd.tag + ": first run failed");
        std::string json1 = slurp(json), csv1 = cmd.tag == "converge" ? slurp(csv) : "";
        std::string out1 = slurp(dir / (cmd.tag + ".out"));
        if (!run(cmd.args, cmd.tag)) return fail(cmd.tag + ": second run failed");
        std::string json2 = slurp(json), csv2 = cmd.tag == "converge" ? slurp(csv) : "";
        std::string out2 = slurp(dir / (cmd.tag + ".out"));
        if (strip_wall_clock(json1) != strip_wall_clock(json2))
            return fail(cmd.tag + ": JSON reports differ beyond the wall clock");
        if (csv1 != csv2) return fail(cmd.tag + ": CSV outputs differ");
        if (out1 != out2) return fail(cmd.tag + ": stdout differs");
    }
    return ok();
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    struct Gate {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Gate> gates{
        {1, "closed-form edge count across the construction grid (d <= 5, m <= 8)",
         c1_edge_count},
        {2, "level-split recursion inequality: 10^4 exact triples per (k, d) cell",
         c2_recursion_suite},
        {3, "random leveling keeps (L-1)/(2L) of edges on average; every draw certified",
         c3_leveling_mean},
        {4, "branch-and-bound solver matches the subset oracle on 200 random graphs",
         c4_solver_oracle},
        {5, "exact path-free ratio sandwich on the certified grid matches pinned values",
         c5_sandwich},
        {6, "partition bound holds for 1000 random partitions per certified graph",
         c6_partition_bound},
        {7, "ratio bound verified for every solver subgraph on certified graphs",
         c7_ratio_bound},
        {8, "transversal identity, rich-count bound, and blow-up monotonicity",
         c8_transversals},
        {9, "exact density parameters for ascending paths and ordered cycles", c9_parameters},
        {10, "seeded commands replay byte-identically (wall clock excluded)",
         [&cli]() { return c10_determinism(cli); }},
    };
    int failures = 0;
    for (const auto& gate : gates) {
        Outcome outcome;
        try {
            outcome = gate.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        if (outcome.pass) {
            std::printf("[PASS] %d. %s\n", gate.id, gate.name);
        } else {
            ++failures;
            std::printf("[FAIL] %d. %s -- %s\n", gate.id, gate.name, outcome.note.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures;
}
