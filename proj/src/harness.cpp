#include "ordturan/harness.hpp"

#include "ordturan/containment.hpp"
#include "ordturan/errors.hpp"
#include "ordturan/json_io.hpp"
#include "ordturan/parameters.hpp"
#include "ordturan/rng.hpp"
#include "ordturan/simplex.hpp"
#include "ordturan/solvers.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

namespace ordturan {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot open output file: " + path);
    out << content;
    if (!out) throw PreconditionError("failed writing output file: " + path);
}

// Reports are dumped with sorted keys (nlohmann's default object ordering),
// so identical content is identical bytes.
void emit_report(const std::string& path, const Json& report) {
    if (path.empty()) return;
    write_file(path, report.dump(2) + "\n");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(cells[i]);
    }
    line += '\n';
    return line;
}

// "p/q (float)" cell for human-readable tables.
std::string rat_cell(const Rat& r) {
    return rat_to_string(r) + " (" + float_repr(r) + ")";
}

Rat harmonic(int d) {
    Rat s = 0;
    for (int r = 1; r <= d; ++r) s += Rat(1, r);
    return s;
}

// Depth threshold 2 + k*H_d <= eps*d: the regime where the ratio bound
// lands below (k-1)/(2k) + eps.
bool depth_meets(const Rat& eps, int k, int d) {
    return Rat(2) + k * harmonic(d) <= eps * d;
}

SimplexVector midpoint(const SimplexVector& beta, const SimplexVector& gamma) {
    std::vector<Rat> coords(static_cast<size_t>(beta.k()));
    for (int i = 0; i < beta.k(); ++i) coords[static_cast<size_t>(i)] = (beta[i] + gamma[i]) / 2;
    return SimplexVector(std::move(coords));
}

// The genuine recursion check, or (fault = true) the same computation with
// the leading coefficient of the right-hand side mispriced by one. The
// faulty variant exists only so the suite can prove it detects a wrong
// coefficient.
BoundReport recursion_report(const SimplexVector& beta, const SimplexVector& gamma, int d,
                             bool fault) {
    if (!fault) return check_recursion(beta, gamma, d);
    if (d < 1) throw PreconditionError("recursion check needs d >= 1");
    if (beta.k() != gamma.k()) throw PreconditionError("dimension mismatch");
    const int k = beta.k();
    SimplexVector alpha = midpoint(beta, gamma);
    Rat lhs = h(beta, d - 1) + h(gamma, d - 1);
    Rat cross = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) cross += beta[i] * gamma[j];
    lhs += 4 * cross;
    Rat rhs = 2 * ((d + 1) * (1 - alpha.norm_squared()) + k * harmonic(d));
    return make_bound_report(std::move(lhs), std::move(rhs));
}

Json simplex_json(const SimplexVector& v) {
    Json arr = Json::array();
    for (int i = 0; i < v.k(); ++i) arr.push_back(rat_to_string(v[i]));
    return arr;
}

} // namespace

int default_jobs() {
    const char* raw = std::getenv(kJobsEnvVar);
    if (raw == nullptr) return 1;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1 || v > 1024) return 1;
    return static_cast<int>(v);
}

OrderedGraph load_pattern(const std::string& text) {
    if (text.size() >= 2 && (text[0] == 'P' || text[0] == 'C' || text[0] == 'K') &&
        std::all_of(text.begin() + 1, text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        int v = 0;
        try {
            v = std::stoi(text.substr(1));
        } catch (const std::exception&) {
            throw PreconditionError("pattern parameter out of range: " + text);
        }
        switch (text[0]) {
            case 'P': return make_path(v);
            case 'C': return make_cycle(v);
            default: return make_clique(v);
        }
    }
    return load_graph_file(text);
}

// --------------------------------------------------------------------------
// build
// --------------------------------------------------------------------------

int cmd_build(const BuildConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    ConstructionParams params{cfg.eps, cfg.d, cfg.k, cfg.n, cfg.seed};
    params.validate();

    CertMode mode = cfg.allow_uncertified ? CertMode::attempt : CertMode::required;
    ConstructedGraph built = build_g(params, mode);

    save_graph_file(built.graph, cfg.graph_out);
    std::string cert_path = cfg.cert_out.empty() ? cfg.graph_out + ".cert.json" : cfg.cert_out;

    Json report;
    report["command"] = "build";
    Json config;
    config["eps"] = rat_to_string(cfg.eps);
    config["d"] = cfg.d;
    config["k"] = cfg.k;
    config["n"] = cfg.n;
    config["seed"] = cfg.seed;
    config["allow_uncertified"] = cfg.allow_uncertified;
    config["graph_out"] = cfg.graph_out;
    config["cert_out"] = cert_path;
    report["config"] = std::move(config);
    report["construction"] = json_of(built);
    report["expected_edges"] = edge_count_formula(cfg.n, cfg.d);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    write_file(cert_path, report.dump(2) + "\n");

    out << "built graph: n=" << cfg.n << " d=" << cfg.d << " k=" << cfg.k
        << " eps=" << rat_to_string(cfg.eps) << " edges=" << built.graph.edge_count()
        << " blocks=" << built.blocks.size()
        << " certified=" << (built.all_certified() ? "yes" : "no") << "\n";
    out << "graph file: " << cfg.graph_out << "\n";
    out << "certificate sidecar: " << cert_path << "\n";
    if (!built.all_certified())
        out << "warning: some blocks kept a failing certificate (see sidecar)\n";
    return kExitSuccess;
}

// --------------------------------------------------------------------------
// certify
// --------------------------------------------------------------------------

int cmd_certify(const CertifyConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    if (cfg.d < 1) throw PreconditionError("certify requires --d >= 1");
    OrderedGraph block = load_graph_file(cfg.graph_path);
    if (block.n() < 2 || block.n() % 2 != 0)
        throw PreconditionError("a block needs an even vertex count >= 2");

    CertMethod method;
    if (cfg.method == "auto")
        method = block.n() / 2 <= 12 ? CertMethod::exhaustive : CertMethod::spectral;
    else if (cfg.method == "exhaustive")
        method = CertMethod::exhaustive;
    else if (cfg.method == "sampled")
        method = CertMethod::sampled;
    else if (cfg.method == "spectral")
        method = CertMethod::spectral;
    else
        throw PreconditionError("unknown certification method: " + cfg.method);

    QuasirandomCertificate cert =
        certify_discrepancy(block, cfg.d, cfg.eps, cfg.k, method, cfg.seed, cfg.samples);

    Json report;
    report["command"] = "certify";
    Json config;
    config["graph"] = cfg.graph_path;
    config["d"] = cfg.d;
    config["eps"] = rat_to_string(cfg.eps);
    config["k"] = cfg.k;
    config["method"] = cfg.method;
    config["seed"] = cfg.seed;
    config["samples"] = cfg.samples;
    report["config"] = std::move(config);
    report["certificate"] = json_of(cert);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    out << "block: n=" << block.n() << " edges=" << block.edge_count() << "\n";
    out << "method: " << cert_method_name(cert.method)
        << "  tolerance: " << rat_cell(cert.tolerance)
        << "  worst observed: " << rat_cell(cert.worst_observed) << "\n";
    out << "pass: " << (cert.pass ? "yes" : "no") << "  sound: " << (cert.sound ? "yes" : "no")
        << "\n";
    return cert.pass ? kExitSuccess : kExitCertification;
}

// --------------------------------------------------------------------------
// converge
// --------------------------------------------------------------------------

namespace {

struct ConvergeRow {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    long long edges = 0;
    bool certified = false;
    SolveResult lower;
    SolveResult exact;
    Rat rho_lower;
    BoundReport bound;
    bool asymptotic = false;
};

ConvergeRow converge_row(const ConvergeConfig& cfg, size_t index, int n, int d) {
    ConvergeRow row;
    row.n = n;
    row.d = d;
    row.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(index));
    try {
        ConstructionParams params{cfg.eps, d, cfg.k, n, row.seed};
        CertMode mode = cfg.allow_uncertified ? CertMode::attempt : CertMode::required;
        ConstructedGraph built = build_g(params, mode);
        row.edges = built.graph.edge_count();
        row.certified = built.all_certified();
        row.lower = best_leveling_sampled(built.graph, cfg.k, cfg.trials,
                                          derive_seed(row.seed, 0x6c657665));
        row.exact = max_pkfree_exact(built.graph, cfg.k, cfg.budget);
        row.rho_lower = Rat(cfg.k - 1, 2 * cfg.k);
        OrderedGraph sub(n, row.exact.kept_edges);
        row.bound = verify_ratio_bound(built, sub, cfg.k);
        row.asymptotic = depth_meets(cfg.eps, cfg.k, d);
        row.ok = true;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

int cmd_converge(const ConvergeConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    if (cfg.trials < 1) throw PreconditionError("converge requires --trials >= 1");
    if (cfg.budget < 1) throw PreconditionError("converge requires --budget >= 1");
    if (cfg.multiplier < 1) throw PreconditionError("converge requires --multiplier >= 1");
    if (cfg.d_values.empty()) throw PreconditionError("converge requires at least one depth");
    if (!cfg.n_values.empty() && cfg.n_values.size() != cfg.d_values.size())
        throw PreconditionError("--n list must pair one value with every depth");

    // Resolve and validate the full grid before any work starts.
    std::vector<std::pair<int, int>> grid; // (n, d)
    for (size_t i = 0; i < cfg.d_values.size(); ++i) {
        int d = cfg.d_values[i];
        if (d < 1) throw PreconditionError("converge requires depths >= 1");
        if (d > 24) throw PreconditionError("converge depth cap is 24");
        long long n = cfg.n_values.empty()
                          ? static_cast<long long>(cfg.multiplier) * (1LL << d)
                          : cfg.n_values[i];
        if (n < 1 || n > (1 << 24)) throw PreconditionError("instance size out of range");
        ConstructionParams params{cfg.eps, d, cfg.k, static_cast<int>(n), 0};
        params.validate();
        grid.emplace_back(static_cast<int>(n), d);
    }

    int jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();
    jobs = std::min<int>(jobs, static_cast<int>(grid.size()));
    jobs = std::max(jobs, 1);

    std::vector<ConvergeRow> rows(grid.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            rows[i] = converge_row(cfg, i, grid[i].first, grid[i].second);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // CSV: every rational column pairs the exact value with its correctly
    // rounded float.
    std::string csv = csv_line({"n", "d", "seed", "edge_count", "certified", "lower_ratio",
                                "lower_ratio_float", "exact_ratio", "exact_ratio_float",
                                "rho_lower", "rho_lower_float", "ratio_bound",
                                "ratio_bound_float", "asymptotic", "bound_holds", "optimal",
                                "nodes_explored", "error"});
    Json json_rows = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["n"] = row.n;
        j["d"] = row.d;
        j["seed"] = row.seed;
        if (!row.ok) {
            j["error"] = row.error;
            json_rows.push_back(std::move(j));
            csv += csv_line({std::to_string(row.n), std::to_string(row.d),
                             std::to_string(row.seed), "", "", "", "", "", "", "", "", "", "", "",
                             "", "", "", row.error});
            continue;
        }
        j["edge_count"] = row.edges;
        j["certified"] = row.certified;
        j["lower"] = json_of(row.lower, false);
        j["exact"] = json_of(row.exact, false);
        j["rho_lower"] = rat_to_string(row.rho_lower);
        j["ratio_bound"] = rat_to_string(row.bound.rhs);
        j["bound"] = json_of(row.bound);
        j["asymptotic"] = row.asymptotic ? "ok" : "pre-asymptotic";
        json_rows.push_back(std::move(j));
        csv += csv_line({std::to_string(row.n), std::to_string(row.d), std::to_string(row.seed),
                         std::to_string(row.edges), row.certified ? "yes" : "no",
                         rat_to_string(row.lower.ratio), float_repr(row.lower.ratio),
                         rat_to_string(row.exact.ratio), float_repr(row.exact.ratio),
                         rat_to_string(row.rho_lower), float_repr(row.rho_lower),
                         rat_to_string(row.bound.rhs), float_repr(row.bound.rhs),
                         row.asymptotic ? "ok" : "pre-asymptotic", row.bound.holds ? "yes" : "no",
                         row.exact.optimal ? "yes" : "no", std::to_string(row.exact.nodes_explored),
                         ""});
    }
    if (!cfg.csv_out.empty()) write_file(cfg.csv_out, csv);

    Json report;
    report["command"] = "converge";
    Json config;
    config["k"] = cfg.k;
    config["eps"] = rat_to_string(cfg.eps);
    config["d_values"] = cfg.d_values;
    Json ns = Json::array();
    for (const auto& [n, d] : grid) {
        (void)d;
        ns.push_back(n);
    }
    config["n_values"] = std::move(ns);
    config["multiplier"] = cfg.multiplier;
    config["seed"] = cfg.seed;
    config["trials"] = cfg.trials;
    config["budget"] = cfg.budget;
    config["jobs"] = jobs;
    config["allow_uncertified"] = cfg.allow_uncertified;
    config["csv_out"] = cfg.csv_out;
    config["json_out"] = cfg.json_out;
    report["config"] = std::move(config);
    report["rows"] = std::move(json_rows);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    out << std::left << std::setw(8) << "n" << std::setw(4) << "d" << std::setw(9) << "edges"
        << std::setw(22) << "lower" << std::setw(22) << "exact" << std::setw(16) << "rho_lower"
        << std::setw(22) << "ratio_bound" << std::setw(10) << "certified"
        << "asymptotic\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(8) << row.n << std::setw(4) << row.d;
        if (!row.ok) {
            out << "row error: " << row.error << "\n";
            continue;
        }
        out << std::setw(9) << row.edges << std::setw(22) << rat_cell(row.lower.ratio)
            << std::setw(22) << rat_cell(row.exact.ratio) << std::setw(16)
            << rat_cell(row.rho_lower) << std::setw(22) << rat_cell(row.bound.rhs)
            << std::setw(10) << (row.certified ? "yes" : "no")
            << (row.asymptotic ? "ok" : "pre-asymptotic") << "\n";
    }
    if (!cfg.csv_out.empty()) out << "csv: " << cfg.csv_out << "\n";
    if (!cfg.json_out.empty()) out << "report: " << cfg.json_out << "\n";
    return kExitSuccess;
}

// --------------------------------------------------------------------------
// lower-bound / solve-exact
// --------------------------------------------------------------------------

int cmd_lower_bound(const LowerBoundConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    if (cfg.levels < 1) throw PreconditionError("lower-bound requires --levels >= 1");
    if (cfg.trials < 1) throw PreconditionError("lower-bound requires --trials >= 1");
    OrderedGraph g = load_graph_file(cfg.graph_path);
    SolveResult res = best_leveling_sampled(g, cfg.levels, cfg.trials, cfg.seed);

    Json report;
    report["command"] = "lower-bound";
    Json config;
    config["graph"] = cfg.graph_path;
    config["levels"] = cfg.levels;
    config["trials"] = cfg.trials;
    config["seed"] = cfg.seed;
    report["config"] = std::move(config);
    report["result"] = json_of(res, true);
    report["host_edges"] = g.edge_count();
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    out << "host: n=" << g.n() << " edges=" << g.edge_count() << "\n";
    out << "kept " << res.kept_edges.size() << " edges over " << cfg.trials
        << " leveling draws: ratio " << rat_cell(res.ratio) << "\n";
    out << "certified free of ascending paths with " << cfg.levels << " edges\n";
    return kExitSuccess;
}

int cmd_solve_exact(const SolveExactConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    OrderedGraph g = load_graph_file(cfg.graph_path);
    SolveResult res = max_pkfree_exact(g, cfg.k, cfg.budget);

    Json report;
    report["command"] = "solve-exact";
    Json config;
    config["graph"] = cfg.graph_path;
    config["k"] = cfg.k;
    config["budget"] = cfg.budget;
    config["seed"] = 0;
    report["config"] = std::move(config);
    report["result"] = json_of(res, true);
    report["host_edges"] = g.edge_count();
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    out << "host: n=" << g.n() << " edges=" << g.edge_count() << "\n";
    out << "max subgraph without an ascending " << cfg.k << "-edge path: "
        << res.kept_edges.size() << " edges, ratio " << rat_cell(res.ratio) << "\n";
    out << "optimal: " << (res.optimal ? "yes" : "no (budget hit)")
        << "  nodes explored: " << res.nodes_explored << "\n";
    return kExitSuccess;
}

// --------------------------------------------------------------------------
// check
// --------------------------------------------------------------------------

namespace {

struct Violation {
    std::string suite;
    std::string text;
    Json witness;
};

constexpr size_t kMaxStoredWitnesses = 20;

void record_violation(std::vector<Violation>& list, size_t& total, std::string suite,
                      std::string text, Json witness) {
    ++total;
    if (list.size() < kMaxStoredWitnesses)
        list.push_back({std::move(suite), std::move(text), std::move(witness)});
}

Json depth_table_json(const Rat& eps, int k, std::vector<Violation>& violations, size_t& total) {
    int chosen = choose_depth(eps, k);
    Json rows = Json::array();
    auto add_row = [&](int d) {
        Rat hd = harmonic(d);
        Rat lhs = Rat(2) + k * hd;
        Rat rhs = eps * d;
        bool meets = lhs <= rhs;
        Json row;
        row["d"] = d;
        row["harmonic"] = rat_to_string(hd);
        row["lhs"] = rat_to_string(lhs);
        row["rhs"] = rat_to_string(rhs);
        row["meets"] = meets;
        rows.push_back(std::move(row));
        // choose_depth must be the first depth meeting the threshold.
        if (meets != (d >= chosen)) {
            Json w;
            w["k"] = k;
            w["eps"] = rat_to_string(eps);
            w["d"] = d;
            w["chosen"] = chosen;
            record_violation(violations, total, "depth",
                             "chosen depth is not the minimal threshold depth", std::move(w));
        }
    };
    int table_top = std::min(chosen, 64);
    for (int d = 1; d <= table_top; ++d) add_row(d);
    if (chosen > table_top) add_row(chosen);

    BoundReport asym = asymptotic_check(k, eps, chosen);
    if (!asym.holds) {
        Json w;
        w["k"] = k;
        w["eps"] = rat_to_string(eps);
        w["d"] = chosen;
        w["report"] = json_of(asym);
        record_violation(violations, total, "depth", "asymptotic inequality fails at chosen depth",
                         std::move(w));
    }
    Json j;
    j["k"] = k;
    j["eps"] = rat_to_string(eps);
    j["chosen_depth"] = chosen;
    j["asymptotic"] = json_of(asym);
    j["rows"] = std::move(rows);
    return j;
}

} // namespace

int cmd_check(const CheckConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    if (cfg.k_values.empty()) throw PreconditionError("check requires at least one k");
    for (int k : cfg.k_values)
        if (k < 2) throw PreconditionError("check requires k >= 2");
    if (cfg.d_max < 1) throw PreconditionError("check requires --d-max >= 1");
    if (cfg.triples < 0) throw PreconditionError("check requires --triples >= 0");
    if (cfg.partitions < 0) throw PreconditionError("check requires --partitions >= 0");
    if (!(cfg.eps > 0)) throw PreconditionError("check requires eps > 0");

    std::vector<Violation> violations;
    size_t violations_total = 0;

    Json report;
    report["command"] = "check";
    Json config;
    config["k_values"] = cfg.k_values;
    config["d_max"] = cfg.d_max;
    config["triples"] = cfg.triples;
    config["eps"] = rat_to_string(cfg.eps);
    config["seed"] = cfg.seed;
    config["partitions"] = cfg.partitions;
    config["depth_table_only"] = cfg.depth_table_only;
    config["inject_fault"] = cfg.inject_fault;
    report["config"] = std::move(config);

    // Depth scan table: one table per k.
    Json depth_tables = Json::array();
    for (int k : cfg.k_values)
        depth_tables.push_back(depth_table_json(cfg.eps, k, violations, violations_total));
    report["depth_table"] = std::move(depth_tables);
    out << "depth table: " << cfg.k_values.size() << " scan(s) at eps=" << rat_to_string(cfg.eps);
    for (int k : cfg.k_values) out << "  [k=" << k << " -> d=" << choose_depth(cfg.eps, k) << "]";
    out << "\n";

    if (!cfg.depth_table_only) {
        // Recursion-inequality triples, parallelogram identity, and the exact
        // equal-split slack value, cell by cell.
        Json cells = Json::array();
        size_t recursion_checked = 0, para_checked = 0, slack_checked = 0;
        for (int k : cfg.k_values) {
            for (int d = 1; d <= cfg.d_max; ++d) {
                SeededRng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k) * 64 + d));
                size_t cell_violations = 0;
                for (int t = 0; t < cfg.triples; ++t) {
                    SimplexVector beta = random_simplex(k, rng);
                    SimplexVector gamma = random_simplex(k, rng);
                    BoundReport rep = recursion_report(beta, gamma, d, cfg.inject_fault);
                    ++recursion_checked;
                    if (!rep.holds) {
                        ++cell_violations;
                        Json w;
                        w["k"] = k;
                        w["d"] = d;
                        w["beta"] = simplex_json(beta);
                        w["gamma"] = simplex_json(gamma);
                        w["lhs"] = rat_to_string(rep.lhs);
                        w["rhs"] = rat_to_string(rep.rhs);
                        record_violation(violations, violations_total, "recursion",
                                         "recursion inequality violated", std::move(w));
                    }
                    // Parallelogram identity on the same pair, exact.
                    SimplexVector alpha = midpoint(beta, gamma);
                    Rat eta_norm = 0;
                    for (int i = 0; i < k; ++i) {
                        Rat e = (beta[i] - gamma[i]) / 2;
                        eta_norm += e * e;
                    }
                    ++para_checked;
                    if (beta.norm_squared() + gamma.norm_squared() !=
                        2 * (alpha.norm_squared() + eta_norm)) {
                        Json w;
                        w["k"] = k;
                        w["d"] = d;
                        w["beta"] = simplex_json(beta);
                        w["gamma"] = simplex_json(gamma);
                        record_violation(violations, violations_total, "parallelogram",
                                         "parallelogram identity violated", std::move(w));
                    }
                }
                // Equal-split slack: beta = gamma makes the recursion slack
                // exactly 2k/d (checked in genuine mode only; the fault mode
                // reuses the pair as one more detector input).
                if (cfg.triples > 0) {
                    SimplexVector beta = random_simplex(k, rng);
                    BoundReport rep = recursion_report(beta, beta, d, cfg.inject_fault);
                    ++slack_checked;
                    bool bad = cfg.inject_fault ? !rep.holds : rep.slack != Rat(2 * k, d);
                    if (bad && cfg.inject_fault) {
                        Json w;
                        w["k"] = k;
                        w["d"] = d;
                        w["beta"] = simplex_json(beta);
                        w["lhs"] = rat_to_string(rep.lhs);
                        w["rhs"] = rat_to_string(rep.rhs);
                        record_violation(violations, violations_total, "recursion",
                                         "recursion inequality violated", std::move(w));
                        ++cell_violations;
                    } else if (bad) {
                        Json w;
                        w["k"] = k;
                        w["d"] = d;
                        w["beta"] = simplex_json(beta);
                        w["slack"] = rat_to_string(rep.slack);
                        record_violation(violations, violations_total, "slack",
                                         "equal-split slack is not 2k/d", std::move(w));
                    }
                }
                Json cell;
                cell["k"] = k;
                cell["d"] = d;
                cell["triples"] = cfg.triples;
                cell["violations"] = cell_violations;
                cells.push_back(std::move(cell));
            }
        }
        Json recursion;
        recursion["cells"] = std::move(cells);
        recursion["checked"] = recursion_checked;
        report["recursion"] = std::move(recursion);
        report["parallelogram"] = Json{{"checked", para_checked}};
        report["slack_identity"] = Json{{"checked", slack_checked}};
        out << "recursion inequality: " << recursion_checked << " triples, parallelogram: " << para_checked
            << ", equal-split slack: " << slack_checked << "\n";

        // Partition bound on freshly built certified instances: the edges
        // kept by a random level map never exceed (h_d(alpha)+d*eps) *
        // n^2/2^(d+2).
        Json part_instances = Json::array();
        const std::vector<std::pair<int, int>> instances{{8, 1}, {16, 1}, {16, 2}, {24, 2}};
        for (int k : cfg.k_values) {
            for (auto [n, d] : instances) {
                Json inst;
                inst["n"] = n;
                inst["d"] = d;
                inst["k"] = k;
                std::optional<ConstructedGraph> built;
                std::uint64_t inst_seed = 0;
                std::uint64_t base =
                    derive_seed(cfg.seed, static_cast<std::uint64_t>(n) * 100 + d);
                for (std::uint64_t attempt = 0; attempt < 12 && !built; ++attempt) {
                    std::uint64_t s = derive_seed(base, static_cast<std::uint64_t>(k) * 16 + attempt);
                    try {
                        built = build_g(ConstructionParams{cfg.eps, d, k, n, s});
                        inst_seed = s;
                    } catch (const CertificationError&) {
                        // try the next derived seed
                    }
                }
                if (!built) {
                    inst["certified"] = false;
                    inst["skipped"] = true;
                    part_instances.push_back(std::move(inst));
                    continue;
                }
                inst["certified"] = true;
                inst["seed"] = inst_seed;
                inst["partitions"] = cfg.partitions;
                SeededRng rng(derive_seed(base, static_cast<std::uint64_t>(k) * 977 + 7));
                Rat min_slack;
                bool have_slack = false;
                size_t inst_violations = 0;
                for (int p = 0; p < cfg.partitions; ++p) {
                    std::vector<std::vector<int>> parts(static_cast<size_t>(k));
                    std::vector<Rat> alpha_coords(static_cast<size_t>(k), Rat(0));
                    for (int v = 1; v <= n; ++v) {
                        auto c = static_cast<size_t>(rng.below(static_cast<std::uint64_t>(k)));
                        parts[c].push_back(v);
                        alpha_coords[c] += Rat(1, n);
                    }
                    SimplexVector alpha(alpha_coords);
                    Rat lhs = ascending_cross_edges(built->graph, parts);
                    Rat rhs = (h(alpha, d) + d * cfg.eps) * Rat(BigInt(n) * n, BigInt(1) << (d + 2));
                    Rat slack = rhs - lhs;
                    if (!have_slack || slack < min_slack) {
                        min_slack = slack;
                        have_slack = true;
                    }
                    if (lhs > rhs) {
                        ++inst_violations;
                        Json w;
                        w["n"] = n;
                        w["d"] = d;
                        w["k"] = k;
                        w["seed"] = inst_seed;
                        w["partition_index"] = p;
                        w["alpha"] = simplex_json(alpha);
                        w["lhs"] = rat_to_string(lhs);
                        w["rhs"] = rat_to_string(rhs);
                        record_violation(violations, violations_total, "partition",
                                         "partition bound violated", std::move(w));
                    }
                }
                inst["violations"] = inst_violations;
                if (have_slack) inst["min_slack"] = rat_to_string(min_slack);
                part_instances.push_back(std::move(inst));
            }
        }
        const size_t instance_count = part_instances.size();
        report["partition"] = Json{{"instances", std::move(part_instances)}};
        out << "partition bound: " << instance_count << " instance(s), " << cfg.partitions
            << " random partitions each\n";
    }

    report["violations_total"] = violations_total;
    Json wl = Json::array();
    for (const auto& v : violations) {
        Json j;
        j["suite"] = v.suite;
        j["text"] = v.text;
        j["witness"] = v.witness;
        wl.push_back(std::move(j));
    }
    report["violations"] = std::move(wl);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    if (violations_total > 0) {
        out << "VIOLATIONS: " << violations_total << "\n";
        for (const auto& v : violations)
            out << "  [" << v.suite << "] " << v.text << " witness " << v.witness.dump() << "\n";
        if (violations_total > violations.size())
            out << "  (first " << violations.size() << " witnesses shown)\n";
        return kExitViolation;
    }
    out << "0 violations across all suites\n";
    return kExitSuccess;
}

// --------------------------------------------------------------------------
// depth
// --------------------------------------------------------------------------

int cmd_depth(const DepthConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    if (cfg.k < 2) throw PreconditionError("depth requires k >= 2");
    if (!(cfg.eps > 0)) throw PreconditionError("depth requires eps > 0");

    std::vector<Violation> violations;
    size_t total = 0;
    Json table = depth_table_json(cfg.eps, cfg.k, violations, total);
    int chosen = table["chosen_depth"].get<int>();

    Json report;
    report["command"] = "depth";
    Json config;
    config["eps"] = rat_to_string(cfg.eps);
    config["k"] = cfg.k;
    report["config"] = std::move(config);
    report["table"] = table;
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    std::vector<std::array<std::string, 5>> lines;
    lines.push_back({"d", "harmonic", "2 + k*H_d", "eps*d", "meets"});
    for (const auto& row : table["rows"]) {
        lines.push_back({std::to_string(row["d"].get<int>()),
                         rat_cell(rat_from_string(row["harmonic"].get<std::string>())),
                         rat_cell(rat_from_string(row["lhs"].get<std::string>())),
                         rat_cell(rat_from_string(row["rhs"].get<std::string>())),
                         row["meets"].get<bool>() ? "yes" : "no"});
    }
    std::array<size_t, 5> widths{};
    for (const auto& line : lines)
        for (size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
    for (const auto& line : lines) {
        for (size_t c = 0; c < line.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(widths[c]) + 2) << line[c];
        }
        out << "\n";
    }
    out << "chosen depth for eps=" << rat_to_string(cfg.eps) << ", k=" << cfg.k << ": " << chosen
        << "\n";
    if (total > 0) {
        for (const auto& v : violations)
            out << "  [" << v.suite << "] " << v.text << " witness " << v.witness.dump() << "\n";
        return kExitViolation;
    }
    return kExitSuccess;
}

// --------------------------------------------------------------------------
// blowup-audit
// --------------------------------------------------------------------------

namespace {

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

} // namespace

int cmd_blowup_audit(const BlowupAuditConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    if (cfg.cases < 1) throw PreconditionError("blowup-audit requires --cases >= 1");

    std::vector<Violation> violations;
    size_t violations_total = 0;

    Json report;
    report["command"] = "blowup-audit";
    Json config;
    config["cases"] = cfg.cases;
    config["seed"] = cfg.seed;
    report["config"] = std::move(config);

    // Transversal identity rows: the fixed K_2 example first, then random
    // sub-blow-ups across the brute-force grid.
    Json identity_rows = Json::array();
    {
        auto [full, layout] = blow_up(make_clique(2), 2);
        TransversalReport rep = transversal_report(full, layout, Rat(0), make_path(1));
        Json row;
        row["base"] = "K2";
        row["t"] = 2;
        row["sum_of_induced_edges"] = rep.sum_of_induced_edges;
        row["expected"] = full.edge_count(); // t^(m-2) = 1
        identity_rows.push_back(row);
        if (rep.sum_of_induced_edges != full.edge_count())
            record_violation(violations, violations_total, "identity",
                             "transversal identity failed on the K2 blow-up", row);
    }
    for (int m = 2; m <= 4; ++m) {
        for (int t = 1; t <= 4; ++t) {
            SeededRng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(m) * 8 + t));
            OrderedGraph base = random_graph_bits(m, rng, false);
            auto [full, layout] = blow_up(base, t);
            // Random subgraph of the blow-up.
            std::vector<Edge> kept;
            for (const auto& e : full.edges())
                if (rng.below(2) == 1) kept.push_back(e);
            OrderedGraph h_prime(full.n(), kept);
            TransversalReport rep = transversal_report(h_prime, layout, Rat(0), make_path(1));
            long long expected = ipow(t, m - 2) * h_prime.edge_count();
            Json row;
            row["base_n"] = m;
            row["t"] = t;
            row["subgraph_edges"] = h_prime.edge_count();
            row["sum_of_induced_edges"] = rep.sum_of_induced_edges;
            row["expected"] = expected;
            identity_rows.push_back(row);
            if (rep.sum_of_induced_edges != expected)
                record_violation(violations, violations_total, "identity",
                                 "transversal identity failed", row);
        }
    }
    report["identity"] = std::move(identity_rows);
    out << "transversal identity: " << report["identity"].size() << " rows\n";

    // Rich-transversal counting: when e(H') >= (rho + 2 eps) e(H), the
    // transversals inducing at least (rho + eps) e(G) edges number at least
    // eps * t^m.
    Json rich_rows = Json::array();
    {
        const Rat rho(1, 2), eps(1, 8);
        int case_idx = 0;
        for (int m : {3, 4}) {
            for (int t : {3, 4}) {
                for (int rep_i = 0; rep_i < 5; ++rep_i, ++case_idx) {
                    SeededRng rng(derive_seed(cfg.seed, 5000 + case_idx));
                    OrderedGraph base = random_graph_bits(m, rng, true);
                    auto [full, layout] = blow_up(base, t);
                    auto full_edges = full.edges();
                    Rat target_r = (rho + 2 * eps) * Rat(full.edge_count());
                    BigInt target_big =
                        (numerator(target_r) + denominator(target_r) - 1) / denominator(target_r);
                    auto target = target_big.convert_to<std::uint32_t>();
                    auto picks = rng.sample_without_replacement(
                        static_cast<std::uint32_t>(full.edge_count()), target);
                    std::vector<Edge> kept;
                    kept.reserve(picks.size());
                    for (auto idx : picks) kept.push_back(full_edges[idx]);
                    OrderedGraph h_prime(full.n(), kept);
                    Rat threshold = (rho + eps) * Rat(base.edge_count());
                    TransversalReport rep =
                        transversal_report(h_prime, layout, threshold, make_path(1));
                    Rat needed = eps * Rat(ipow(t, m));
                    Json row;
                    row["base_n"] = m;
                    row["t"] = t;
                    row["base_edges"] = base.edge_count();
                    row["subgraph_edges"] = h_prime.edge_count();
                    row["rich_threshold"] = rat_to_string(threshold);
                    row["rich_count"] = rep.rich_count;
                    row["needed"] = rat_to_string(needed);
                    rich_rows.push_back(row);
                    if (Rat(rep.rich_count) < needed)
                        record_violation(violations, violations_total, "rich",
                                         "rich transversal count below eps * t^m", row);
                }
            }
        }
    }
    report["rich"] = std::move(rich_rows);
    out << "rich transversals: " << report["rich"].size() << " rows\n";

    // Monotonicity: a pattern-free host stays blow-up-free.
    int mono_checked = 0;
    for (int i = 0; i < cfg.cases; ++i) {
        SeededRng rng(derive_seed(cfg.seed, 9000 + static_cast<std::uint64_t>(i)));
        int fv = 3 + static_cast<int>(rng.below(2));
        OrderedGraph f = random_graph_bits(fv, rng, true);
        int hv = 5 + static_cast<int>(rng.below(3));
        OrderedGraph host = random_graph_bits(hv, rng, false);
        // Delete one embedded image edge until the host is pattern-free.
        while (auto emb = contains(host, f)) {
            auto f_edges = f.edges();
            const auto& [a, b] = f_edges[rng.below(static_cast<std::uint64_t>(f_edges.size()))];
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
        ++mono_checked;
        if (contains(host, ft)) {
            Json w;
            w["case"] = i;
            w["t"] = t;
            w["pattern"] = write_graph_text(f);
            w["host"] = write_graph_text(host);
            record_violation(violations, violations_total, "monotonicity",
                             "pattern-free host contains the blow-up", std::move(w));
        }
    }
    report["monotonicity"] = Json{{"checked", mono_checked}};
    out << "monotonicity: " << mono_checked << " pattern-free hosts checked against blow-ups\n";

    // Crossing copies of the 2-edge ascending path in its own t = 2 blow-up.
    {
        auto [full, layout] = blow_up(make_path(2), 2);
        TransversalReport rep = transversal_report(full, layout, Rat(0), make_path(2));
        report["crossing_p2"] = rep.crossing_copies;
        out << "crossing 2-edge-path copies in the t=2 blow-up: " << rep.crossing_copies << "\n";
        if (rep.crossing_copies != 8) {
            Json w;
            w["crossing_copies"] = rep.crossing_copies;
            w["expected"] = 8;
            record_violation(violations, violations_total, "crossing",
                             "crossing-copy count differs from the enumeration value",
                             std::move(w));
        }
    }

    report["violations_total"] = violations_total;
    Json wl = Json::array();
    for (const auto& v : violations) {
        Json j;
        j["suite"] = v.suite;
        j["text"] = v.text;
        j["witness"] = v.witness;
        wl.push_back(std::move(j));
    }
    report["violations"] = std::move(wl);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    if (violations_total > 0) {
        out << "VIOLATIONS: " << violations_total << "\n";
        for (const auto& v : violations)
            out << "  [" << v.suite << "] " << v.text << " witness " << v.witness.dump() << "\n";
        return kExitViolation;
    }
    out << "0 violations across all audit sections\n";
    return kExitSuccess;
}

// --------------------------------------------------------------------------
// embed / params
// --------------------------------------------------------------------------

int cmd_embed(const EmbedConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    OrderedGraph host = load_graph_file(cfg.host_path);
    OrderedGraph pattern = load_pattern(cfg.pattern);
    std::optional<OrderedEmbedding> emb = contains(host, pattern);

    Json report;
    report["command"] = "embed";
    Json config;
    config["host"] = cfg.host_path;
    config["pattern"] = cfg.pattern;
    report["config"] = std::move(config);
    report["found"] = emb.has_value();
    report["mapping"] = emb ? Json(emb->mapping) : Json(nullptr);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    if (emb) {
        out << "pattern contained; least embedding:";
        for (int v : emb->mapping) out << " " << v;
        out << "\n";
    } else {
        out << "pattern not contained\n";
    }
    return kExitSuccess;
}

int cmd_params(const ParamsConfig& cfg, std::ostream& out) {
    auto start = Clock::now();
    OrderedGraph f = load_pattern(cfg.pattern);
    TuranParameters tp = turan_parameters(f, cfg.chromatic_cap);

    Json report;
    report["command"] = "params";
    Json config;
    config["pattern"] = cfg.pattern;
    config["chromatic_cap"] = cfg.chromatic_cap;
    report["config"] = std::move(config);
    report["pattern_vertices"] = f.n();
    report["pattern_edges"] = f.edge_count();
    report["parameters"] = json_of(tp);
    report["tool_version"] = kToolVersion;
    report["wall_clock_ms"] = elapsed_ms(start);
    emit_report(cfg.json_out, report);

    out << "pattern: n=" << f.n() << " edges=" << f.edge_count() << "\n";
    out << "pi        = " << rat_cell(tp.pi) << "\n";
    out << "vec_pi    = " << rat_cell(tp.vec_pi) << "\n";
    out << "rho_lower = " << rat_cell(tp.rho_lower) << "\n";
    return kExitSuccess;
}

} // namespace ordturan
