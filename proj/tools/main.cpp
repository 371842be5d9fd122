#include "ordturan/errors.hpp"
#include "ordturan/harness.hpp"
#include "ordturan/rational.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace ordturan;

// Rational flags arrive as strings ("p/q" or integer) and are converted
// after parsing so malformed input maps to the precondition exit code.
struct RawRationals {
    std::string build_eps = "1";
    std::string certify_eps = "1";
    std::string converge_eps = "1";
    std::string check_eps = "1";
    std::string depth_eps = "1";
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative Turan density toolkit: layered quasirandom constructions, "
                 "exact path-free solvers, and exact-rational inequality suites"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    RawRationals raw;

    BuildConfig build_cfg;
    auto* cb = app.add_subcommand(
        "build", "Construct a layered quasirandom graph with block certificates");
    cb->add_option("--n", build_cfg.n, "vertex count (divisible by 2^d)")->required();
    cb->add_option("--d", build_cfg.d, "recursion depth >= 0")->required();
    cb->add_option("--eps", raw.build_eps, "tolerance scale, p/q or integer (default 1)");
    cb->add_option("--k", build_cfg.k, "path parameter entering the block tolerance");
    cb->add_option("--seed", build_cfg.seed, "RNG seed");
    cb->add_flag("--allow-uncertified", build_cfg.allow_uncertified,
                 "keep the best failing attempt instead of aborting");
    cb->add_option("--out", build_cfg.graph_out, "graph file path (default g_eps.og)");
    cb->add_option("--cert-out", build_cfg.cert_out,
                   "certificate sidecar path (default <out>.cert.json)");

    CertifyConfig certify_cfg;
    auto* cc = app.add_subcommand("certify", "Certify one bipartite block from a graph file");
    cc->add_option("--graph", certify_cfg.graph_path, "block graph file")->required();
    cc->add_option("--d", certify_cfg.d, "depth parameter fixing density and tolerance")
        ->required();
    cc->add_option("--eps", raw.certify_eps, "tolerance scale, p/q or integer");
    cc->add_option("--k", certify_cfg.k, "path parameter entering the tolerance");
    cc->add_option("--method", certify_cfg.method, "auto | exhaustive | sampled | spectral");
    cc->add_option("--seed", certify_cfg.seed, "RNG seed (sampled mode)");
    cc->add_option("--samples", certify_cfg.samples, "sampled-mode pair count");
    cc->add_option("--json-out", certify_cfg.json_out, "JSON report path");

    ConvergeConfig converge_cfg;
    auto* cv = app.add_subcommand(
        "converge", "Sandwich the exact path-free ratio across a grid of instances");
    cv->add_option("--k", converge_cfg.k, "forbidden ascending path length (edges)");
    cv->add_option("--eps", raw.converge_eps, "tolerance scale, p/q or integer");
    cv->add_option("--d", converge_cfg.d_values, "depth grid (repeatable)");
    cv->add_option("--multiplier", converge_cfg.multiplier, "n = multiplier * 2^d");
    cv->add_option("--n", converge_cfg.n_values, "explicit n per depth (repeatable)");
    cv->add_option("--seed", converge_cfg.seed, "grid seed; rows derive their own");
    cv->add_option("--trials", converge_cfg.trials, "leveling draws per instance");
    cv->add_option("--budget", converge_cfg.budget, "exact-solver node budget");
    cv->add_option("--jobs", converge_cfg.jobs,
                   "parallel instances (default: ORDTURAN_JOBS or 1)");
    cv->add_flag("--allow-uncertified", converge_cfg.allow_uncertified,
                 "build rows even when certification fails");
    cv->add_option("--csv-out", converge_cfg.csv_out, "CSV table path");
    cv->add_option("--json-out", converge_cfg.json_out, "JSON report path");

    LowerBoundConfig lower_cfg;
    auto* cl = app.add_subcommand("lower-bound",
                                  "Randomized leveling lower bound on a graph file");
    cl->add_option("--graph", lower_cfg.graph_path, "host graph file")->required();
    cl->add_option("--levels", lower_cfg.levels, "level count L (certifies no L-edge path)");
    cl->add_option("--trials", lower_cfg.trials, "independent level maps");
    cl->add_option("--seed", lower_cfg.seed, "RNG seed");
    cl->add_option("--json-out", lower_cfg.json_out, "JSON report path");

    SolveExactConfig solve_cfg;
    auto* cs = app.add_subcommand("solve-exact",
                                  "Exact maximum subgraph with no ascending k-edge path");
    cs->add_option("--graph", solve_cfg.graph_path, "host graph file")->required();
    cs->add_option("--k", solve_cfg.k, "forbidden ascending path length (edges)");
    cs->add_option("--budget", solve_cfg.budget, "branch-and-bound node budget");
    cs->add_option("--json-out", solve_cfg.json_out, "JSON report path");

    CheckConfig check_cfg;
    auto* ck = app.add_subcommand("check", "Exact-rational inequality suites");
    ck->add_option("--k", check_cfg.k_values, "level counts to scan (repeatable)");
    ck->add_option("--d-max", check_cfg.d_max, "largest recursion depth in the inequality grid");
    ck->add_option("--triples", check_cfg.triples, "random triples per (k, d) cell");
    ck->add_option("--eps", raw.check_eps, "tolerance scale, p/q or integer");
    ck->add_option("--seed", check_cfg.seed, "RNG seed");
    ck->add_option("--partitions", check_cfg.partitions, "random partitions per instance");
    ck->add_flag("--depth-table", check_cfg.depth_table_only, "run only the depth scan table");
    ck->add_flag("--inject-fault", check_cfg.inject_fault,
                 "test-only: misprice one recursion coefficient to prove the detector fires");
    ck->add_option("--json-out", check_cfg.json_out, "JSON report path");

    DepthConfig depth_cfg;
    auto* cd = app.add_subcommand("depth", "Depth threshold scan for given eps and k");
    cd->add_option("--eps", raw.depth_eps, "tolerance scale, p/q or integer");
    cd->add_option("--k", depth_cfg.k, "level count");
    cd->add_option("--json-out", depth_cfg.json_out, "JSON report path");

    BlowupAuditConfig audit_cfg;
    auto* ca = app.add_subcommand(
        "blowup-audit", "Brute-force audit of transversal counting and blow-up monotonicity");
    ca->add_option("--cases", audit_cfg.cases, "monotonicity spot checks");
    ca->add_option("--seed", audit_cfg.seed, "RNG seed");
    ca->add_option("--json-out", audit_cfg.json_out, "JSON report path");

    EmbedConfig embed_cfg;
    auto* ce = app.add_subcommand("embed", "Order-preserving pattern containment test");
    ce->add_option("--host", embed_cfg.host_path, "host graph file")->required();
    ce->add_option("--pattern", embed_cfg.pattern, "P<k> / C<l> / K<r> or a graph file")
        ->required();
    ce->add_option("--json-out", embed_cfg.json_out, "JSON report path");

    ParamsConfig params_cfg;
    auto* cp = app.add_subcommand("params",
                                  "Density parameters (pi, ordered pi, rho lower bound)");
    cp->add_option("--pattern", params_cfg.pattern, "P<k> / C<l> / K<r> or a graph file")
        ->required();
    cp->add_option("--chromatic-cap", params_cfg.chromatic_cap,
                   "largest pattern size for the exact chromatic search");
    cp->add_option("--json-out", params_cfg.json_out, "JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cb->parsed()) {
            build_cfg.eps = rat_from_string(raw.build_eps);
            return cmd_build(build_cfg, std::cout);
        }
        if (cc->parsed()) {
            certify_cfg.eps = rat_from_string(raw.certify_eps);
            return cmd_certify(certify_cfg, std::cout);
        }
        if (cv->parsed()) {
            converge_cfg.eps = rat_from_string(raw.converge_eps);
            return cmd_converge(converge_cfg, std::cout);
        }
        if (cl->parsed()) return cmd_lower_bound(lower_cfg, std::cout);
        if (cs->parsed()) return cmd_solve_exact(solve_cfg, std::cout);
        if (ck->parsed()) {
            check_cfg.eps = rat_from_string(raw.check_eps);
            return cmd_check(check_cfg, std::cout);
        }
        if (cd->parsed()) {
            depth_cfg.eps = rat_from_string(raw.depth_eps);
            return cmd_depth(depth_cfg, std::cout);
        }
        if (ca->parsed()) return cmd_blowup_audit(audit_cfg, std::cout);
        if (ce->parsed()) return cmd_embed(embed_cfg, std::cout);
        if (cp->parsed()) return cmd_params(params_cfg, std::cout);
        std::cerr << "error: no command\n";
        return 1;
    } catch (const ordturan::PreconditionError& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return ordturan::kExitPrecondition;
    } catch (const ordturan::ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return ordturan::kExitPrecondition;
    } catch (const ordturan::CertificationError& e) {
        std::cerr << "error: certification: " << e.what() << "\n";
        return ordturan::kExitCertification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
