#ifndef ORDTURAN_HARNESS_HPP
#define ORDTURAN_HARNESS_HPP

#include "ordturan/ordered_graph.hpp"
#include "ordturan/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ordturan {

inline constexpr const char* kToolVersion = "0.1.0";

// Default --jobs value: the ORDTURAN_JOBS environment variable when set to a
// positive integer, otherwise 1 (fully serial, fully deterministic).
inline constexpr const char* kJobsEnvVar = "ORDTURAN_JOBS";
int default_jobs();

// Exit-code contract shared by every command:
//   0 success, 2 precondition violation, 3 certification failure,
//   4 suite violation (witness printed).
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitCertification = 3;
inline constexpr int kExitViolation = 4;

// Resolves "P<k>" / "C<l>" / "K<r>" builtin pattern names; anything else is
// read as an ordered-graph text file path.
OrderedGraph load_pattern(const std::string& text);

// --- command configs ------------------------------------------------------

struct BuildConfig {
    Rat eps{1};
    int d = 0;
    int k = 2;
    int n = 1;
    std::uint64_t seed = 0;
    bool allow_uncertified = false;  // keep best failing attempts instead of aborting
    std::string graph_out = "g_eps.og";
    std::string cert_out;  // default: graph_out + ".cert.json"
};
int cmd_build(const BuildConfig& cfg, std::ostream& out);

struct CertifyConfig {
    std::string graph_path;
    int d = 1;
    Rat eps{1};
    int k = 2;
    std::string method = "auto";  // auto | exhaustive | sampled | spectral
    std::uint64_t seed = 0;
    int samples = 1000;
    std::string json_out;
};
int cmd_certify(const CertifyConfig& cfg, std::ostream& out);

struct ConvergeConfig {
    int k = 2;
    Rat eps{1};
    std::vector<int> d_values{1, 2, 3, 4};
    int multiplier = 1;          // n = multiplier * 2^d when n_values is empty
    std::vector<int> n_values;   // explicit n per d value (same length)
    std::uint64_t seed = 0;
    int trials = 64;             // leveling draws per instance
    std::uint64_t budget = 100000000;
    int jobs = 0;                // 0 -> default_jobs()
    bool allow_uncertified = false;
    std::string csv_out;
    std::string json_out;
};
int cmd_converge(const ConvergeConfig& cfg, std::ostream& out);

struct LowerBoundConfig {
    std::string graph_path;
    int levels = 2;
    int trials = 1024;
    std::uint64_t seed = 0;
    std::string json_out;
};
int cmd_lower_bound(const LowerBoundConfig& cfg, std::ostream& out);

struct SolveExactConfig {
    std::string graph_path;
    int k = 2;
    std::uint64_t budget = 100000000;
    std::string json_out;
};
int cmd_solve_exact(const SolveExactConfig& cfg, std::ostream& out);

struct CheckConfig {
    std::vector<int> k_values{2, 3, 4, 5};
    int d_max = 8;
    int triples = 10000;  // per (k, d) cell
    Rat eps{1};
    std::uint64_t seed = 0;
    int partitions = 1000;  // per built instance
    bool depth_table_only = false;
    // Test-only detector sanity: misprices the (d+2) coefficient as (d+1)
    // on the recursion's right-hand side; the suite must then report
    // violations.
    bool inject_fault = false;
    std::string json_out;
};
int cmd_check(const CheckConfig& cfg, std::ostream& out);

struct DepthConfig {
    Rat eps{1};
    int k = 2;
    std::string json_out;
};
int cmd_depth(const DepthConfig& cfg, std::ostream& out);

struct BlowupAuditConfig {
    int cases = 100;  // monotonicity spot checks
    std::uint64_t seed = 0;
    std::string json_out;
};
int cmd_blowup_audit(const BlowupAuditConfig& cfg, std::ostream& out);

struct EmbedConfig {
    std::string host_path;
    std::string pattern;
    std::string json_out;
};
int cmd_embed(const EmbedConfig& cfg, std::ostream& out);

struct ParamsConfig {
    std::string pattern;
    int chromatic_cap = 12;
    std::string json_out;
};
int cmd_params(const ParamsConfig& cfg, std::ostream& out);

} // namespace ordturan

#endif
