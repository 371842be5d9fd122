#ifndef ORDTURAN_CONSTRUCTION_HPP
#define ORDTURAN_CONSTRUCTION_HPP

#include "ordturan/ordered_graph.hpp"
#include "ordturan/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordturan {

struct ConstructionParams {
    Rat eps;        // in (0, 1]
    int d = 0;      // recursion depth, >= 0
    int k = 2;      // path parameter entering the block tolerance
    int n = 1;      // vertex count, divisible by 2^d
    uint64_t seed = 0;

    void validate() const; // throws PreconditionError
};

enum class CertMethod { exhaustive, sampled, spectral };

std::string cert_method_name(CertMethod m);

struct CertificateDetail {
    std::optional<uint64_t> pairs_checked;    // exhaustive / sampled work count
    std::optional<Rat> operator_norm_bound;   // spectral: bound on |A - pJ|_2
    std::optional<double> residual;           // spectral: final iteration residual
    std::optional<int> iterations;            // spectral
    std::vector<int> worst_x, worst_y;        // witness subsets (exhaustive / sampled)
};

struct QuasirandomCertificate {
    CertMethod method = CertMethod::exhaustive;
    Rat tolerance;       // eps * m^2 / (k * 2^(d+2))
    Rat worst_observed;  // exhaustive/sampled: largest |e(X,Y) - |X||Y|/2^(d-1)|;
                         // spectral: operator-norm bound * (m/2)
    bool pass = false;
    bool sound = false;  // false for sampled mode: evidence, not proof
    CertificateDetail detail;
};

// Deviation tolerance for an m-vertex block at depth d: eps*m^2/(k*2^(d+2)).
Rat discrepancy_tolerance(int m, int d, const Rat& eps, int k);

// Certifies |e_B(X,Y) - |X||Y|/2^(d-1)| <= tolerance over all X in the left
// half, Y in the right half of B's vertex set. Exhaustive mode (half size
// <= 12) enumerates every pair exactly; spectral mode bounds the operator
// norm of the centered biadjacency and converts through
// |e(X,Y) - p|X||Y|| <= |A - pJ|_2 * sqrt(|X||Y|); sampled mode draws
// `samples` uniform pairs and is diagnostic only (sound = false).
QuasirandomCertificate certify_discrepancy(const OrderedGraph& block, int d, const Rat& eps,
                                           int k, CertMethod mode, uint64_t seed = 0,
                                           int samples = 1000);

// Uniform bipartite block between [m/2] and (m/2, m] with exactly
// m^2/2^(d+1) edges, resampled (retry budget 64) until its certificate
// passes. Throws CertificationError when the budget is exhausted.
std::pair<OrderedGraph, QuasirandomCertificate> build_bipartite(int m, int d, const Rat& eps,
                                                                int k, uint64_t seed);

enum class CertMode {
    required, // any failing block aborts the build
    attempt,  // keep the best-scoring attempt and record its failing certificate
};

struct BlockRecord {
    std::string path;  // recursion path from the root: "", "L", "RL", ...
    int offset = 0;    // vertices of the block are offset+1 .. offset+size
    int size = 0;
    int depth = 0;     // block built at this recursion depth (d' >= 1)
    uint64_t seed = 0; // seed of the accepted (or best) attempt
    int attempts = 0;
    QuasirandomCertificate certificate;
};

struct ConstructedGraph {
    OrderedGraph graph{1, {}};
    ConstructionParams params;
    std::vector<BlockRecord> blocks; // pre-order: node block, then left, then right

    bool all_certified() const;
};

// Recursive construction: depth 0 is edgeless on [n]; otherwise the two
// halves carry copies built at depth d-1 and the cross block comes from
// build_bipartite. Identical params give bit-identical graphs.
ConstructedGraph build_g(const ConstructionParams& params, CertMode mode = CertMode::required);

// d*n^2/2^(d+1), validating the divisibility precondition 2^d | n.
long long edge_count_formula(int n, int d);

// Number of edges (x, y) with x in part i, y in part j, i < j; the parts
// must partition [n] exactly.
long long ascending_cross_edges(const OrderedGraph& g, const std::vector<std::vector<int>>& parts);

} // namespace ordturan

#endif
