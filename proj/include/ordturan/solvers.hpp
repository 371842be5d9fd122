#ifndef ORDTURAN_SOLVERS_HPP
#define ORDTURAN_SOLVERS_HPP

#include "ordturan/construction.hpp"
#include "ordturan/ordered_graph.hpp"
#include "ordturan/rational.hpp"
#include "ordturan/simplex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ordturan {

// Map from vertices to levels 1..L. When every edge of a subgraph goes
// strictly upward in level, the subgraph has no ascending path with L edges.
struct Leveling {
    int n = 0;
    int L = 1;
    std::vector<int> levels; // levels[v-1], values in [1, L]

    int level(int v) const { return levels[static_cast<size_t>(v - 1)]; }
    bool certifies(const OrderedGraph& sub) const;
};

struct SolveResult {
    std::vector<Edge> kept_edges;
    Rat ratio;                          // |kept| / e(G); 1 for edgeless hosts
    std::optional<Leveling> certificate;
    uint64_t nodes_explored = 0;
    bool optimal = false;
};

// Left-to-right longest-ascending-path values: f(y) = 1 + max f over
// in-neighbours (1 with none). Every edge increases f, and
// max f = longest_monotone_path_len + 1.
Leveling ascending_dp(const OrderedGraph& g);

// Uniform level map into [L]; keeps exactly the edges that increase in
// level, so the result never contains an ascending path with L edges.
std::pair<OrderedGraph, Leveling> random_leveling_subgraph(const OrderedGraph& g, int L,
                                                           uint64_t seed);

// Best of `trials` independent level maps: a lower-bound witness, never a
// proof of maximality (optimal stays false).
SolveResult best_leveling_sampled(const OrderedGraph& g, int L, int trials, uint64_t seed);

// Exact maximum subgraph without an ascending path of k edges. Searches
// level maps f: V -> [k] for the one respecting the most edges (an edge is
// respected when f strictly increases along it); a subgraph is feasible
// exactly when such a map respects all its edges, so this optimum equals the
// optimum over edge subsets. Serial branch-and-bound in vertex order,
// levels tried ascending; returns the lexicographically least optimal map.
// If the node budget runs out first, the best map seen is returned with
// optimal = false.
SolveResult max_pkfree_exact(const OrderedGraph& g, int k, uint64_t budget = 100000000);

// Exact maximum F-free subgraph by inspecting edge subsets largest-first
// (lexicographic within a size). Independent of the solver above, and
// deliberately simple: the search is exponential and capped at e(G) <= 22.
SolveResult max_ffree_oracle(const OrderedGraph& g, const OrderedGraph& f);

enum class RhoMethod {
    automatic, // exact for path patterns, otherwise oracle, otherwise leveling
    exact,     // max_pkfree_exact; pattern must be an ascending path
    oracle,    // max_ffree_oracle; e(G) <= 22
    leveling,  // sampled lower-bound witness
};

// Relative density of G against pattern F: edges of the best found F-free
// subgraph divided by e(G). Exact for the exact/oracle methods, a lower
// bound for leveling.
Rat rho_hat(const OrderedGraph& g, const OrderedGraph& f, RhoMethod method = RhoMethod::automatic,
            uint64_t seed = 0, int trials = 1024, uint64_t budget = 100000000);

struct TransversalReport {
    std::vector<std::pair<int, int>> classes; // the m intervals, inclusive
    long long total_transversals = 0;         // t^m
    long long sum_of_induced_edges = 0;       // equals t^(m-2) * e(H') exactly
    Rat rich_threshold;
    long long rich_count = 0;                 // transversals with e(T) >= threshold
    long long crossing_copies = 0;            // embeddings of F hitting each class <= once
};

// Enumerates every transversal of the blow-up classes (one vertex per
// class), accumulating induced-edge counts, rich transversals, and the
// number of F-embeddings using each class at most once. Brute force,
// capped at t^m <= 10^6.
TransversalReport transversal_report(const OrderedGraph& h_prime, const BlowupLayout& layout,
                                     const Rat& rich_threshold, const OrderedGraph& f);

// For a P_k-free subgraph G_sub of a constructed graph: lhs = e(G_sub)/e(G),
// rhs = ratio_bound(alpha, d, eps) with alpha_i the fraction of vertices at
// ascending-DP level i. The inequality lhs <= rhs is the executable form of
// the containment proof and must hold whenever every block is certified.
BoundReport verify_ratio_bound(const ConstructedGraph& g, const OrderedGraph& g_sub, int k);

} // namespace ordturan

#endif
