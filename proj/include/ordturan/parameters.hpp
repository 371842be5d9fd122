#ifndef ORDTURAN_PARAMETERS_HPP
#define ORDTURAN_PARAMETERS_HPP

#include "ordturan/ordered_graph.hpp"
#include "ordturan/rational.hpp"

namespace ordturan {

/// Edge count of the longest ascending path, via a single left-to-right pass.
int longest_monotone_path_len(const OrderedGraph& g);

/// Minimum number of consecutive intervals partitioning [n] with every
/// interval independent. Left-to-right minimal-partition DP.
int interval_chromatic(const OrderedGraph& g);

/// Exact chromatic number by branch-and-bound; only meant for small fixed
/// patterns, so the vertex count is capped.
int chromatic(const OrderedGraph& g, int max_vertices = 12);

struct TuranParameters {
    Rat pi;         // 1 - 1/(chromatic - 1)
    Rat vec_pi;     // 1 - 1/(interval_chromatic - 1)
    Rat rho_lower;  // (l - 1) / (2 l) for l = longest monotone path edges
};

/// All three density parameters of a pattern with at least one edge,
/// as exact rationals.
TuranParameters turan_parameters(const OrderedGraph& f, int chromatic_max_vertices = 12);

} // namespace ordturan

#endif
