#ifndef ORDTURAN_CONTAINMENT_HPP
#define ORDTURAN_CONTAINMENT_HPP

#include "ordturan/ordered_graph.hpp"

#include <optional>

namespace ordturan {

/// Searches for an order-preserving copy of `pattern` inside `host`:
/// a strictly increasing injection carrying every pattern edge onto a host
/// edge. Backtracking over increasing partial maps with degree pruning.
/// Deterministic: returns the lexicographically least embedding, or nullopt.
std::optional<OrderedEmbedding> contains(const OrderedGraph& host, const OrderedGraph& pattern);

} // namespace ordturan

#endif
