#ifndef ORDTURAN_ORDERED_GRAPH_HPP
#define ORDTURAN_ORDERED_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordturan {

using Edge = std::pair<int, int>;

// Graph on vertices 1..n with a fixed linear order. Every edge (u, v) has
// u < v; subgraph containment must respect the order. Immutable after
// construction, safe to share across threads.
class OrderedGraph {
public:
    /// Validates 1 <= u < v <= n, rejects duplicates, sorts edges.
    OrderedGraph(int n, std::vector<Edge> edges);

    explicit OrderedGraph(int n) : OrderedGraph(n, {}) {}

    int n() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }

    bool has_edge(int u, int v) const;

    /// Vertices w > v adjacent to v, ascending.
    std::span<const int> out_neighbors(int v) const;
    /// Vertices u < v adjacent to v, ascending.
    std::span<const int> in_neighbors(int v) const;

    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

    /// Same vertex set, edge set restricted to `keep` (must be edges of *this).
    OrderedGraph subgraph(const std::vector<Edge>& keep) const;

    bool is_edge_subset_of(const OrderedGraph& host) const;

    bool operator==(const OrderedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;          // sorted lexicographically
    std::vector<int> out_flat_, in_flat_;
    std::vector<int> out_start_, in_start_;  // CSR offsets, size n_+1
};

// Strictly increasing injection from the vertices of a pattern F into a host
// G that maps every edge of F onto an edge of G.
struct OrderedEmbedding {
    std::vector<int> mapping;  // mapping[i-1] = image of pattern vertex i

    bool valid_for(const OrderedGraph& host, const OrderedGraph& pattern) const;
};

// How a blow-up's vertex intervals tile [t * v(base)].
struct BlowupLayout {
    int t = 1;
    int base_n = 0;
    std::vector<std::pair<int, int>> intervals;  // inclusive [first, last] per base vertex

    int class_of(int vertex) const { return (vertex - 1) / t + 1; }
};

/// Ascending path with k edges on [k+1]. k >= 1.
OrderedGraph make_path(int k);

/// Ordered cycle on [l]: consecutive edges plus (1, l). l >= 3.
OrderedGraph make_cycle(int l);

/// Ordered clique on [r]. r >= 1.
OrderedGraph make_clique(int r);

/// Each vertex becomes an interval of t clones, each edge a complete t x t
/// bundle between the intervals.
std::pair<OrderedGraph, BlowupLayout> blow_up(const OrderedGraph& base, int t);

// Line-oriented text format:
//   ordgraph 1
//   n <N>
//   e <u> <v>     (sorted, 1 <= u < v <= N, duplicates are a parse error)
std::string write_graph_text(const OrderedGraph& g);
OrderedGraph parse_graph_text(std::istream& in);
OrderedGraph parse_graph_text(const std::string& text);

OrderedGraph load_graph_file(const std::string& path);
void save_graph_file(const OrderedGraph& g, const std::string& path);

} // namespace ordturan

#endif
