#include "ordturan/ordered_graph.hpp"

#include "ordturan/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace ordturan {

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw PreconditionError("ordered graph needs at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (u < 1 || v > n_ || u >= v)
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") violates 1 <= u < v <= n");
        if (i > 0 && edges_[i] == edges_[i - 1])
            throw PreconditionError("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }

    std::vector<int> out_deg(n_ + 1, 0), in_deg(n_ + 1, 0);
    for (auto [u, v] : edges_) {
        ++out_deg[u];
        ++in_deg[v];
    }
    out_start_.assign(n_ + 2, 0);
    in_start_.assign(n_ + 2, 0);
    for (int v = 1; v <= n_; ++v) {
        out_start_[v + 1] = out_start_[v] + out_deg[v];
        in_start_[v + 1] = in_start_[v] + in_deg[v];
    }
    out_flat_.resize(edges_.size());
    in_flat_.resize(edges_.size());
    std::vector<int> out_pos(out_start_.begin(), out_start_.end());
    std::vector<int> in_pos(in_start_.begin(), in_start_.end());
    for (auto [u, v] : edges_) {
        out_flat_[out_pos[u]++] = v;
        in_flat_[in_pos[v]++] = u;
    }
}

bool OrderedGraph::has_edge(int u, int v) const {
    if (u >= v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::span<const int> OrderedGraph::out_neighbors(int v) const {
    return {out_flat_.data() + out_start_[v], out_flat_.data() + out_start_[v + 1]};
}

std::span<const int> OrderedGraph::in_neighbors(int v) const {
    return {in_flat_.data() + in_start_[v], in_flat_.data() + in_start_[v + 1]};
}

OrderedGraph OrderedGraph::subgraph(const std::vector<Edge>& keep) const {
    for (auto [u, v] : keep)
        if (!has_edge(u, v))
            throw PreconditionError("subgraph edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") not present in host");
    return OrderedGraph(n_, keep);
}

bool OrderedGraph::is_edge_subset_of(const OrderedGraph& host) const {
    if (n_ != host.n()) return false;
    return std::includes(host.edges().begin(), host.edges().end(), edges_.begin(), edges_.end());
}

bool OrderedEmbedding::valid_for(const OrderedGraph& host, const OrderedGraph& pattern) const {
    if (static_cast<int>(mapping.size()) != pattern.n()) return false;
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (mapping[i] < 1 || mapping[i] > host.n()) return false;
        if (i > 0 && mapping[i - 1] >= mapping[i]) return false;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(mapping[u - 1], mapping[v - 1])) return false;
    return true;
}

OrderedGraph make_path(int k) {
    if (k < 1) throw PreconditionError("path length must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(k);
    for (int i = 1; i <= k; ++i) edges.emplace_back(i, i + 1);
    return OrderedGraph(k + 1, std::move(edges));
}

OrderedGraph make_cycle(int l) {
    if (l < 3) throw PreconditionError("cycle length must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(l);
    for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, l);
    return OrderedGraph(l, std::move(edges));
}

OrderedGraph make_clique(int r) {
    if (r < 1) throw PreconditionError("clique size must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(r) * (r - 1) / 2);
    for (int u = 1; u <= r; ++u)
        for (int v = u + 1; v <= r; ++v) edges.emplace_back(u, v);
    return OrderedGraph(r, std::move(edges));
}

std::pair<OrderedGraph, BlowupLayout> blow_up(const OrderedGraph& base, int t) {
    if (t < 1) throw PreconditionError("blow-up factor must be >= 1");
    BlowupLayout layout;
    layout.t = t;
    layout.base_n = base.n();
    layout.intervals.reserve(base.n());
    for (int x = 1; x <= base.n(); ++x)
        layout.intervals.emplace_back((x - 1) * t + 1, x * t);

    std::vector<Edge> edges;
    edges.reserve(base.edge_count() * static_cast<std::int64_t>(t) * t);
    for (auto [x, y] : base.edges()) {
        auto [ax, bx] = layout.intervals[x - 1];
        auto [ay, by] = layout.intervals[y - 1];
        for (int a = ax; a <= bx; ++a)
            for (int b = ay; b <= by; ++b) edges.emplace_back(a, b);
    }
    return {OrderedGraph(base.n() * t, std::move(edges)), layout};
}

std::string write_graph_text(const OrderedGraph& g) {
    std::ostringstream out;
    out << "ordgraph 1\n";
    out << "n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

OrderedGraph parse_graph_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "ordgraph 1")
        throw ParseError("expected header 'ordgraph 1'");
    if (!std::getline(in, line)) throw ParseError("missing 'n <N>' line");
    std::istringstream nline(line);
    std::string tag;
    long long n = 0;
    char extra;
    if (!(nline >> tag >> n) || tag != "n" || (nline >> extra))
        throw ParseError("malformed 'n <N>' line: '" + line + "'");
    if (n < 1 || n > (1 << 24)) throw ParseError("vertex count out of range");

    std::vector<Edge> edges;
    Edge prev{0, 0};
    int lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::istringstream eline(line);
        long long u = 0, v = 0;
        if (!(eline >> tag >> u >> v) || tag != "e" || (eline >> extra))
            throw ParseError("malformed edge line " + std::to_string(lineno) + ": '" + line + "'");
        if (u < 1 || v <= u || v > n)
            throw ParseError("edge out of range on line " + std::to_string(lineno));
        Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (e == prev) throw ParseError("duplicate edge line " + std::to_string(lineno));
        if (e < prev) throw ParseError("edges not sorted at line " + std::to_string(lineno));
        edges.push_back(e);
        prev = e;
    }
    return OrderedGraph(static_cast<int>(n), std::move(edges));
}

OrderedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_text(in);
}

OrderedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_graph_text(in);
}

void save_graph_file(const OrderedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write graph file: " + path);
    out << write_graph_text(g);
}

} // namespace ordturan
