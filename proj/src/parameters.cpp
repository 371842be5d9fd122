#include "ordturan/parameters.hpp"

#include "ordturan/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ordturan {

int longest_monotone_path_len(const OrderedGraph& g) {
    int best = 1;
    std::vector<int> f(g.n() + 1, 1);
    for (int v = 1; v <= g.n(); ++v) {
        for (int u : g.in_neighbors(v)) f[v] = std::max(f[v], f[u] + 1);
        best = std::max(best, f[v]);
    }
    return best - 1;
}

int interval_chromatic(const OrderedGraph& g) {
    const int n = g.n();
    // last_blocker[i] = largest u with an edge (u, v), v <= i; an interval
    // (j, i] is independent iff j >= last_blocker[i].
    std::vector<int> last_blocker(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        last_blocker[v] = last_blocker[v - 1];
        for (int u : g.in_neighbors(v)) last_blocker[v] = std::max(last_blocker[v], u);
    }
    // Minimal interval count for each prefix is monotone, so the best split
    // point is always the earliest admissible one.
    std::vector<int> parts(n + 1, 0);
    for (int i = 1; i <= n; ++i) parts[i] = parts[last_blocker[i]] + 1;
    return parts[n];
}

namespace {

struct ColorSearch {
    const OrderedGraph& g;
    std::vector<int> order;   // vertices, highest degree first
    std::vector<int> color;   // by vertex, 0 = uncolored
    int best;

    void run(int idx, int used) {
        if (used >= best) return;
        if (idx == static_cast<int>(order.size())) {
            best = used;
            return;
        }
        int v = order[idx];
        for (int c = 1; c <= std::min(used + 1, best - 1); ++c) {
            bool ok = true;
            for (int u : g.in_neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (ok)
                for (int w : g.out_neighbors(v))
                    if (color[w] == c) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            color[v] = c;
            run(idx + 1, std::max(used, c));
            color[v] = 0;
        }
    }
};

} // namespace

int chromatic(const OrderedGraph& g, int max_vertices) {
    if (g.n() > max_vertices)
        throw PreconditionError("chromatic number search capped at " +
                                std::to_string(max_vertices) + " vertices");
    if (g.edge_count() == 0) return 1;

    ColorSearch search{g, {}, std::vector<int>(g.n() + 1, 0), g.n()};
    search.order.resize(g.n());
    std::iota(search.order.begin(), search.order.end(), 1);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return g.in_degree(a) + g.out_degree(a) > g.in_degree(b) + g.out_degree(b);
    });
    search.run(0, 0);
    return search.best;
}

TuranParameters turan_parameters(const OrderedGraph& f, int chromatic_max_vertices) {
    if (f.edge_count() == 0)
        throw PreconditionError("density parameters are undefined for edgeless patterns");
    const int chi = chromatic(f, chromatic_max_vertices);
    const int chi_int = interval_chromatic(f);
    const int len = longest_monotone_path_len(f);
    TuranParameters p;
    p.pi = Rat(chi - 2, chi - 1);
    p.vec_pi = Rat(chi_int - 2, chi_int - 1);
    p.rho_lower = Rat(len - 1, 2 * len);
    return p;
}

} // namespace ordturan
