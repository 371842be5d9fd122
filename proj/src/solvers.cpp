#include "ordturan/solvers.hpp"

#include "ordturan/containment.hpp"
#include "ordturan/errors.hpp"
#include "ordturan/parameters.hpp"
#include "ordturan/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ordturan {

bool Leveling::certifies(const OrderedGraph& sub) const {
    if (sub.n() != n || static_cast<int>(levels.size()) != n) return false;
    for (int v : levels)
        if (v < 1 || v > L) return false;
    for (const auto& [x, y] : sub.edges())
        if (level(x) >= level(y)) return false;
    return true;
}

Leveling ascending_dp(const OrderedGraph& g) {
    Leveling lev;
    lev.n = g.n();
    lev.levels.assign(static_cast<size_t>(g.n()), 1);
    int max_level = 1;
    for (int v = 1; v <= g.n(); ++v) {
        int f = 1;
        for (int u : g.in_neighbors(v))
            f = std::max(f, lev.levels[static_cast<size_t>(u - 1)] + 1);
        lev.levels[static_cast<size_t>(v - 1)] = f;
        max_level = std::max(max_level, f);
    }
    lev.L = max_level;
    return lev;
}

namespace {

std::vector<int> draw_levels(const OrderedGraph& g, int L, SeededRng& rng) {
    std::vector<int> phi(static_cast<size_t>(g.n()));
    for (auto& p : phi) p = static_cast<int>(rng.below(static_cast<uint64_t>(L))) + 1;
    return phi;
}

std::vector<Edge> kept_by_levels(const OrderedGraph& g, const std::vector<int>& phi) {
    std::vector<Edge> kept;
    for (const auto& [u, v] : g.edges())
        if (phi[static_cast<size_t>(u - 1)] < phi[static_cast<size_t>(v - 1)])
            kept.emplace_back(u, v);
    return kept;
}

} // namespace

std::pair<OrderedGraph, Leveling> random_leveling_subgraph(const OrderedGraph& g, int L,
                                                           uint64_t seed) {
    if (L < 1) throw PreconditionError("level count must be positive");
    SeededRng rng(seed);
    std::vector<int> phi = draw_levels(g, L, rng);
    OrderedGraph sub = g.subgraph(kept_by_levels(g, phi));
    return {std::move(sub), Leveling{g.n(), L, std::move(phi)}};
}

SolveResult best_leveling_sampled(const OrderedGraph& g, int L, int trials, uint64_t seed) {
    if (L < 1) throw PreconditionError("level count must be positive");
    if (trials < 1) throw PreconditionError("at least one trial is required");

    // One sequential stream: trial 0 consumes exactly the draws that
    // random_leveling_subgraph(g, L, seed) would, so a single trial
    // reproduces it.
    SeededRng rng(seed);
    long long best = -1;
    std::vector<int> best_phi;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> phi = draw_levels(g, L, rng);
        long long kept = 0;
        for (const auto& [u, v] : g.edges())
            if (phi[static_cast<size_t>(u - 1)] < phi[static_cast<size_t>(v - 1)]) ++kept;
        if (kept > best) {
            best = kept;
            best_phi = std::move(phi);
        }
    }

    SolveResult res;
    res.kept_edges = kept_by_levels(g, best_phi);
    res.ratio = g.edge_count() == 0 ? Rat(1) : Rat(best, g.edge_count());
    res.certificate = Leveling{g.n(), L, std::move(best_phi)};
    res.nodes_explored = static_cast<uint64_t>(trials);
    res.optimal = false;
    return res;
}

namespace {

struct PkSearch {
    const OrderedGraph& g;
    int k;
    uint64_t budget;

    std::vector<int> f;       // level per vertex, 0 = unassigned
    long long best = -1;
    std::vector<int> best_f;  // 0-indexed snapshot of the best complete map
    uint64_t nodes = 0;
    bool truncated = false;

    PkSearch(const OrderedGraph& graph, int levels, uint64_t node_budget)
        : g(graph), k(levels), budget(node_budget),
          f(static_cast<size_t>(graph.n()) + 1, 0) {}

    // Upper bound carried through the search: respected edges so far, plus
    // every still-undecided edge except those leaving a level-k vertex
    // (nothing above level k exists for them to reach).
    void dfs(int v, long long respected, long long undecided, long long doomed) {
        if (v > g.n()) {
            if (respected > best) {
                best = respected;
                best_f.assign(f.begin() + 1, f.end());
            }
            return;
        }
        long long in_doomed = 0;
        for (int u : g.in_neighbors(v))
            if (f[static_cast<size_t>(u)] == k) ++in_doomed;
        const long long in_total = g.in_degree(v);

        for (int c = 1; c <= k; ++c) {
            if (nodes >= budget) {
                truncated = true;
                return;
            }
            ++nodes;
            long long gain = 0;
            for (int u : g.in_neighbors(v))
                if (f[static_cast<size_t>(u)] < c) ++gain;
            const long long nr = respected + gain;
            const long long nu = undecided - in_total;
            const long long nd = doomed - in_doomed + (c == k ? g.out_degree(v) : 0);
            if (nr + nu - nd <= best) continue;
            f[static_cast<size_t>(v)] = c;
            dfs(v + 1, nr, nu, nd);
            f[static_cast<size_t>(v)] = 0;
            if (truncated) return;
        }
    }
};

} // namespace

SolveResult max_pkfree_exact(const OrderedGraph& g, int k, uint64_t budget) {
    if (k < 2) throw PreconditionError("path parameter k must be at least 2");
    if (budget < 1) throw PreconditionError("node budget must be positive");

    PkSearch search(g, k, budget);
    search.dfs(1, 0, g.edge_count(), 0);

    if (search.best < 0) { // budget too small to reach any leaf
        search.best = 0;
        search.best_f.assign(static_cast<size_t>(g.n()), 1);
    }

    SolveResult res;
    res.kept_edges = kept_by_levels(g, search.best_f);
    res.ratio = g.edge_count() == 0 ? Rat(1) : Rat(search.best, g.edge_count());
    res.certificate = Leveling{g.n(), k, std::move(search.best_f)};
    res.nodes_explored = search.nodes;
    res.optimal = !search.truncated;
    return res;
}

SolveResult max_ffree_oracle(const OrderedGraph& g, const OrderedGraph& f) {
    constexpr int kEdgeCap = 22;
    if (g.edge_count() > kEdgeCap)
        throw PreconditionError("edge-subset oracle is capped at " + std::to_string(kEdgeCap) +
                                " edges");
    if (f.edge_count() == 0)
        throw PreconditionError("oracle pattern must have at least one edge");

    const auto all = g.edges();
    const int e = static_cast<int>(all.size());
    uint64_t tested = 0;

    for (int s = e; s >= 0; --s) {
        // index combinations c[0] < ... < c[s-1] in lexicographic order
        std::vector<int> c(static_cast<size_t>(s));
        std::iota(c.begin(), c.end(), 0);
        for (;;) {
            std::vector<Edge> subset;
            subset.reserve(static_cast<size_t>(s));
            for (int idx : c) subset.push_back(all[static_cast<size_t>(idx)]);
            ++tested;
            if (!contains(g.subgraph(subset), f)) {
                SolveResult res;
                res.kept_edges = std::move(subset);
                res.ratio = e == 0 ? Rat(1) : Rat(s, e);
                res.nodes_explored = tested;
                res.optimal = true;
                return res;
            }
            // advance the combination
            int i = s - 1;
            while (i >= 0 && c[static_cast<size_t>(i)] == e - s + i) --i;
            if (i < 0) break;
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw std::logic_error("edgeless subgraph contained the pattern despite e(F) >= 1");
}

namespace {

bool is_ascending_path(const OrderedGraph& f) {
    if (f.edge_count() != f.n() - 1) return false;
    for (int i = 1; i < f.n(); ++i)
        if (!f.has_edge(i, i + 1)) return false;
    return true;
}

} // namespace

Rat rho_hat(const OrderedGraph& g, const OrderedGraph& f, RhoMethod method, uint64_t seed,
            int trials, uint64_t budget) {
    if (g.edge_count() == 0)
        throw PreconditionError("relative density is undefined for an edgeless host");
    if (f.edge_count() == 0)
        throw PreconditionError("relative density needs a pattern with at least one edge");

    const bool path = is_ascending_path(f);
    const int k = f.n() - 1;

    switch (method) {
        case RhoMethod::exact:
            if (!path)
                throw PreconditionError("exact method requires an ascending path pattern");
            if (k == 1) return Rat(0); // single-edge pattern: only the empty subgraph avoids it
            return max_pkfree_exact(g, k, budget).ratio;
        case RhoMethod::oracle:
            return max_ffree_oracle(g, f).ratio;
        case RhoMethod::leveling:
            return best_leveling_sampled(g, longest_monotone_path_len(f), trials, seed).ratio;
        case RhoMethod::automatic:
            if (path) {
                if (k == 1) return Rat(0);
                return max_pkfree_exact(g, k, budget).ratio;
            }
            if (g.edge_count() <= 22) return max_ffree_oracle(g, f).ratio;
            return best_leveling_sampled(g, longest_monotone_path_len(f), trials, seed).ratio;
    }
    std::abort();
}

namespace {

long long count_crossing_embeddings(const OrderedGraph& host, const OrderedGraph& pattern,
                                    const BlowupLayout& layout) {
    const int nf = pattern.n();
    std::vector<int> image(static_cast<size_t>(nf) + 1, 0);

    // Images ascend, so distinct classes just means each step leaves the
    // previous vertex's class.
    auto rec = [&](auto&& self, int idx) -> long long {
        if (idx > nf) return 1;
        long long total = 0;
        const int lo = idx == 1 ? 1 : image[static_cast<size_t>(idx - 1)] + 1;
        const int hi = host.n() - (nf - idx);
        for (int v = lo; v <= hi; ++v) {
            if (idx > 1 &&
                layout.class_of(v) == layout.class_of(image[static_cast<size_t>(idx - 1)]))
                continue;
            bool ok = true;
            for (int u : pattern.in_neighbors(idx))
                if (!host.has_edge(image[static_cast<size_t>(u)], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[static_cast<size_t>(idx)] = v;
            total += self(self, idx + 1);
        }
        return total;
    };
    return rec(rec, 1);
}

} // namespace

TransversalReport transversal_report(const OrderedGraph& h_prime, const BlowupLayout& layout,
                                     const Rat& rich_threshold, const OrderedGraph& f) {
    const int m = layout.base_n;
    const int t = layout.t;
    if (m < 1 || t < 1) throw PreconditionError("blow-up layout needs positive class count and size");
    if (static_cast<int>(layout.intervals.size()) != m)
        throw PreconditionError("layout lists " + std::to_string(layout.intervals.size()) +
                                " intervals for " + std::to_string(m) + " classes");
    if (h_prime.n() != m * t)
        throw PreconditionError("graph has " + std::to_string(h_prime.n()) + " vertices, layout covers " +
                                std::to_string(m * t));
    for (int i = 0; i < m; ++i)
        if (layout.intervals[static_cast<size_t>(i)] != std::pair<int, int>{i * t + 1, (i + 1) * t})
            throw PreconditionError("layout intervals must tile [n] consecutively");
    for (const auto& [u, v] : h_prime.edges())
        if (layout.class_of(u) == layout.class_of(v))
            throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") lies inside a blow-up class");

    constexpr long long kTransversalCap = 1000000;
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= t;
        if (total > kTransversalCap)
            throw PreconditionError("transversal enumeration is capped at t^m <= 10^6");
    }

    TransversalReport rep;
    rep.classes = layout.intervals;
    rep.total_transversals = total;
    rep.rich_threshold = rich_threshold;

    std::vector<int> digit(static_cast<size_t>(m), 0);
    std::vector<int> pick(static_cast<size_t>(m), 0);
    for (long long it = 0; it < total; ++it) {
        for (int i = 0; i < m; ++i)
            pick[static_cast<size_t>(i)] =
                layout.intervals[static_cast<size_t>(i)].first + digit[static_cast<size_t>(i)];
        long long induced = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (h_prime.has_edge(pick[static_cast<size_t>(i)], pick[static_cast<size_t>(j)]))
                    ++induced;
        rep.sum_of_induced_edges += induced;
        if (Rat(induced) >= rich_threshold) ++rep.rich_count;
        for (int i = m - 1; i >= 0; --i) {
            if (++digit[static_cast<size_t>(i)] < t) break;
            digit[static_cast<size_t>(i)] = 0;
        }
    }

    if (m >= 2) {
        long long expected = h_prime.edge_count();
        for (int i = 0; i < m - 2; ++i) expected *= t;
        if (rep.sum_of_induced_edges != expected)
            throw std::logic_error("transversal edge-sum identity violated");
    } else if (rep.sum_of_induced_edges != 0) {
        throw std::logic_error("single-class layout induced a nonzero edge sum");
    }

    rep.crossing_copies = count_crossing_embeddings(h_prime, f, layout);
    return rep;
}

BoundReport verify_ratio_bound(const ConstructedGraph& g, const OrderedGraph& g_sub, int k) {
    if (k < 2) throw PreconditionError("path parameter k must be at least 2");
    if (g_sub.n() != g.graph.n() || !g_sub.is_edge_subset_of(g.graph))
        throw PreconditionError("candidate is not a subgraph of the constructed graph");
    if (g.params.d < 1 || g.graph.edge_count() == 0)
        throw PreconditionError("ratio verification needs a construction of depth at least 1");

    Leveling lev = ascending_dp(g_sub);
    if (lev.L > k)
        throw PreconditionError("subgraph contains an ascending path with " + std::to_string(k) +
                                " edges");

    std::vector<Rat> alpha(static_cast<size_t>(k), Rat(0));
    for (int value : lev.levels) alpha[static_cast<size_t>(value - 1)] += Rat(1, g_sub.n());
    SimplexVector av(std::move(alpha));

    Rat lhs = Rat(g_sub.edge_count(), g.graph.edge_count());
    Rat rhs = ratio_bound(av, g.params.d, g.params.eps);
    return make_bound_report(std::move(lhs), std::move(rhs));
}

} // namespace ordturan
