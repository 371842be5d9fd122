#include "ordturan/containment.hpp"

#include "bit_matrix.hpp"

namespace ordturan {

namespace {

struct Searcher {
    const OrderedGraph& host;
    const OrderedGraph& pattern;
    std::vector<int> map;  // map[i] = host vertex for pattern vertex i+1, 0 = unset

    bool extend(int idx) {
        const int nf = pattern.n();
        if (idx == nf) return true;
        const int pv = idx + 1;
        const int lo = idx == 0 ? 1 : map[idx - 1] + 1;
        const int hi = host.n() - (nf - pv);
        for (int v = lo; v <= hi; ++v) {
            if (host.out_degree(v) < pattern.out_degree(pv)) continue;
            if (host.in_degree(v) < pattern.in_degree(pv)) continue;
            bool ok = true;
            for (int pu : pattern.in_neighbors(pv)) {
                if (!host.has_edge(map[pu - 1], v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[idx] = v;
            if (extend(idx + 1)) return true;
        }
        map[idx] = 0;
        return false;
    }
};

} // namespace

std::optional<OrderedEmbedding> contains(const OrderedGraph& host, const OrderedGraph& pattern) {
    if (pattern.n() > host.n()) return std::nullopt;
    Searcher s{host, pattern, std::vector<int>(pattern.n(), 0)};
    if (!s.extend(0)) return std::nullopt;
    return OrderedEmbedding{std::move(s.map)};
}

} // namespace ordturan
