#include "ordturan/json_io.hpp"

#include <charconv>
#include <system_error>

namespace ordturan {

std::string double_repr(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string float_repr(const Rat& r) {
    return double_repr(rat_to_double(r));
}

Json json_of(const Rat& r) {
    return rat_to_string(r);
}

Json json_of(const CertificateDetail& d) {
    Json j;
    if (d.pairs_checked) j["pairs_checked"] = *d.pairs_checked;
    if (d.operator_norm_bound) j["operator_norm_bound"] = json_of(*d.operator_norm_bound);
    if (d.residual) j["residual"] = *d.residual;
    if (d.iterations) j["iterations"] = *d.iterations;
    if (!d.worst_x.empty() || !d.worst_y.empty()) {
        j["worst_x"] = d.worst_x;
        j["worst_y"] = d.worst_y;
    }
    return j;
}

Json json_of(const QuasirandomCertificate& c) {
    Json j;
    j["method"] = cert_method_name(c.method);
    j["tolerance"] = json_of(c.tolerance);
    j["worst_observed"] = json_of(c.worst_observed);
    j["pass"] = c.pass;
    j["sound"] = c.sound;
    j["detail"] = json_of(c.detail);
    return j;
}

Json json_of(const ConstructionParams& p) {
    Json j;
    j["eps"] = json_of(p.eps);
    j["d"] = p.d;
    j["k"] = p.k;
    j["n"] = p.n;
    j["seed"] = p.seed;
    return j;
}

Json json_of(const BlockRecord& b) {
    Json j;
    j["path"] = b.path;
    j["offset"] = b.offset;
    j["size"] = b.size;
    j["depth"] = b.depth;
    j["seed"] = b.seed;
    j["attempts"] = b.attempts;
    j["certificate"] = json_of(b.certificate);
    return j;
}

Json json_of(const ConstructedGraph& g) {
    Json j;
    j["params"] = json_of(g.params);
    j["edge_count"] = g.graph.edge_count();
    j["all_certified"] = g.all_certified();
    Json blocks = Json::array();
    for (const auto& b : g.blocks) blocks.push_back(json_of(b));
    j["blocks"] = std::move(blocks);
    return j;
}

Json json_of(const Leveling& l) {
    Json j;
    j["n"] = l.n;
    j["levels_count"] = l.L;
    j["levels"] = l.levels;
    return j;
}

Json json_of(const SolveResult& r, bool include_edges) {
    Json j;
    j["kept_edge_count"] = r.kept_edges.size();
    if (include_edges) {
        Json edges = Json::array();
        for (const auto& [u, v] : r.kept_edges) edges.push_back(Json::array({u, v}));
        j["kept_edges"] = std::move(edges);
    }
    j["ratio"] = json_of(r.ratio);
    j["certificate"] = r.certificate ? json_of(*r.certificate) : Json(nullptr);
    j["nodes_explored"] = r.nodes_explored;
    j["optimal"] = r.optimal;
    return j;
}

Json json_of(const BoundReport& r) {
    Json j;
    j["lhs"] = json_of(r.lhs);
    j["rhs"] = json_of(r.rhs);
    j["slack"] = json_of(r.slack);
    j["holds"] = r.holds;
    return j;
}

Json json_of(const TuranParameters& p) {
    Json j;
    j["pi"] = json_of(p.pi);
    j["vec_pi"] = json_of(p.vec_pi);
    j["rho_lower"] = json_of(p.rho_lower);
    return j;
}

Json json_of(const TransversalReport& r) {
    Json j;
    Json classes = Json::array();
    for (const auto& [a, b] : r.classes) classes.push_back(Json::array({a, b}));
    j["classes"] = std::move(classes);
    j["total_transversals"] = r.total_transversals;
    j["sum_of_induced_edges"] = r.sum_of_induced_edges;
    j["rich_threshold"] = json_of(r.rich_threshold);
    j["rich_count"] = r.rich_count;
    j["crossing_copies"] = r.crossing_copies;
    return j;
}

} // namespace ordturan
