#include "ordturan/construction.hpp"
#include "ordturan/errors.hpp"
#include "ordturan/rng.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ordturan;

namespace {

OrderedGraph random_block(int m, int edge_target, SeededRng& rng) {
    const int h = m / 2;
    auto picks = rng.sample_without_replacement(static_cast<uint32_t>(h) * h,
                                                static_cast<uint32_t>(edge_target));
    std::vector<Edge> edges;
    edges.reserve(picks.size());
    for (uint32_t p : picks)
        edges.emplace_back(static_cast<int>(p) / h + 1, h + static_cast<int>(p) % h + 1);
    return OrderedGraph(m, std::move(edges));
}

// reference discrepancy: every (X, Y) pair by masks, exact rationals
Rat naive_worst_deviation(const OrderedGraph& block, int d) {
    const int h = block.n() / 2;
    const long long D = 1LL << (d - 1);
    Rat worst = 0;
    for (uint32_t x = 0; x < (1u << h); ++x)
        for (uint32_t y = 0; y < (1u << h); ++y) {
            long long e_xy = 0;
            for (int u = 1; u <= h; ++u) {
                if (!(x & (1u << (u - 1)))) continue;
                for (int v : block.out_neighbors(u))
                    if (y & (1u << (v - h - 1))) ++e_xy;
            }
            Rat dev = Rat(e_xy) -
                      Rat(static_cast<long long>(std::popcount(x)) * std::popcount(y), D);
            if (dev < 0) dev = -dev;
            worst = std::max(worst, dev);
        }
    return worst;
}

long long cross_edges_between_halves(const OrderedGraph& g, int offset, int size) {
    const int mid = offset + size / 2;
    long long count = 0;
    for (const auto& [u, v] : g.edges())
        if (u > offset && u <= mid && v > mid && v <= offset + size) ++count;
    return count;
}

} // namespace

TEST_CASE("edge count formula") {
    CHECK(edge_count_formula(8, 1) == 16);
    CHECK(edge_count_formula(16, 2) == 64);
    CHECK(edge_count_formula(64, 4) == 512);
    CHECK(edge_count_formula(8, 0) == 0);
    CHECK(edge_count_formula(1, 0) == 0);
    CHECK_THROWS_AS(edge_count_formula(12, 3), PreconditionError);
    CHECK_THROWS_AS(edge_count_formula(0, 1), PreconditionError);
}

TEST_CASE("construction parameter validation") {
    ConstructionParams p{Rat(1, 2), 2, 2, 16, 7};
    CHECK_NOTHROW(p.validate());
    CHECK_THROWS_AS((ConstructionParams{Rat(0), 1, 2, 8, 0}).validate(), PreconditionError);
    CHECK_THROWS_AS((ConstructionParams{Rat(3, 2), 1, 2, 8, 0}).validate(), PreconditionError);
    CHECK_THROWS_AS((ConstructionParams{Rat(1), -1, 2, 8, 0}).validate(), PreconditionError);
    CHECK_THROWS_AS((ConstructionParams{Rat(1), 1, 1, 8, 0}).validate(), PreconditionError);
    CHECK_THROWS_AS((ConstructionParams{Rat(1), 3, 2, 12, 0}).validate(), PreconditionError);
}

TEST_CASE("discrepancy tolerance formula") {
    CHECK(discrepancy_tolerance(16, 2, Rat(1), 2) == Rat(8));
    CHECK(discrepancy_tolerance(16, 2, Rat(1, 2), 2) == Rat(4));
    CHECK(discrepancy_tolerance(8, 1, Rat(1), 2) == Rat(4));
    CHECK(discrepancy_tolerance(1024, 2, Rat(1, 2), 2) == Rat(16384));
}

TEST_CASE("certification rejects malformed blocks") {
    CHECK_THROWS_AS(certify_discrepancy(OrderedGraph(4, {{1, 2}}), 1, Rat(1), 2,
                                        CertMethod::exhaustive),
                    PreconditionError); // edge inside the left half
    CHECK_THROWS_AS(certify_discrepancy(OrderedGraph(5, {}), 1, Rat(1), 2,
                                        CertMethod::exhaustive),
                    PreconditionError); // odd size
    CHECK_THROWS_AS(certify_discrepancy(OrderedGraph(4, {}), 0, Rat(1), 2,
                                        CertMethod::exhaustive),
                    PreconditionError); // depth 0 has no blocks
    CHECK_THROWS_AS(certify_discrepancy(OrderedGraph(32, {}), 1, Rat(1), 2,
                                        CertMethod::exhaustive),
                    PreconditionError); // half size above the exhaustive cap
}

TEST_CASE("complete bipartite block is exactly quasirandom at depth 1") {
    std::vector<Edge> edges;
    for (int u = 1; u <= 4; ++u)
        for (int v = 5; v <= 8; ++v) edges.emplace_back(u, v);
    OrderedGraph block(8, edges);
    auto cert = certify_discrepancy(block, 1, Rat(1), 2, CertMethod::exhaustive);
    CHECK(cert.worst_observed == Rat(0));
    CHECK(cert.pass);
    CHECK(cert.sound);
    CHECK(cert.detail.pairs_checked == 16);
}

TEST_CASE("empty block fails certification at depth 1") {
    OrderedGraph block(8, {});
    auto cert = certify_discrepancy(block, 1, Rat(1), 2, CertMethod::exhaustive);
    CHECK(cert.worst_observed == Rat(16)); // full halves: |0 - 4*4/1|
    CHECK_FALSE(cert.pass);
}

TEST_CASE("adversarial concentrated block fails with the predicted witness") {
    std::vector<Edge> edges;
    for (int u = 1; u <= 2; ++u)
        for (int v = 9; v <= 16; ++v) edges.emplace_back(u, v);
    OrderedGraph block(16, edges);
    auto cert = certify_discrepancy(block, 2, Rat(1, 2), 2, CertMethod::exhaustive);
    CHECK(cert.tolerance == Rat(4));
    CHECK(cert.worst_observed == Rat(24));
    CHECK_FALSE(cert.pass);
    CHECK(cert.detail.worst_x == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(cert.detail.worst_y == std::vector<int>{9, 10, 11, 12, 13, 14, 15, 16});
}

TEST_CASE("exhaustive certification matches the naive full enumeration") {
    SeededRng rng(404);
    for (int trial = 0; trial < 8; ++trial) {
        OrderedGraph block = random_block(12, 18, rng); // 12^2 / 2^3
        auto cert = certify_discrepancy(block, 2, Rat(1), 2, CertMethod::exhaustive);
        CHECK(cert.worst_observed == naive_worst_deviation(block, 2));
    }
}

TEST_CASE("spectral bound dominates the exact worst deviation") {
    SeededRng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        OrderedGraph block = random_block(16, 32, rng);
        auto exact = certify_discrepancy(block, 2, Rat(1), 2, CertMethod::exhaustive);
        auto spectral = certify_discrepancy(block, 2, Rat(1), 2, CertMethod::spectral);
        CHECK(spectral.worst_observed >= exact.worst_observed);
        CHECK(spectral.sound);
        CHECK(spectral.detail.operator_norm_bound.has_value());
    }
}

TEST_CASE("sampled certification is diagnostic and finds planted deviations") {
    std::vector<Edge> edges;
    for (int u = 1; u <= 2; ++u)
        for (int v = 9; v <= 16; ++v) edges.emplace_back(u, v);
    OrderedGraph block(16, edges);
    auto cert = certify_discrepancy(block, 2, Rat(1, 2), 2, CertMethod::sampled, 5, 400);
    CHECK_FALSE(cert.sound);
    CHECK_FALSE(cert.pass); // a violating pair appears quickly at this scale
    CHECK(cert.worst_observed > cert.tolerance);

    // deviations reported by sampling never exceed the exhaustive worst
    auto exact = certify_discrepancy(block, 2, Rat(1, 2), 2, CertMethod::exhaustive);
    CHECK(cert.worst_observed <= exact.worst_observed);
}

TEST_CASE("block builder returns certified graphs with exact edge counts") {
    auto [b1, c1] = build_bipartite(8, 1, Rat(1), 2, 0);
    CHECK(b1.edge_count() == 16); // complete bipartite
    for (int u = 1; u <= 4; ++u)
        for (int v = 5; v <= 8; ++v) CHECK(b1.has_edge(u, v));
    CHECK(c1.pass);
    CHECK(c1.worst_observed == Rat(0));

    auto [b2, c2] = build_bipartite(16, 2, Rat(1), 2, 3);
    CHECK(b2.edge_count() == 32);
    CHECK(c2.pass);
    CHECK(c2.method == CertMethod::exhaustive);

    CHECK_THROWS_AS(build_bipartite(6, 2, Rat(1), 2, 0), PreconditionError); // 36/8 not integral
}

TEST_CASE("hopeless parameters abort with a certification error") {
    // at m = 16, d = 5 every 4-edge block deviates by at least 3 on the pair
    // (all endpoints of edges on the left, all on the right), but the
    // tolerance is 1 - so no seed can ever succeed
    CHECK_THROWS_AS(build_bipartite(16, 5, Rat(1), 2, 0), CertificationError);
    CHECK_THROWS_AS(build_bipartite(16, 5, Rat(1), 2, 12345), CertificationError);
}

TEST_CASE("recursive construction matches the closed-form edge counts") {
    ConstructionParams p0{Rat(1), 0, 2, 8, 0};
    ConstructedGraph g0 = build_g(p0);
    CHECK(g0.graph.edge_count() == 0);
    CHECK(g0.blocks.empty());

    ConstructionParams p1{Rat(1), 1, 2, 8, 0};
    ConstructedGraph g1 = build_g(p1);
    CHECK(g1.graph.edge_count() == 16);
    REQUIRE(g1.blocks.size() == 1);
    CHECK(g1.blocks[0].path == "");
    CHECK(g1.blocks[0].size == 8);
    CHECK(g1.blocks[0].depth == 1);
    CHECK(g1.all_certified());
    for (int u = 1; u <= 4; ++u)
        for (int v = 5; v <= 8; ++v) CHECK(g1.graph.has_edge(u, v));

    ConstructionParams p2{Rat(1), 2, 2, 16, 5};
    ConstructedGraph g2 = build_g(p2);
    CHECK(g2.graph.edge_count() == 64);
    REQUIRE(g2.blocks.size() == 3);
    CHECK(g2.blocks[0].path == "");
    CHECK(g2.blocks[1].path == "L");
    CHECK(g2.blocks[2].path == "R");
    CHECK(g2.all_certified());
    // every recursion level keeps its exact block size
    for (const auto& b : g2.blocks)
        CHECK(cross_edges_between_halves(g2.graph, b.offset, b.size) ==
              static_cast<long long>(b.size) * b.size / (1LL << (b.depth + 1)));
}

TEST_CASE("construction is deterministic in its seed") {
    ConstructionParams p{Rat(1), 2, 2, 16, 42};
    ConstructedGraph a = build_g(p);
    ConstructedGraph b = build_g(p);
    CHECK(a.graph == b.graph);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        CHECK(a.blocks[i].seed == b.blocks[i].seed);
        CHECK(a.blocks[i].attempts == b.blocks[i].attempts);
    }

    ConstructionParams q = p;
    q.seed = 43;
    CHECK_FALSE(build_g(q).graph == a.graph);
}

TEST_CASE("edge counts hold across the grid even in attempt mode") {
    for (int d = 0; d <= 3; ++d)
        for (int mult : {1, 2}) {
            const int n = mult << d;
            ConstructionParams p{Rat(1), d, 2, n, 9};
            ConstructedGraph g = build_g(p, CertMode::attempt);
            CHECK(g.graph.edge_count() == edge_count_formula(n, d));
        }
}

TEST_CASE("attempt mode records failing certificates instead of aborting") {
    ConstructionParams p{Rat(1), 5, 2, 32, 2};
    CHECK_THROWS_AS(build_g(p, CertMode::required), CertificationError);

    ConstructedGraph g = build_g(p, CertMode::attempt);
    CHECK(g.graph.edge_count() == edge_count_formula(32, 5));
    CHECK(g.blocks.size() == 31);
    CHECK_FALSE(g.all_certified());

    const BlockRecord& root = g.blocks[0];
    CHECK(root.size == 32);
    CHECK(root.depth == 5);
    CHECK_FALSE(root.certificate.pass);
    CHECK(root.attempts >= 8);

    // small deep blocks stay exactly quasirandom: depth 1 is complete
    // bipartite and depth 2 passes with overwhelming probability
    for (const auto& b : g.blocks)
        if (b.depth <= 2) CHECK(b.certificate.pass);
}

TEST_CASE("spectral certification clears realistic sizes and sampling confirms") {
    auto [block, cert] = build_bipartite(1024, 2, Rat(1, 2), 2, 1);
    CHECK(block.edge_count() == 1024LL * 1024 / 8);
    CHECK(cert.method == CertMethod::spectral);
    CHECK(cert.pass);
    CHECK(cert.tolerance == Rat(16384));
    // a good random block sits close to the 2*sqrt(h*p*(1-p)) ballpark, far
    // below the tolerance once converted through the mixing inequality
    CHECK(cert.worst_observed < Rat(16384));
    CHECK(*cert.detail.operator_norm_bound < Rat(30));

    // follow-up sampling never contradicts a sound spectral pass
    auto diag = certify_discrepancy(block, 2, Rat(1, 2), 2, CertMethod::sampled, 99, 1000);
    CHECK(diag.pass);
}

TEST_CASE("ascending cross edge counting") {
    OrderedGraph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(ascending_cross_edges(triangle, {{1}, {2}, {3}}) == 3);
    CHECK(ascending_cross_edges(triangle, {{1, 2, 3}}) == 0);
    CHECK(ascending_cross_edges(triangle, {{1, 3}, {2}}) == 1); // only (1,2) climbs

    ConstructedGraph g1 = build_g(ConstructionParams{Rat(1), 1, 2, 8, 0});
    CHECK(ascending_cross_edges(g1.graph, {{1, 2, 3, 4}, {5, 6, 7, 8}}) == 16);

    CHECK_THROWS_AS(ascending_cross_edges(triangle, {{1, 2}}), PreconditionError);
    CHECK_THROWS_AS(ascending_cross_edges(triangle, {{1, 2}, {2, 3}}), PreconditionError);
    CHECK_THROWS_AS(ascending_cross_edges(triangle, {{1, 2, 3, 4}}), PreconditionError);
}
