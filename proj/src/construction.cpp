#include "ordturan/construction.hpp"

#include "ordturan/errors.hpp"
#include "ordturan/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace ordturan {

namespace {

constexpr int kMaxDepth = 30;
constexpr int kExhaustiveHalfCap = 12;
constexpr int kRetryBudget = 64;
// Give up resampling once this many attempts all landed far outside the
// tolerance; a fresh draw then has no realistic chance of passing.
constexpr int kHopelessAfter = 8;

void require_block_shape(const OrderedGraph& block, int d) {
    if (d < 1 || d > kMaxDepth)
        throw PreconditionError("block depth must be between 1 and " + std::to_string(kMaxDepth));
    const int m = block.n();
    if (m < 2 || m % 2 != 0)
        throw PreconditionError("bipartite block needs an even vertex count, got " +
                                std::to_string(m));
    const int h = m / 2;
    for (const auto& [u, v] : block.edges())
        if (!(u <= h && v > h))
            throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") does not cross the two halves");
}

QuasirandomCertificate certify_exhaustive(const OrderedGraph& block, int d, const Rat& tol) {
    const int h = block.n() / 2;
    if (h > kExhaustiveHalfCap)
        throw PreconditionError("exhaustive certification is capped at half size " +
                                std::to_string(kExhaustiveHalfCap));

    // col[j]: bitmask over the left half of the neighbours of right vertex
    // h+1+j. Deviations are tracked as integers scaled by D = 2^(d-1):
    // D*e(X,Y) - |X||Y| so everything stays exact.
    std::vector<uint32_t> col(static_cast<size_t>(h), 0);
    for (const auto& [u, v] : block.edges()) col[static_cast<size_t>(v - h - 1)] |= 1u << (u - 1);

    const long long D = 1LL << (d - 1);
    long long best = 0;
    uint32_t best_x = 0;
    bool best_positive = true;

    for (uint32_t x = 0; x < (1u << h); ++x) {
        const long long xs = std::popcount(x);
        long long pos = 0, neg = 0;
        for (int j = 0; j < h; ++j) {
            const long long dev = D * std::popcount(col[static_cast<size_t>(j)] & x) - xs;
            if (dev > 0)
                pos += dev;
            else
                neg += dev;
        }
        const long long worst_here = std::max(pos, -neg);
        if (worst_here > best) {
            best = worst_here;
            best_x = x;
            best_positive = pos >= -neg;
        }
    }

    QuasirandomCertificate cert;
    cert.method = CertMethod::exhaustive;
    cert.tolerance = tol;
    cert.worst_observed = Rat(best, D);
    cert.pass = cert.worst_observed <= tol;
    cert.sound = true;
    cert.detail.pairs_checked = 1ull << h;
    if (best > 0) {
        for (int i = 0; i < h; ++i)
            if (best_x & (1u << i)) cert.detail.worst_x.push_back(i + 1);
        const long long xs = std::popcount(best_x);
        for (int j = 0; j < h; ++j) {
            const long long dev = D * std::popcount(col[static_cast<size_t>(j)] & best_x) - xs;
            if (best_positive ? dev > 0 : dev < 0) cert.detail.worst_y.push_back(h + 1 + j);
        }
    }
    return cert;
}

QuasirandomCertificate certify_sampled(const OrderedGraph& block, int d, const Rat& tol,
                                       uint64_t seed, int samples) {
    if (samples < 1) throw PreconditionError("sampled certification needs at least one draw");
    const int m = block.n();
    const int h = m / 2;
    const long long D = 1LL << (d - 1);

    SeededRng rng(seed);
    QuasirandomCertificate cert;
    cert.method = CertMethod::sampled;
    cert.tolerance = tol;
    cert.worst_observed = 0;
    cert.sound = false;
    cert.detail.pairs_checked = static_cast<uint64_t>(samples);

    std::vector<char> in_y(static_cast<size_t>(m + 1), 0);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> xs, ys;
        for (int u = 1; u <= h; ++u)
            if (rng.below(2)) xs.push_back(u);
        for (int v = h + 1; v <= m; ++v) {
            in_y[static_cast<size_t>(v)] = rng.below(2) ? 1 : 0;
            if (in_y[static_cast<size_t>(v)]) ys.push_back(v);
        }
        long long e_xy = 0;
        for (int u : xs)
            for (int v : block.out_neighbors(u)) e_xy += in_y[static_cast<size_t>(v)];
        Rat dev = Rat(e_xy) - Rat(static_cast<long long>(xs.size()) *
                                      static_cast<long long>(ys.size()),
                                  D);
        if (dev < 0) dev = -dev;
        if (dev > cert.worst_observed) {
            cert.worst_observed = dev;
            cert.detail.worst_x = xs;
            cert.detail.worst_y = ys;
        }
    }
    cert.pass = cert.worst_observed <= tol;
    return cert;
}

QuasirandomCertificate certify_spectral(const OrderedGraph& block, int d, const Rat& tol) {
    const int m = block.n();
    const int h = m / 2;
    const double p = std::ldexp(1.0, 1 - d);

    Eigen::MatrixXd c = Eigen::MatrixXd::Constant(h, h, -p);
    for (const auto& [u, v] : block.edges()) c(u - 1, v - h - 1) += 1.0;

    // Power iteration on C^T C from a fixed start; the Rayleigh quotient plus
    // the final residual norm bounds the top eigenvalue once the iteration
    // has locked on, and the residual is carried into the certificate.
    Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(
        h, [h](Eigen::Index i) { return 1.0 + static_cast<double>(i + 1) / (h + 1.0); });
    v.normalize();

    double mu = 0.0, res = 0.0;
    int iter = 0;
    constexpr int kMaxIter = 300;
    constexpr double kTol = 1e-10;
    for (iter = 0; iter < kMaxIter; ++iter) {
        Eigen::VectorXd w = c.transpose() * (c * v);
        mu = v.dot(w);
        res = (w - mu * v).norm();
        if (res <= kTol * std::max(1.0, mu)) break;
        const double wn = w.norm();
        if (wn == 0.0) break;
        v = w / wn;
    }

    const double sigma = std::sqrt(std::max(mu + res, 0.0)) * (1.0 + 1e-9);

    QuasirandomCertificate cert;
    cert.method = CertMethod::spectral;
    cert.tolerance = tol;
    cert.detail.operator_norm_bound = rat_from_double(sigma);
    cert.detail.residual = res;
    cert.detail.iterations = std::min(iter + 1, kMaxIter);
    cert.worst_observed = *cert.detail.operator_norm_bound * h;
    cert.pass = cert.worst_observed <= tol;
    cert.sound = true;
    return cert;
}

} // namespace

void ConstructionParams::validate() const {
    if (eps <= 0 || eps > 1)
        throw PreconditionError("eps must lie in (0, 1], got " + rat_to_string(eps));
    if (d < 0 || d > kMaxDepth)
        throw PreconditionError("depth must be between 0 and " + std::to_string(kMaxDepth));
    if (k < 2) throw PreconditionError("path parameter k must be at least 2");
    if (n < 1) throw PreconditionError("vertex count must be positive");
    if (n > (1 << 24)) throw PreconditionError("vertex count is capped at 2^24");
    if (n % (1LL << d) != 0)
        throw PreconditionError("vertex count " + std::to_string(n) +
                                " is not divisible by 2^" + std::to_string(d));
}

std::string cert_method_name(CertMethod m) {
    switch (m) {
        case CertMethod::exhaustive: return "exhaustive";
        case CertMethod::sampled: return "sampled";
        case CertMethod::spectral: return "spectral";
    }
    std::abort();
}

Rat discrepancy_tolerance(int m, int d, const Rat& eps, int k) {
    if (k < 2) throw PreconditionError("tolerance needs k >= 2");
    if (d < 0 || d > kMaxDepth)
        throw PreconditionError("tolerance depth must be between 0 and " +
                                std::to_string(kMaxDepth));
    return eps * Rat(static_cast<long long>(m) * m, k * (1LL << (d + 2)));
}

QuasirandomCertificate certify_discrepancy(const OrderedGraph& block, int d, const Rat& eps,
                                           int k, CertMethod mode, uint64_t seed, int samples) {
    require_block_shape(block, d);
    if (k < 2) throw PreconditionError("certification needs k >= 2");
    const Rat tol = discrepancy_tolerance(block.n(), d, eps, k);
    switch (mode) {
        case CertMethod::exhaustive: return certify_exhaustive(block, d, tol);
        case CertMethod::sampled: return certify_sampled(block, d, tol, seed, samples);
        case CertMethod::spectral: return certify_spectral(block, d, tol);
    }
    std::abort();
}

namespace {

struct BlockBuild {
    OrderedGraph graph{2, {}};
    QuasirandomCertificate cert;
    int attempts = 0;
    uint64_t used_seed = 0;
};

BlockBuild build_block_attempts(int m, int d, const Rat& eps, int k, uint64_t seed) {
    if (d < 1 || d > kMaxDepth)
        throw PreconditionError("block depth must be between 1 and " + std::to_string(kMaxDepth));
    if (m < 2 || m % 2 != 0)
        throw PreconditionError("block size must be even and positive, got " + std::to_string(m));
    const long long m2 = static_cast<long long>(m) * m;
    if (m2 % (1LL << (d + 1)) != 0)
        throw PreconditionError("m^2/2^(d+1) is not an integer for m = " + std::to_string(m) +
                                ", d = " + std::to_string(d));
    const long long edge_target = m2 >> (d + 1);
    const int h = m / 2;
    const long long universe = static_cast<long long>(h) * h;
    if (universe > (1LL << 31))
        throw PreconditionError("block size " + std::to_string(m) + " is beyond the sampler cap");

    const Rat tol = discrepancy_tolerance(m, d, eps, k);
    const CertMethod mode = h <= kExhaustiveHalfCap ? CertMethod::exhaustive : CertMethod::spectral;

    BlockBuild best;
    bool have_best = false;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        const uint64_t attempt_seed = derive_seed(seed, static_cast<uint64_t>(attempt));
        SeededRng rng(attempt_seed);
        auto picks = rng.sample_without_replacement(static_cast<uint32_t>(universe),
                                                    static_cast<uint32_t>(edge_target));
        std::vector<Edge> edges;
        edges.reserve(picks.size());
        for (uint32_t idx : picks)
            edges.emplace_back(static_cast<int>(idx) / h + 1, h + static_cast<int>(idx) % h + 1);
        OrderedGraph g(m, std::move(edges));
        QuasirandomCertificate cert = certify_discrepancy(g, d, eps, k, mode);
        if (cert.pass)
            return BlockBuild{std::move(g), std::move(cert), attempt + 1, attempt_seed};
        if (!have_best || cert.worst_observed < best.cert.worst_observed) {
            best = BlockBuild{std::move(g), std::move(cert), attempt + 1, attempt_seed};
            have_best = true;
        } else {
            best.attempts = attempt + 1;
        }
        if (attempt + 1 >= kHopelessAfter && best.cert.worst_observed > 2 * tol) break;
    }
    return best;
}

} // namespace

std::pair<OrderedGraph, QuasirandomCertificate> build_bipartite(int m, int d, const Rat& eps,
                                                                int k, uint64_t seed) {
    if (eps <= 0 || eps > 1)
        throw PreconditionError("eps must lie in (0, 1], got " + rat_to_string(eps));
    if (k < 2) throw PreconditionError("block generation needs k >= 2");
    BlockBuild b = build_block_attempts(m, d, eps, k, seed);
    if (!b.cert.pass)
        throw CertificationError(
            "no certified block for m = " + std::to_string(m) + ", d = " + std::to_string(d) +
            " after " + std::to_string(b.attempts) +
            " attempts (best deviation " + rat_to_string(b.cert.worst_observed) + " vs tolerance " +
            rat_to_string(b.cert.tolerance) + "); the size is too small for this eps, d, k");
    return {std::move(b.graph), std::move(b.cert)};
}

bool ConstructedGraph::all_certified() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const BlockRecord& b) { return b.certificate.pass; });
}

namespace {

void build_node(const ConstructionParams& params, CertMode mode, int offset, int size, int depth,
                uint64_t node_seed, const std::string& path, std::vector<Edge>& edges,
                std::vector<BlockRecord>& blocks) {
    if (depth == 0) return;

    BlockBuild b = build_block_attempts(size, depth, params.eps, params.k,
                                        derive_seed(node_seed, 0));
    if (!b.cert.pass && mode == CertMode::required)
        throw CertificationError(
            "block at node '" + (path.empty() ? std::string("root") : path) + "' (size " +
            std::to_string(size) + ", depth " + std::to_string(depth) + ") failed certification: " +
            "best deviation " + rat_to_string(b.cert.worst_observed) + " vs tolerance " +
            rat_to_string(b.cert.tolerance) + " after " + std::to_string(b.attempts) + " attempts");

    for (const auto& [u, v] : b.graph.edges()) edges.emplace_back(offset + u, offset + v);
    blocks.push_back(BlockRecord{path, offset, size, depth, b.used_seed, b.attempts,
                                 std::move(b.cert)});

    const int half = size / 2;
    build_node(params, mode, offset, half, depth - 1, derive_seed(node_seed, 1), path + "L",
               edges, blocks);
    build_node(params, mode, offset + half, half, depth - 1, derive_seed(node_seed, 2), path + "R",
               edges, blocks);
}

} // namespace

ConstructedGraph build_g(const ConstructionParams& params, CertMode mode) {
    params.validate();
    std::vector<Edge> edges;
    std::vector<BlockRecord> blocks;
    if (params.d > 0) edges.reserve(static_cast<size_t>(edge_count_formula(params.n, params.d)));
    build_node(params, mode, 0, params.n, params.d, params.seed, "", edges, blocks);

    ConstructedGraph out;
    out.graph = OrderedGraph(params.n, std::move(edges));
    out.params = params;
    out.blocks = std::move(blocks);
    return out;
}

long long edge_count_formula(int n, int d) {
    if (n < 1) throw PreconditionError("vertex count must be positive");
    if (n > (1 << 24)) throw PreconditionError("vertex count is capped at 2^24");
    if (d < 0 || d > kMaxDepth)
        throw PreconditionError("depth must be between 0 and " + std::to_string(kMaxDepth));
    if (n % (1LL << d) != 0)
        throw PreconditionError("vertex count " + std::to_string(n) +
                                " is not divisible by 2^" + std::to_string(d));
    const long long numerator = static_cast<long long>(d) * n * n;
    if (numerator % (1LL << (d + 1)) != 0)
        throw PreconditionError("d*n^2 is not divisible by 2^(d+1)");
    return numerator >> (d + 1);
}

long long ascending_cross_edges(const OrderedGraph& g,
                                const std::vector<std::vector<int>>& parts) {
    std::vector<int> part_of(static_cast<size_t>(g.n()) + 1, 0);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) {
            if (v < 1 || v > g.n())
                throw PreconditionError("partition names vertex " + std::to_string(v) +
                                        " outside [1, " + std::to_string(g.n()) + "]");
            if (part_of[static_cast<size_t>(v)] != 0)
                throw PreconditionError("vertex " + std::to_string(v) +
                                        " appears in two partition classes");
            part_of[static_cast<size_t>(v)] = static_cast<int>(i) + 1;
        }
    for (int v = 1; v <= g.n(); ++v)
        if (part_of[static_cast<size_t>(v)] == 0)
            throw PreconditionError("partition misses vertex " + std::to_string(v));

    long long count = 0;
    for (const auto& [u, v] : g.edges())
        if (part_of[static_cast<size_t>(u)] < part_of[static_cast<size_t>(v)]) ++count;
    return count;
}

} // namespace ordturan
