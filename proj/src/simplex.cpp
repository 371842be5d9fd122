#include "ordturan/simplex.hpp"

#include "ordturan/errors.hpp"

namespace ordturan {

SimplexVector::SimplexVector(std::vector<Rat> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw PreconditionError("simplex vector needs at least one coordinate");
    Rat sum = 0;
    for (const Rat& c : coords_) {
        if (c < 0 || c > 1)
            throw PreconditionError("simplex coordinate outside [0, 1]: " + rat_to_string(c));
        sum += c;
    }
    if (sum != 1)
        throw PreconditionError("simplex coordinates sum to " + rat_to_string(sum) + ", not 1");
}

Rat SimplexVector::norm_squared() const {
    Rat s = 0;
    for (const Rat& c : coords_) s += c * c;
    return s;
}

SimplexVector SimplexVector::uniform(int k) {
    if (k < 1) throw PreconditionError("uniform simplex vector needs k >= 1");
    return SimplexVector(std::vector<Rat>(static_cast<size_t>(k), Rat(1, k)));
}

SimplexVector random_simplex(int k, SeededRng& rng) {
    if (k < 1) throw PreconditionError("random simplex vector needs k >= 1");
    constexpr uint64_t kGrid = 1000;
    for (;;) {
        std::vector<uint64_t> raw(static_cast<size_t>(k));
        uint64_t total = 0;
        for (auto& r : raw) {
            r = rng.below(kGrid + 1);
            total += r;
        }
        if (total == 0) continue;
        std::vector<Rat> coords;
        coords.reserve(raw.size());
        for (uint64_t r : raw) coords.emplace_back(Rat(r, total));
        return SimplexVector(std::move(coords));
    }
}

BoundReport make_bound_report(Rat lhs, Rat rhs) {
    Rat slack = rhs - lhs;
    bool holds = slack >= 0;
    return BoundReport{std::move(lhs), std::move(rhs), std::move(slack), holds};
}

namespace {

Rat harmonic(int d) {
    Rat s = 0;
    for (int r = 1; r <= d; ++r) s += Rat(1, r);
    return s;
}

} // namespace

Rat h(const SimplexVector& alpha, int d) {
    if (d < 0) throw PreconditionError("h is defined for nonnegative depth only");
    return Rat(d + 2) * (Rat(1) - alpha.norm_squared()) + Rat(alpha.k()) * harmonic(d);
}

BoundReport check_recursion(const SimplexVector& beta, const SimplexVector& gamma, int d) {
    if (d < 1) throw PreconditionError("recursion check needs depth d >= 1");
    if (beta.k() != gamma.k())
        throw PreconditionError("recursion check needs vectors of equal dimension");
    const int k = beta.k();

    std::vector<Rat> mid;
    mid.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) mid.push_back((beta[i] + gamma[i]) / 2);
    SimplexVector alpha(std::move(mid));

    Rat cross = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) cross += beta[i] * gamma[j];

    Rat lhs = h(beta, d - 1) + h(gamma, d - 1) + 4 * cross;
    Rat rhs = 2 * h(alpha, d);
    return make_bound_report(std::move(lhs), std::move(rhs));
}

int choose_depth(const Rat& eps, int k) {
    if (eps <= 0) throw PreconditionError("depth selection needs eps > 0");
    if (k < 2) throw PreconditionError("depth selection needs k >= 2");
    Rat hd = 0;
    for (int d = 1;; ++d) {
        hd += Rat(1, d);
        if (Rat(2) + Rat(k) * hd <= eps * d) return d;
    }
}

Rat ratio_bound(const SimplexVector& alpha, int d, const Rat& eps) {
    if (d < 1) throw PreconditionError("ratio bound needs depth d >= 1");
    return (h(alpha, d) + Rat(d) * eps) / Rat(2 * d);
}

BoundReport asymptotic_check(int k, const Rat& eps, int d) {
    if (k < 2) throw PreconditionError("asymptotic check needs k >= 2");
    if (d < 1) throw PreconditionError("asymptotic check needs depth d >= 1");
    const Rat hd = harmonic(d);
    if (Rat(2) + Rat(k) * hd > eps * d)
        throw PreconditionError("depth " + std::to_string(d) +
                                " does not satisfy the depth-selection inequality for eps = " +
                                rat_to_string(eps) + ", k = " + std::to_string(k));
    Rat common = Rat(d) * Rat(k - 1, k);
    Rat lhs = common + 2 + Rat(k) * hd;
    Rat rhs = common + Rat(d) * eps;
    return make_bound_report(std::move(lhs), std::move(rhs));
}

} // namespace ordturan
