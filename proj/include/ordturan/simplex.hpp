#ifndef ORDTURAN_SIMPLEX_HPP
#define ORDTURAN_SIMPLEX_HPP

#include "ordturan/rational.hpp"
#include "ordturan/rng.hpp"

#include <vector>

namespace ordturan {

// Point of the standard simplex: coordinates in [0,1] summing to exactly 1.
class SimplexVector {
public:
    explicit SimplexVector(std::vector<Rat> coords);

    int k() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

    Rat norm_squared() const;

    static SimplexVector uniform(int k);

private:
    std::vector<Rat> coords_;
};

// Draws k integers uniformly from [0, 1000] and renormalizes by their sum
// (all-zero draws are redrawn), giving exact rational simplex points with
// small denominators.
SimplexVector random_simplex(int k, SeededRng& rng);

struct BoundReport {
    Rat lhs;
    Rat rhs;
    Rat slack;   // rhs - lhs
    bool holds;  // slack >= 0
};

BoundReport make_bound_report(Rat lhs, Rat rhs);

// h_d(alpha) = (d+2)(1 - |alpha|^2) + k * sum_{r=1..d} 1/r, exact.
Rat h(const SimplexVector& alpha, int d);

// With alpha = (beta+gamma)/2, compares
//   lhs = h_{d-1}(beta) + h_{d-1}(gamma) + 4*sum_{i<j} beta_i*gamma_j
// against rhs = 2*h_d(alpha). The inequality lhs <= rhs holds for every input, so a
// report with holds == false indicates a bug.
BoundReport check_recursion(const SimplexVector& beta, const SimplexVector& gamma, int d);

// Minimal d >= 1 with 2 + k*H_d <= eps*d (H_d the d-th harmonic number).
int choose_depth(const Rat& eps, int k);

// (h_d(alpha) + d*eps) / (2d), exact.
Rat ratio_bound(const SimplexVector& alpha, int d, const Rat& eps);

// For the worst case |alpha|^2 = 1/k, verifies
//   d(k-1)/k + 2 + k*H_d <= d((k-1)/k + eps),
// which holds exactly when d passes choose_depth's inequality; callers must
// pass such a d, otherwise a PreconditionError is raised.
BoundReport asymptotic_check(int k, const Rat& eps, int d);

} // namespace ordturan

#endif
