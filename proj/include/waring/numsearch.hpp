#pragma once

// Floating-point search for Waring decompositions of 6 tr(X^3):
//   minimize  sum_alpha | coeff_alpha(sum_i l_{m_i}^3) - 6 coeff_alpha(tr X^3) |^2
// over r complex n x n matrices, by gradient descent with Armijo backtracking.
// A damped Gauss-Newton rule is available for polishing near a solution, where
// the minimum is degenerate and first-order descent slows to a crawl.

#include "waring/decomposition.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace waring {

using cplx = std::complex<double>;

struct NumericCandidate {
    int n = 0;
    int r = 0;
    /// r matrices, each n*n row-major, concatenated.
    std::vector<cplx> entries;

    NumericCandidate() = default;
    NumericCandidate(int n_, int r_) : n(n_), r(r_), entries(static_cast<size_t>(r_) * n_ * n_) {}

    cplx& at(int i, int p, int q) { return entries[(static_cast<size_t>(i) * n + p) * n + q]; }
    const cplx& at(int i, int p, int q) const { return entries[(static_cast<size_t>(i) * n + p) * n + q]; }
};

enum class StepRule {
    Armijo,              // each iteration starts its backtracking at initial_step
    BarzilaiBorwein,     // starts at the BB1 step estimate, then backtracks
    LevenbergMarquardt,  // damped Gauss-Newton on the residual vector
};

struct SearchOptions {
    int restarts = 1;
    long max_iters = 50000;
    double tolerance = 1e-12;
    StepRule step_rule = StepRule::Armijo;
    double initial_step = 1.0;
    double shrink = 0.5;
    double armijo_slope = 1e-4;
    /// Standard deviation of each real and imaginary part at initialization.
    double init_scale = 0.5;
    /// Worker threads for restarts; the merged result does not depend on it.
    int jobs = 1;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

struct SearchResult {
    NumericCandidate best;
    double loss = 0.0;
    long iterations = 0;
    /// Stream seed of the winning restart (0 for polish).
    std::uint64_t seed = 0;
    bool converged = false;
};

/// Throws std::domain_error on non-finite entries.
double loss(const NumericCandidate& c);
/// d loss / d Re z + i d loss / d Im z for every entry z (twice the Wirtinger
/// derivative with respect to conj(z)).
std::vector<cplx> gradient(const NumericCandidate& c);

/// Random restarts; restart k draws from a stream seeded with seed + k and the
/// lowest loss wins, ties to the lowest restart index.
SearchResult search(int n, int r, std::uint64_t seed, const SearchOptions& opts = {});
/// Descent from c without re-initialization.
SearchResult polish(const NumericCandidate& c, const SearchOptions& opts = {});

/// The exact decomposition mapped through the complex embedding, with the
/// weight folded in so that sum_i l_i^3 targets 6 tr(X^3) when weight = 1/6.
NumericCandidate embed_decomposition(const WaringDecomposition& d);
/// Adds independent N(0, scale^2) noise to every real and imaginary part.
NumericCandidate perturb(const NumericCandidate& c, double scale, std::uint64_t seed);
/// Applies m -> g m g^-1 to every matrix of the candidate.
NumericCandidate conjugate_by(const NumericCandidate& c, const SquareMatrix& g);

}  // namespace waring
