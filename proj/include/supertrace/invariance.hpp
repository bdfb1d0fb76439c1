#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "supertrace/math_util.hpp"

namespace stlab {

// Executable invariance theory for the orthogonal group: multilinear
// invariants of k vectors realized as products of inner products (pairings),
// the Gram-determinant invariants spanning the kernel of the dimensional
// restriction map, and randomized rank/kernel certificates.

// A perfect matching on {1..k} in canonical form: each pair (lo, hi) with
// lo < hi, pairs sorted by lo.
struct Pairing {
    int k = 0;
    std::vector<std::pair<int, int>> pairs;
};

// One m x m Gram-determinant block g(v_{A} wedge, v_{B} wedge) on two
// disjoint ordered index sets, times a perfect matching of the remaining
// k - 2m slots.
struct ThetaInvariant {
    int k = 0;
    int m = 0;
    std::vector<int> left;   // m slot indices
    std::vector<int> right;  // m slot indices, disjoint from left
    std::vector<std::pair<int, int>> pairs;
};

// All (k-1)!! canonical perfect matchings. Odd k is an argument error (the
// invariant space is zero there).
std::vector<Pairing> enumerate_pairings(int k);

// All Gram-block invariants up to the symmetries that leave the value fixed
// (order within a block and the block swap): one representative per
// unordered {left, right} pair and matching of the rest.
std::vector<ThetaInvariant> enumerate_thetas(int k, int m);

double eval_pairing(const Pairing& p, const std::vector<Eigen::VectorXd>& vectors);
double eval_theta(const ThetaInvariant& t, const std::vector<Eigen::VectorXd>& vectors);

// A functional of either kind, for mixed-family rank computations.
struct Invariant {
    // wedge blocks empty <=> plain pairing
    std::vector<int> left, right;
    std::vector<std::pair<int, int>> pairs;
    int k = 0;

    static Invariant from(const Pairing& p) { return {{}, {}, p.pairs, p.k}; }
    static Invariant from(const ThetaInvariant& t) { return {t.left, t.right, t.pairs, t.k}; }
};

double eval_invariant(const Invariant& f, const std::vector<Eigen::VectorXd>& vectors);

// Evaluate on vectors padded with a zero last component: the restriction map
// realized dually.
double restrict_eval(const Invariant& f, const std::vector<Eigen::VectorXd>& lower_dim_vectors);

// Rank of the trials x functionals evaluation matrix on standard-normal
// vector tuples in R^m, singular values cut at 1e-8 relative.
int span_rank(const std::vector<Invariant>& functionals, int k, int m, int trials, Rng& rng);

// Haar-ish random orthogonal matrix via Gram-Schmidt on a Gaussian matrix.
Eigen::MatrixXd random_orthogonal(int m, Rng& rng);

struct KernelCertificate {
    int kernel_dim = 0;
    bool certified_by_theta = false;
    int rank_m = 0;
    int rank_lower = 0;
    int theta_rank = 0;
};

// dim ker(restriction) on the pairing span as rank difference between
// dimensions m and m-1, certified when the Gram-block family reproduces that
// rank from inside the kernel.
KernelCertificate kernel_dimension(int k, int m, Rng& rng);

}  // namespace stlab
