#include "supertrace/invariance.hpp"

#include <algorithm>
#include <stdexcept>

namespace stlab {

namespace {

void enumerate_matchings(std::vector<int>& free_slots, std::vector<std::pair<int, int>>& current,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
    if (free_slots.empty()) {
        out.push_back(current);
        return;
    }
    const int first = free_slots.front();
    for (std::size_t i = 1; i < free_slots.size(); ++i) {
        std::vector<int> rest;
        rest.reserve(free_slots.size() - 2);
        for (std::size_t j = 1; j < free_slots.size(); ++j)
            if (j != i) rest.push_back(free_slots[j]);
        current.emplace_back(first, free_slots[i]);
        enumerate_matchings(rest, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<std::pair<int, int>>> matchings_of(std::vector<int> slots) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (slots.size() % 2 != 0)
        throw std::invalid_argument("matchings: odd number of slots");
    std::vector<std::pair<int, int>> current;
    enumerate_matchings(slots, current, out);
    if (out.empty()) out.push_back({});
    return out;
}

double gram_determinant(const std::vector<int>& left, const std::vector<int>& right,
                        const std::vector<Eigen::VectorXd>& vectors) {
    const int m = static_cast<int>(left.size());
    Eigen::MatrixXd gram(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            gram(r, c) = vectors[left[c] - 1].dot(vectors[right[r] - 1]);
    return gram.determinant();
}

}  // namespace

std::vector<Pairing> enumerate_pairings(int k) {
    if (k % 2 != 0)
        throw std::invalid_argument("enumerate_pairings: the invariant space is zero for odd k");
    if (k < 0 || k > 12) throw std::invalid_argument("enumerate_pairings: k out of range [0, 12]");
    std::vector<int> slots(k);
    for (int i = 0; i < k; ++i) slots[i] = i + 1;
    std::vector<Pairing> out;
    for (auto& match : matchings_of(slots)) out.push_back(Pairing{k, std::move(match)});
    return out;
}

std::vector<ThetaInvariant> enumerate_thetas(int k, int m) {
    if (k % 2 != 0) throw std::invalid_argument("enumerate_thetas: k must be even");
    if (k < 2 * m) return {};
    std::vector<ThetaInvariant> out;
    // choose the 2m wedge slots, then split them into {left, right} with the
    // smallest chosen slot pinned to the left block (kills the block swap)
    std::vector<int> selector(k, 0);
    std::fill(selector.begin(), selector.begin() + 2 * m, 1);
    std::sort(selector.begin(), selector.end());
    do {
        std::vector<int> wedge, rest;
        for (int i = 0; i < k; ++i) (selector[i] ? wedge : rest).push_back(i + 1);
        // partitions of wedge into two m-sets, first element fixed to left
        std::vector<int> pick(2 * m - 1, 0);
        std::fill(pick.begin(), pick.begin() + (m - 1), 1);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<int> left{wedge[0]}, right;
            for (int i = 1; i < 2 * m; ++i) (pick[i - 1] ? left : right).push_back(wedge[i]);
            for (auto& match : matchings_of(rest))
                out.push_back(ThetaInvariant{k, m, left, right, match});
        } while (std::next_permutation(pick.begin(), pick.end()));
    } while (std::next_permutation(selector.begin(), selector.end()));
    return out;
}

namespace {

void check_tuple(int k, const std::vector<Eigen::VectorXd>& vectors, const char* what) {
    if (static_cast<int>(vectors.size()) != k)
        throw std::invalid_argument(std::string(what) + ": expected k vectors");
    for (const auto& v : vectors)
        if (v.size() != vectors.front().size())
            throw std::invalid_argument(std::string(what) + ": vector dimension mismatch");
}

}  // namespace

double eval_pairing(const Pairing& p, const std::vector<Eigen::VectorXd>& vectors) {
    check_tuple(p.k, vectors, "eval_pairing");
    double prod = 1.0;
    for (const auto& [a, b] : p.pairs) prod *= vectors[a - 1].dot(vectors[b - 1]);
    return prod;
}

double eval_theta(const ThetaInvariant& t, const std::vector<Eigen::VectorXd>& vectors) {
    check_tuple(t.k, vectors, "eval_theta");
    double prod = gram_determinant(t.left, t.right, vectors);
    for (const auto& [a, b] : t.pairs) prod *= vectors[a - 1].dot(vectors[b - 1]);
    return prod;
}

double eval_invariant(const Invariant& f, const std::vector<Eigen::VectorXd>& vectors) {
    double prod = 1.0;
    if (!f.left.empty()) prod = gram_determinant(f.left, f.right, vectors);
    for (const auto& [a, b] : f.pairs) prod *= vectors[a - 1].dot(vectors[b - 1]);
    return prod;
}

double restrict_eval(const Invariant& f, const std::vector<Eigen::VectorXd>& lower_dim_vectors) {
    std::vector<Eigen::VectorXd> padded;
    padded.reserve(lower_dim_vectors.size());
    for (const auto& v : lower_dim_vectors) {
        Eigen::VectorXd w(v.size() + 1);
        w.head(v.size()) = v;
        w(v.size()) = 0.0;
        padded.push_back(std::move(w));
    }
    return eval_invariant(f, padded);
}

int span_rank(const std::vector<Invariant>& functionals, int k, int m, int trials, Rng& rng) {
    if (functionals.empty()) return 0;
    if (trials < 2 * static_cast<int>(functionals.size()))
        throw std::invalid_argument("span_rank: need at least 2x as many trials as functionals");
    Eigen::MatrixXd eval(trials, functionals.size());
    for (int t = 0; t < trials; ++t) {
        std::vector<Eigen::VectorXd> tuple(k);
        for (auto& v : tuple) {
            v.resize(std::max(m, 0));
            for (int c = 0; c < m; ++c) v(c) = rng.gaussian();
        }
        for (std::size_t f = 0; f < functionals.size(); ++f)
            eval(t, f) = eval_invariant(functionals[f], tuple);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(eval);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-8 * sv(0)) ++rank;
    return rank;
}

Eigen::MatrixXd random_orthogonal(int m, Rng& rng) {
    Eigen::MatrixXd a(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) a(r, c) = rng.gaussian();
    // modified Gram-Schmidt
    for (int c = 0; c < m; ++c) {
        for (int p = 0; p < c; ++p) a.col(c) -= a.col(p).dot(a.col(c)) * a.col(p);
        const double norm = a.col(c).norm();
        if (norm < 1e-12) return random_orthogonal(m, rng);  // degenerate draw, retry
        a.col(c) /= norm;
    }
    return a;
}

KernelCertificate kernel_dimension(int k, int m, Rng& rng) {
    if (k % 2 != 0 || k > 8 || m > 4 || m < 1)
        throw std::invalid_argument("kernel_dimension: need even k <= 8 and 1 <= m <= 4");
    KernelCertificate cert;
    if (k < 2 * m) {
        // restriction is injective below the wedge threshold
        cert.certified_by_theta = true;
        return cert;
    }
    std::vector<Invariant> pairings;
    for (const auto& p : enumerate_pairings(k)) pairings.push_back(Invariant::from(p));
    const int trials = 3 * static_cast<int>(pairings.size());
    Rng rng_m = rng.fork(1), rng_lower = rng.fork(2), rng_theta = rng.fork(3), rng_joint = rng.fork(4);
    cert.rank_m = span_rank(pairings, k, m, trials, rng_m);
    cert.rank_lower = span_rank(pairings, k, m - 1, trials, rng_lower);
    cert.kernel_dim = cert.rank_m - cert.rank_lower;

    std::vector<Invariant> thetas;
    for (const auto& t : enumerate_thetas(k, m)) thetas.push_back(Invariant::from(t));
    const int theta_trials = std::max(trials, 2 * static_cast<int>(thetas.size()) + 4);
    cert.theta_rank = span_rank(thetas, k, m, theta_trials, rng_theta);

    std::vector<Invariant> joint = pairings;
    joint.insert(joint.end(), thetas.begin(), thetas.end());
    const int joint_rank = span_rank(joint, k, m, 2 * static_cast<int>(joint.size()) + 4, rng_joint);

    cert.certified_by_theta = (cert.theta_rank == cert.kernel_dim) && (joint_rank == cert.rank_m);
    return cert;
}

}  // namespace stlab
