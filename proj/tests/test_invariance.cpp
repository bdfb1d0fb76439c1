#include <doctest.h>

#include <cmath>

#include "supertrace/invariance.hpp"

using namespace stlab;

namespace {

std::vector<Eigen::VectorXd> random_tuple(int k, int m, Rng& rng) {
    std::vector<Eigen::VectorXd> v(k);
    for (auto& x : v) {
        x.resize(m);
        for (int c = 0; c < m; ++c) x(c) = rng.gaussian();
    }
    return v;
}

}  // namespace

TEST_CASE("pairing enumeration counts") {
    CHECK(enumerate_pairings(2).size() == 1);
    CHECK(enumerate_pairings(4).size() == 3);
    CHECK(enumerate_pairings(6).size() == 15);
    CHECK(enumerate_pairings(8).size() == 105);
    CHECK_THROWS_AS(enumerate_pairings(3), std::invalid_argument);
    // canonical form: pairs sorted with lo < hi
    for (const auto& p : enumerate_pairings(6)) {
        int prev_lo = 0;
        for (const auto& [lo, hi] : p.pairs) {
            CHECK(lo < hi);
            CHECK(lo > prev_lo);
            prev_lo = lo;
        }
    }
}

TEST_CASE("pairing evaluation") {
    Rng rng(3);
    SUBCASE("orthonormal self-matching gives one") {
        std::vector<Eigen::VectorXd> v(4);
        for (int i = 0; i < 4; ++i) {
            v[i] = Eigen::VectorXd::Zero(4);
            v[i](i % 2) = 1.0;  // slots 1,3 -> e1; 2,4 -> e2
        }
        const Pairing p{4, {{1, 3}, {2, 4}}};
        CHECK(eval_pairing(p, v) == 1.0);
    }
    SUBCASE("bilinearity in each slot") {
        for (const auto& p : enumerate_pairings(4)) {
            auto v = random_tuple(4, 3, rng);
            const double base = eval_pairing(p, v);
            auto scaled = v;
            scaled[2] *= 2.5;
            CHECK(eval_pairing(p, scaled) == doctest::Approx(2.5 * base).epsilon(1e-12));
            auto shifted = v;
            Eigen::VectorXd w = Eigen::VectorXd::Zero(3);
            w(1) = 0.7;
            shifted[2] += w;
            auto only = v;
            only[2] = w;
            CHECK(eval_pairing(p, shifted) ==
                  doctest::Approx(base + eval_pairing(p, only)).epsilon(1e-12));
        }
    }
    SUBCASE("dimension mismatch") {
        auto v = random_tuple(4, 2, rng);
        CHECK_THROWS_AS(eval_pairing(Pairing{6, {{1, 2}, {3, 4}, {5, 6}}}, v), std::invalid_argument);
        auto ragged = random_tuple(4, 2, rng);
        ragged[2].resize(3);
        CHECK_THROWS_AS(eval_pairing(enumerate_pairings(4).front(), ragged), std::invalid_argument);
    }
}

TEST_CASE("orthogonal invariance") {
    Rng rng(5);
    double resid = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_u64() % 3);
        auto v = random_tuple(4, m, rng);
        const Eigen::MatrixXd q = random_orthogonal(m, rng);
        CHECK((q * q.transpose() - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
        std::vector<Eigen::VectorXd> rotated(4);
        for (int i = 0; i < 4; ++i) rotated[i] = q * v[i];
        for (const auto& p : enumerate_pairings(4))
            resid = std::max(resid, std::abs(eval_pairing(p, v) - eval_pairing(p, rotated)));
        if (4 >= 2 * m)
            for (const auto& t : enumerate_thetas(4, m))
                resid = std::max(resid, std::abs(eval_theta(t, v) - eval_theta(t, rotated)));
    }
    CHECK(resid < 1e-10);
}

TEST_CASE("theta invariants") {
    Rng rng(7);
    SUBCASE("enumeration respects the wedge threshold") {
        CHECK(enumerate_thetas(4, 3).empty());
        CHECK(enumerate_thetas(4, 2).size() == 3);
        CHECK(enumerate_thetas(6, 3).size() == 10);
        CHECK(enumerate_thetas(2, 1).size() == 1);
    }
    SUBCASE("orthonormal wedge blocks give determinant one") {
        std::vector<Eigen::VectorXd> v(4);
        for (int i = 0; i < 4; ++i) {
            v[i] = Eigen::VectorXd::Zero(2);
            v[i](i % 2) = 1.0;
        }
        const ThetaInvariant t{4, 2, {1, 2}, {3, 4}, {}};
        CHECK(eval_theta(t, v) == 1.0);
    }
    SUBCASE("signed permutation expansion of the Gram determinant") {
        for (int trial = 0; trial < 25; ++trial) {
            auto v = random_tuple(4, 2, rng);
            const ThetaInvariant t{4, 2, {1, 2}, {3, 4}, {}};
            const double expansion = v[0].dot(v[2]) * v[1].dot(v[3]) -
                                     v[0].dot(v[3]) * v[1].dot(v[2]);
            CHECK(eval_theta(t, v) == doctest::Approx(expansion).epsilon(1e-10));
        }
    }
    SUBCASE("overfull wedge blocks vanish") {
        // m+1 = 3 vectors wedged in R^2: the Gram block is singular
        for (int trial = 0; trial < 10; ++trial) {
            auto v = random_tuple(6, 2, rng);
            const Invariant inv{{1, 2, 3}, {4, 5, 6}, {}, 6};
            CHECK(std::abs(eval_invariant(inv, v)) < 1e-10);
        }
    }
    SUBCASE("restriction kills every theta exactly") {
        // integer components keep every product exactly representable, so the
        // singular Gram determinant cancels bit-exactly
        for (const auto& t : enumerate_thetas(4, 2)) {
            std::vector<Eigen::VectorXd> v(4);
            for (auto& x : v) {
                x.resize(1);
                x(0) = rng.small_int(9);
            }
            CHECK(restrict_eval(Invariant::from(t), v) == 0.0);
        }
    }
    SUBCASE("pairings restrict to their lower-dimensional evaluation") {
        for (const auto& p : enumerate_pairings(4)) {
            auto v = random_tuple(4, 2, rng);
            CHECK(restrict_eval(Invariant::from(p), v) ==
                  doctest::Approx(eval_pairing(p, v)).epsilon(1e-14));
        }
    }
}

TEST_CASE("span ranks") {
    std::vector<Invariant> pairings;
    for (const auto& p : enumerate_pairings(4)) pairings.push_back(Invariant::from(p));
    Rng r1(11), r2(12), r3(13), r4(14);
    CHECK(span_rank(pairings, 4, 2, 12, r1) == 3);
    CHECK(span_rank(pairings, 4, 1, 12, r2) == 1);
    CHECK(span_rank(pairings, 4, 3, 12, r3) == 3);  // injectivity band: stable above 2m > k
    CHECK_THROWS_AS(span_rank(pairings, 4, 2, 4, r4), std::invalid_argument);
    Rng r5(15);
    const Invariant single = Invariant::from(enumerate_pairings(2).front());
    CHECK(span_rank({single}, 2, 5, 4, r5) == 1);
}

TEST_CASE("kernel dimensions with theta certificates") {
    Rng r1(21), r2(22), r3(23), r4(24);
    const KernelCertificate c42 = kernel_dimension(4, 2, r1);
    CHECK(c42.kernel_dim == 2);
    CHECK(c42.certified_by_theta);
    CHECK(c42.rank_m == 3);
    CHECK(c42.rank_lower == 1);

    const KernelCertificate c43 = kernel_dimension(4, 3, r2);
    CHECK(c43.kernel_dim == 0);
    CHECK(c43.certified_by_theta);

    const KernelCertificate c21 = kernel_dimension(2, 1, r3);
    CHECK(c21.kernel_dim == 1);
    CHECK(c21.certified_by_theta);

    const KernelCertificate c63 = kernel_dimension(6, 3, r4);
    CHECK(c63.certified_by_theta);
    CHECK(c63.kernel_dim == c63.theta_rank);

    Rng r5(25);
    CHECK_THROWS_AS(kernel_dimension(10, 2, r5), std::invalid_argument);
}
