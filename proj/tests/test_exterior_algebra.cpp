#include <doctest.h>

#include "supertrace/exterior_algebra.hpp"
#include "supertrace/math_util.hpp"

using namespace stlab;

TEST_CASE("wedge operator in one dimension") {
    const ExteriorOperator e1 = wedge_op(1, 1);
    // basis (1, e^1): 1 -> e^1, e^1 -> 0
    CHECK(e1(1, 0) == 1.0);
    CHECK(e1(0, 0) == 0.0);
    CHECK(e1(0, 1) == 0.0);
    CHECK(e1(1, 1) == 0.0);
}

TEST_CASE("wedge sign convention on the plane") {
    // e^2 wedge e^1 = -e^1 wedge e^2
    const ExteriorOperator e2 = wedge_op(2, 2);
    CHECK(e2(0b11, 0b01) == -1.0);
    CHECK(e2(0b11, 0b10) == 0.0);
    const ExteriorOperator anti = wedge_op(1, 2) * wedge_op(2, 2) + wedge_op(2, 2) * wedge_op(1, 2);
    CHECK(anti.matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("wedge squares to zero") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            CHECK(wedge_op(i, m).pow(2).matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("anticommutation rule is exactly the Kronecker delta") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                const ExteriorOperator rel =
                    wedge_op(i, m) * interior_op(j, m) + interior_op(j, m) * wedge_op(i, m);
                const ExteriorOperator target =
                    i == j ? ExteriorOperator::identity(m) : ExteriorOperator::zero(m);
                CHECK((rel - target).matrix().cwiseAbs().maxCoeff() == 0.0);
            }
}

TEST_CASE("interior is the transpose of wedge") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i) {
            const ExteriorOperator diff = interior_op(i, m) - wedge_op(i, m).transpose();
            CHECK(diff.matrix().cwiseAbs().maxCoeff() == 0.0);
        }
}

TEST_CASE("interior annihilates functions") {
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; i <= m; ++i) CHECK(interior_op(i, m)(0, 0) == 0.0);
}

TEST_CASE("Clifford relations") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                const ExteriorOperator gi = clifford_op(i, m), gj = clifford_op(j, m);
                const ExteriorOperator target = i == j ? -2.0 * ExteriorOperator::identity(m)
                                                       : ExteriorOperator::zero(m);
                CHECK((gi * gj + gj * gi - target).matrix().cwiseAbs().maxCoeff() == 0.0);
            }
}

TEST_CASE("Clifford generator matrix in one dimension") {
    const ExteriorOperator g = clifford_op(1, 1);
    CHECK(g(0, 0) == 0.0);
    CHECK(g(0, 1) == -1.0);
    CHECK(g(1, 0) == 1.0);
    CHECK(g(1, 1) == 0.0);
}

TEST_CASE("supertrace of the identity") {
    CHECK(supertrace(ExteriorOperator::identity(0)) == 1.0);
    for (int m = 1; m <= 8; ++m) CHECK(supertrace(ExteriorOperator::identity(m)) == 0.0);
}

TEST_CASE("supertrace of a small Robin square") {
    // S = e1 i1 + 2 e2 i2 acts diagonally with mask sums (0, 1, 2, 3)
    const ExteriorOperator s =
        wedge_op(1, 2) * interior_op(1, 2) + 2.0 * (wedge_op(2, 2) * interior_op(2, 2));
    CHECK(supertrace(s.pow(2)) == 4.0);
}

TEST_CASE("supertrace of degree-shifting operators vanishes") {
    for (int m = 1; m <= 5; ++m)
        for (int i = 1; i <= m; ++i) {
            CHECK(supertrace(wedge_op(i, m)) == 0.0);
            CHECK(supertrace(interior_op(i, m)) == 0.0);
        }
}

TEST_CASE("graded tensor product multiplies supertraces") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int m1 = 1 + static_cast<int>(rng.next_u64() % 4);
        const int m2 = 1 + static_cast<int>(rng.next_u64() % 4);
        ExteriorOperator a = ExteriorOperator::zero(m1), b = ExteriorOperator::zero(m2);
        for (Eigen::Index r = 0; r < a.size(); ++r)
            for (Eigen::Index c = 0; c < a.size(); ++c) a.matrix()(r, c) = rng.small_int(3);
        for (Eigen::Index r = 0; r < b.size(); ++r)
            for (Eigen::Index c = 0; c < b.size(); ++c) b.matrix()(r, c) = rng.small_int(3);
        CHECK(supertrace(graded_tensor_product(a, b)) == supertrace(a) * supertrace(b));
    }
}

TEST_CASE("tensor product of identities is the identity") {
    const ExteriorOperator id =
        graded_tensor_product(ExteriorOperator::identity(3), ExteriorOperator::identity(2));
    CHECK((id - ExteriorOperator::identity(5)).matrix().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("degree projection") {
    for (int m = 1; m <= 5; ++m)
        for (int p = 0; p <= m; ++p) {
            const double binom = std::round(factorial(m) / (factorial(p) * factorial(m - p)));
            CHECK(degree_projection(ExteriorOperator::identity(m), p).trace() == binom);
        }
    CHECK(degree_projection(wedge_op(1, 3), 0).matrix().cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(degree_projection(ExteriorOperator::identity(3), 4), std::invalid_argument);

    Rng rng(13);
    ExteriorOperator op = ExteriorOperator::zero(4);
    for (Eigen::Index r = 0; r < op.size(); ++r)
        for (Eigen::Index c = 0; c < op.size(); ++c) op.matrix()(r, c) = rng.small_int(9);
    double str = 0.0;
    for (int p = 0; p <= 4; ++p)
        str += (p % 2 == 0 ? 1.0 : -1.0) * degree_projection(op, p).trace();
    CHECK(str == supertrace(op));
}

TEST_CASE("argument and capacity errors") {
    CHECK_THROWS_AS(wedge_op(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(wedge_op(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(interior_op(7, 6), std::invalid_argument);
    CHECK_THROWS_AS(wedge_op(1, 13), std::invalid_argument);
    CHECK_THROWS_AS(ExteriorOperator::identity(13), std::invalid_argument);
}
