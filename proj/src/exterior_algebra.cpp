#include "supertrace/exterior_algebra.hpp"

#include <cmath>

namespace stlab {

namespace {

void check_frame_index(int i, int m) {
    if (i < 1 || i > m) throw std::invalid_argument("frame index out of range [1, m]");
}

// +1/-1 parity of set bits of mask strictly below bit position (i-1)
inline double below_sign(std::uint32_t mask, int i) {
    const std::uint32_t below = mask & ((1u << (i - 1)) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

ExteriorOperator wedge_op(int i, int m) {
    ExteriorOperator::check_dim(m);
    check_frame_index(i, m);
    const std::uint32_t n = 1u << m;
    const std::uint32_t bit = 1u << (i - 1);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
    for (std::uint32_t mask = 0; mask < n; ++mask) {
        if (mask & bit) continue;  // e^i ^ e^i = 0
        mat(mask | bit, mask) = below_sign(mask, i);
    }
    return ExteriorOperator(m, std::move(mat));
}

ExteriorOperator interior_op(int i, int m) {
    return wedge_op(i, m).transpose();
}

ExteriorOperator clifford_op(int i, int m) {
    const ExteriorOperator e = wedge_op(i, m);
    return e - e.transpose();
}

double supertrace(const ExteriorOperator& op) {
    // Neumaier-compensated: the alternating sum can cancel many orders of
    // magnitude for high operator powers
    double sum = 0.0, comp = 0.0;
    const std::uint32_t n = static_cast<std::uint32_t>(op.size());
    for (std::uint32_t mask = 0; mask < n; ++mask) {
        const double term = (form_degree(mask) % 2 == 0 ? 1.0 : -1.0) * op(mask, mask);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

ExteriorOperator degree_projection(const ExteriorOperator& op, int p) {
    if (p < 0 || p > op.dim())
        throw std::invalid_argument("degree_projection: degree out of range [0, m]");
    const std::uint32_t n = static_cast<std::uint32_t>(op.size());
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
    for (std::uint32_t r = 0; r < n; ++r) {
        if (form_degree(r) != p) continue;
        for (std::uint32_t c = 0; c < n; ++c)
            if (form_degree(c) == p) mat(r, c) = op(r, c);
    }
    return ExteriorOperator(op.dim(), std::move(mat));
}

ExteriorOperator graded_tensor_product(const ExteriorOperator& a, const ExteriorOperator& b) {
    const int m = a.dim() + b.dim();
    ExteriorOperator::check_dim(m);
    const std::uint32_t na = static_cast<std::uint32_t>(a.size());
    const std::uint32_t nb = static_cast<std::uint32_t>(b.size());
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(Eigen::Index(na) * nb, Eigen::Index(na) * nb);
    for (std::uint32_t rb = 0; rb < nb; ++rb)
        for (std::uint32_t cb = 0; cb < nb; ++cb) {
            const double bv = b(rb, cb);
            if (bv == 0.0) continue;
            for (std::uint32_t ra = 0; ra < na; ++ra)
                for (std::uint32_t ca = 0; ca < na; ++ca) {
                    const double av = a(ra, ca);
                    if (av == 0.0) continue;
                    mat(ra | (rb << a.dim()), ca | (cb << a.dim())) = av * bv;
                }
        }
    return ExteriorOperator(m, std::move(mat));
}

}  // namespace stlab
