#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace stlab {

// Dense operator calculus on the exterior algebra Lambda(R^m).
//
// Basis convention: the 2^m wedge monomials e^{u_1} ^ ... ^ e^{u_p} with
// u_1 < ... < u_p are indexed by bit masks, bit (i-1) set <=> e^i present,
// and the basis is ordered by the mask value as an unsigned integer. All
// operator matrices are written in this basis, so results are reproducible
// across implementations.

constexpr int kMaxFiberDim = 12;  // dense 4096^2 is the largest we accept

inline int form_degree(std::uint32_t mask) { return std::popcount(mask); }

class ExteriorOperator {
public:
    ExteriorOperator() : dim_(0), mat_(Eigen::MatrixXd::Zero(1, 1)) {}

    ExteriorOperator(int dim, Eigen::MatrixXd mat) : dim_(dim), mat_(std::move(mat)) {
        check_dim(dim);
        const Eigen::Index n = Eigen::Index(1) << dim_;
        if (mat_.rows() != n || mat_.cols() != n)
            throw std::invalid_argument("ExteriorOperator: matrix size does not match 2^m");
    }

    static void check_dim(int dim) {
        if (dim < 0) throw std::invalid_argument("ExteriorOperator: negative dimension");
        if (dim > kMaxFiberDim)
            throw std::invalid_argument("ExteriorOperator: fiber dimension exceeds capacity (m <= 12)");
    }

    static ExteriorOperator zero(int dim) {
        check_dim(dim);
        return ExteriorOperator(dim, Eigen::MatrixXd::Zero(Eigen::Index(1) << dim, Eigen::Index(1) << dim));
    }

    static ExteriorOperator identity(int dim) {
        check_dim(dim);
        return ExteriorOperator(dim, Eigen::MatrixXd::Identity(Eigen::Index(1) << dim, Eigen::Index(1) << dim));
    }

    int dim() const { return dim_; }
    Eigen::Index size() const { return mat_.rows(); }
    const Eigen::MatrixXd& matrix() const { return mat_; }
    Eigen::MatrixXd& matrix() { return mat_; }

    double operator()(std::uint32_t row_mask, std::uint32_t col_mask) const {
        return mat_(row_mask, col_mask);
    }

    ExteriorOperator operator+(const ExteriorOperator& o) const {
        require_same(o);
        return ExteriorOperator(dim_, mat_ + o.mat_);
    }
    ExteriorOperator operator-(const ExteriorOperator& o) const {
        require_same(o);
        return ExteriorOperator(dim_, mat_ - o.mat_);
    }
    ExteriorOperator operator*(const ExteriorOperator& o) const {
        require_same(o);
        return ExteriorOperator(dim_, mat_ * o.mat_);
    }
    ExteriorOperator operator*(double c) const { return ExteriorOperator(dim_, c * mat_); }
    friend ExteriorOperator operator*(double c, const ExteriorOperator& op) { return op * c; }
    ExteriorOperator operator-() const { return ExteriorOperator(dim_, -mat_); }
    ExteriorOperator& operator+=(const ExteriorOperator& o) {
        require_same(o);
        mat_ += o.mat_;
        return *this;
    }

    ExteriorOperator transpose() const { return ExteriorOperator(dim_, mat_.transpose()); }

    ExteriorOperator pow(int n) const {
        if (n < 0) throw std::invalid_argument("ExteriorOperator::pow: negative exponent");
        ExteriorOperator result = identity(dim_);
        ExteriorOperator base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

    double trace() const { return mat_.trace(); }

private:
    void require_same(const ExteriorOperator& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("ExteriorOperator: dimension mismatch");
    }

    int dim_;
    Eigen::MatrixXd mat_;
};

// Left exterior multiplication by e^i. Raises degree by one; the sign is the
// parity of the number of basis indices below i already present.
ExteriorOperator wedge_op(int i, int m);

// Left interior multiplication by e_i, the adjoint of wedge_op in the
// orthonormal basis.
ExteriorOperator interior_op(int i, int m);

// gamma_i = wedge_op(i) - interior_op(i); the Clifford generators.
ExteriorOperator clifford_op(int i, int m);

// sum_p (-1)^p trace(op | Lambda^p)
double supertrace(const ExteriorOperator& op);

// op with everything outside the Lambda^p block zeroed
ExteriorOperator degree_projection(const ExteriorOperator& op, int p);

// a (x) b on Lambda(R^{m_a + m_b}) under the mask identification
// mask = mask_a | (mask_b << m_a). Degree-additive; for the degree-preserving
// operators used here this coincides with the graded tensor product, and the
// supertrace is multiplicative for arbitrary operands.
ExteriorOperator graded_tensor_product(const ExteriorOperator& a, const ExteriorOperator& b);

}  // namespace stlab
