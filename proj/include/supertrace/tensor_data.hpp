#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stlab {

// Raised when tensor input fails a structural symmetry check. The message
// names the failing symmetry so bad data is diagnosable from the error alone.
class TensorValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Pointwise Riemann curvature R_{ijkl} in an orthonormal frame, 1-based
// indices, optionally with first covariant derivatives R_{ijkl;n}.
//
// Sign convention: R_{1221} = +1 on the unit two-sphere.
//
// Construction validates (tolerance 1e-12):
//   R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij}
//   R_{ijkl} + R_{jkil} + R_{kijl} = 0                 (first Bianchi)
// and for the jets additionally
//   same algebraic symmetries in the first four slots,
//   first Bianchi in (i,j,k),
//   R_{ijkl;n} + R_{ijln;k} + R_{ijnk;l} = 0           (second Bianchi)
class CurvatureTensor {
public:
    CurvatureTensor(int m, std::vector<double> components,
                    std::optional<std::vector<double>> first_jets = std::nullopt);

    static CurvatureTensor zero(int m);

    int dim() const { return m_; }
    bool has_jets() const { return jets_.has_value(); }

    // R_{ijkl}, indices 1..m
    double operator()(int i, int j, int k, int l) const {
        return r_[idx4(i, j, k, l)];
    }
    // R_{ijkl;n}
    double jet(int i, int j, int k, int l, int n) const;

    double scalar_curvature() const;                  // R_{ijji}
    double normal_sectional_sum() const;              // R_{amam}, a = 1..m-1, normal = m

private:
    std::size_t idx4(int i, int j, int k, int l) const;
    void validate() const;

    int m_;
    std::vector<double> r_;
    std::optional<std::vector<double>> jets_;
};

// Second fundamental form L_{ab} of the boundary (a, b = 1..m-1, inward unit
// geodesic normal e_m), optional tangential jets L_{ab:c}, and optionally the
// ambient curvature at the boundary point (an m-dimensional CurvatureTensor
// in a frame where index m is the normal).
//
// Validates L symmetry, dL symmetry in (a,b), and -- when both dL and the
// curvature are present -- the Codazzi relation
//   L_{c2 c3 : c1} - L_{c1 c3 : c2} = R_{c1 c2 c3 m}     (tolerance 1e-10)
class BoundaryJet {
public:
    BoundaryJet(int m, std::vector<double> second_form,
                std::optional<std::vector<double>> tangential_jets = std::nullopt,
                std::optional<CurvatureTensor> ambient_curvature = std::nullopt);

    static BoundaryJet flat(int m);  // L = 0, no jets, zero curvature

    int dim() const { return m_; }          // ambient dimension m
    int boundary_dim() const { return m_ - 1; }
    bool has_jets() const { return jets_.has_value(); }
    bool has_curvature() const { return curvature_.has_value(); }

    double L(int a, int b) const { return l_[(a - 1) * (m_ - 1) + (b - 1)]; }
    double jet(int a, int b, int c) const;  // L_{ab:c}
    const CurvatureTensor& curvature() const;

    double trace() const;          // L_aa
    double square_norm() const;    // L_ab L_ab

private:
    void validate() const;

    int m_;
    std::vector<double> l_;
    std::optional<std::vector<double>> jets_;
    std::optional<CurvatureTensor> curvature_;
};

// Covariant derivatives of the dilaton at a point: phi_{;i} and the symmetric
// Hessian phi_{;ij}. The undifferentiated value never enters any invariant,
// so it is not stored.
class DilatonJet {
public:
    DilatonJet(int m, std::vector<double> gradient, std::vector<double> hessian);

    static DilatonJet zero(int m);

    int dim() const { return m_; }
    double grad(int i) const { return grad_[i - 1]; }
    double hess(int i, int j) const { return hess_[(i - 1) * m_ + (j - 1)]; }
    double grad_square() const;  // phi_{;i} phi_{;i}

    DilatonJet operator-() const;

private:
    int m_;
    std::vector<double> grad_;
    std::vector<double> hess_;
};

// Bundle of tensor data parsed from a JSON document. File schema (all arrays
// nested, indices 0-based in the file, mapped to 1-based frame indices here):
//   dim       : integer m
//   R         : m^4 nested array R[i][j][k][l]            (optional)
//   dR        : m^5 nested array R[i][j][k][l][n]         (optional)
//   L         : (m-1)^2 nested array                       (optional)
//   dL        : (m-1)^3 nested array                       (optional)
//   phi_grad  : m array                                    (optional)
//   phi_hess  : m^2 nested array                           (optional)
struct TensorBundle {
    int dim = 0;
    std::optional<CurvatureTensor> curvature;
    std::optional<BoundaryJet> boundary;
    std::optional<DilatonJet> dilaton;
};

TensorBundle load_tensor_bundle_json(const std::string& json_text);
TensorBundle load_tensor_bundle_file(const std::string& path);

}  // namespace stlab
