#pragma once

#include <array>
#include <optional>
#include <vector>

#include "supertrace/exterior_algebra.hpp"
#include "supertrace/math_util.hpp"
#include "supertrace/tensor_data.hpp"

namespace stlab {

// General Laplace-type heat-coefficient engine for orders n <= 3 with mixed
// boundary conditions, plus the concrete structures of the twisted de Rham
// Laplacian on the exterior algebra.
//
// An operator D = -(nabla^2 + E) on a fiber V over an m-manifold is described
// by its endomorphism E, the curvature Omega_{ij} of its canonical
// connection, and the boundary scalars it sees. The fiber is arbitrary (a
// 1x1 block gives scalar operators); the manifold dimension only enters the
// (4 pi) prefactors.

struct LaplaceTypeStructure {
    int manifold_dim = 0;
    ExteriorOperator endo;                        // E
    std::vector<ExteriorOperator> curvature_op;   // Omega_{ij}, row-major m x m
    std::optional<ExteriorOperator> endo_normal_jet;  // E_{;m} when known
    double scalar_curvature = 0.0;       // R_{ijji}
    double normal_sectional = 0.0;       // R_{amam}
    double second_form_trace = 0.0;      // L_{aa}
    double second_form_square = 0.0;     // L_{ab} L_{ab}
    double second_form_trace_sq = 0.0;   // L_{aa} L_{bb}

    const ExteriorOperator& omega(int i, int j) const {
        return curvature_op[(i - 1) * manifold_dim + (j - 1)];
    }
};

// chi, the Robin endomorphism S (supported on the +1 eigenspace of chi), and
// the tangential jets chi_{:a}.
struct BoundaryOperators {
    ExteriorOperator chi;
    ExteriorOperator robin;                  // S
    std::vector<ExteriorOperator> chi_jets;  // chi_{:a}, a = 1..m-1

    ExteriorOperator projector_plus() const {
        return 0.5 * (ExteriorOperator::identity(chi.dim()) + chi);
    }
    ExteriorOperator projector_minus() const {
        return 0.5 * (ExteriorOperator::identity(chi.dim()) - chi);
    }
};

// Omega_{ij} = sum_{kl} R_{ijkl} e_l i_k, the curvature of the Levi-Civita
// connection acting on the exterior algebra (a derivation on forms; the sign
// is pinned by the Bochner identity: -1/2 gamma_i gamma_j Omega_{ij} on
// one-forms equals minus the Ricci endomorphism).
ExteriorOperator curvature_operator(const CurvatureTensor& curv, int i, int j);

// E = -1/2 gamma_i gamma_j Omega_{ij} - phi_{;i} phi_{;i} - phi_{;ji}(e_i i_j - i_j e_i)
// assembled on Lambda(R^m), together with the scalar invariants the n <= 3
// coefficients consume. Pass the boundary jet when building at a boundary
// point so the L scalars are filled in.
LaplaceTypeStructure witten_structure(const CurvatureTensor& curv, const DilatonJet& dilaton,
                                      const BoundaryJet* bdry = nullptr);

// Normal derivative of the curvature part of E; requires curvature first
// jets. Dilaton contributions are not modeled (used with phi = 0 data).
ExteriorOperator witten_endo_normal_jet(const CurvatureTensor& curv_with_jets);

// Absolute boundary conditions: chi = +1 on tangential wedge monomials, -1 on
// those containing the normal; S = -L_{ab} e_b i_a on the tangential part;
// chi_{:a} = 2 L_{ab} (e_b i_m + e_m i_b).
BoundaryOperators absolute_boundary(const BoundaryJet& bdry);

// Scalar-fiber structure (1x1 fiber) for an operator -(d^2 + E) over an
// m-manifold, and constant-Robin boundary data for it.
LaplaceTypeStructure scalar_structure(int manifold_dim, double endo_value = 0.0);
BoundaryOperators scalar_robin(double robin_value);

enum class TraceMode { plain, super };

struct HeatDensity {
    double interior = 0.0;      // coefficient of f in the interior integrand
    double boundary_f = 0.0;    // coefficient of f in the boundary integrand
    double boundary_fn = 0.0;   // coefficient of f_{;m}
    double boundary_fnn = 0.0;  // coefficient of f_{;mm}
};

// The order-n heat coefficient integrands, n in {0,1,2,3}. Boundary parts
// need boundary operators; n > 3 is unsupported.
HeatDensity a_n_density(int n, const LaplaceTypeStructure& st, const BoundaryOperators* bo,
                        TraceMode mode);

// Assemble a_n(f, D) for an interval problem with the same structure at both
// endpoints: interior density times integral_f plus smearing jets (f, f_;m,
// f_;mm per endpoint) against the boundary densities.
double interval_coefficient(int n, const LaplaceTypeStructure& st, const BoundaryOperators& bo,
                            double integral_f, const std::array<double, 3>& jets_left,
                            const std::array<double, 3>& jets_right, TraceMode mode);

// Randomized agreement report between the engine supertrace densities and
// the closed-form order-(m+1) densities, m in {1, 2}.
struct CrosscheckReport {
    int m = 0;
    int trials = 0;
    double max_err_interior = 0.0;   // m = 1 interior density
    double max_err_f = 0.0;          // boundary f coefficient
    double max_err_fn = 0.0;         // boundary f_{;m} coefficient
    double max_err_index = 0.0;      // m = 2: engine a_2 interior vs index density
    double max_normal_dependence = 0.0;  // residual dependence on phi_{;m*}
};

CrosscheckReport crosscheck_theorem12(int m, int trials, Rng& rng);

}  // namespace stlab
