#pragma once

#include <optional>
#include <vector>

#include "supertrace/tensor_data.hpp"

namespace stlab {

// Evaluator for totally antisymmetrized index contractions: expressions of
// the shape
//
//   eps_J^I  T^1_{...} T^2_{...} ... T^r_{...}
//
// where eps_J^I is the Gram pairing of wedge monomials (the generalized
// Kronecker delta), I and J are ordered blocks of `block_size` indices,
// remaining slots are either dummies contracted in pairs or fixed literal
// indices (the distinguished normal direction), and optionally the whole
// product sits under one outer tangential derivative whose index is bound to
// an epsilon slot (a divergence).
//
// Evaluation is the brute-force double permutation sum
//   sum_{S, pi, rho} sign(pi) sign(rho) prod_f T^f(indices)
// over mu-element index subsets S and bijections pi, rho onto S, with dummy
// pairs summed over 1..dim. No Bianchi canonicalization is attempted; the
// block size is capped at 8.

constexpr int kMaxContractionBlock = 8;

enum class TensorSymbol {
    curvature,        // R_{ijkl}
    curvature_jet,    // R_{ijkl;n}
    second_form,      // L_{ab}
    second_form_jet,  // L_{ab:c}
    dilaton_grad,     // phi_{;i}
    dilaton_hess,     // phi_{;ij}
};

struct IndexSlot {
    enum Kind { eps_upper, eps_lower, dummy, fixed } kind;
    // eps_*: position inside the block (0-based); dummy: pair id; fixed: the
    // literal 1-based frame index.
    int id;
};

struct ContractionFactor {
    TensorSymbol symbol;
    std::vector<IndexSlot> slots;
};

struct ContractionExpression {
    int block_size = 0;
    int dummy_count = 0;
    std::vector<ContractionFactor> factors;
    // outer tangential derivative index; present only for divergence terms
    std::optional<IndexSlot> divergence;
};

// Concrete tensor data the expression is evaluated against. `dim` is the
// summation range of epsilon and dummy indices (the tangential dimension m-1
// for boundary invariants, m for interior ones). Absent tensors evaluate
// as identically zero.
struct TensorAssignment {
    int dim = 0;
    const CurvatureTensor* curvature = nullptr;
    const BoundaryJet* boundary = nullptr;
    const DilatonJet* dilaton = nullptr;
};

double epsilon_contract(const ContractionExpression& expr, const TensorAssignment& data);

// Leibniz expansion of the outer tangential derivative over the factors,
// then contraction. Every differentiated factor draws on the corresponding
// first-jet data; a missing jet for a factor whose tensor is not identically
// zero is an evaluation error.
double divergence_eval(const ContractionExpression& expr, const TensorAssignment& data);

// --- closed-form supertrace densities -------------------------------------

// Interior index density a_{m,m} for even m (the Pfaffian-type curvature
// contraction with its universal prefactor). Odd m is an argument error: the
// density vanishes identically there and has no closed form of this shape.
double eval_interior_index_density(const CurvatureTensor& curv, int m);

// Boundary index density a_{m,m,0}: the k-sum of curvature/second-form
// transgression terms.
double eval_boundary_index_density(const BoundaryJet& bdry, int m);

// Interior supertrace density a_{m+1,m} for odd m: linear in the dilaton
// Hessian contracted into the curvature chain.
double eval_dilaton_interior_density(const DilatonJet& dilaton, const CurvatureTensor& curv, int m);

struct BoundaryDilatonDensities {
    double zeroth = 0.0;  // a_{m+1,m,0}: smearing-function coefficient
    double first = 0.0;   // a_{m+1,m,1}: normal-derivative coefficient
};

// Both boundary supertrace densities at order m+1. The zeroth one includes
// the divergence invariant (evaluated with divergence_eval) whenever its
// k-range 2k < m-3 is non-empty.
BoundaryDilatonDensities eval_dilaton_boundary_densities(const DilatonJet* dilaton,
                                                         const BoundaryJet& bdry, int m);

// --- universal coefficient table -------------------------------------------

// The closed-form constants multiplying each invariant in the order-(m+1)
// supertrace densities, exposed for direct inspection and cross-checks.
struct SupertraceCoefficients {
    int m = 0;
    double interior = 0.0;               // odd m only; 0 for even m
    std::vector<double> boundary_first;  // k-th transgression constant in a_{m+1,m,1}
    std::vector<double> boundary_hess;   // dilaton-Hessian constants in a_{m+1,m,0}
    std::vector<double> boundary_grad2;  // gradient-squared constants (all zero)
    std::vector<double> boundary_div;    // divergence-term constants; zero at 2k = m-3
};

SupertraceCoefficients universal_constants(int m);

// Theorem-level prefactor of the interior index density: 1/(pi^q 8^q q!)
// with q = m/2.
double interior_index_prefactor(int m);

// k-th prefactor of the boundary index density.
double boundary_index_prefactor(int m, int k);

// --- expression builders ----------------------------------------------------

// eps_J^I R_{i1 i2 j2 j1} ... chain over block positions [first, first+2*count)
void append_curvature_chain(ContractionExpression& expr, int first, int count);
// L_{a b} chain over block positions [first, first+count)
void append_second_form_chain(ContractionExpression& expr, int first, int count);

}  // namespace stlab
