#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

namespace stlab {

// Desk-scale spectral verification on the unit interval: Witten Laplacians
// under absolute boundary conditions (0-forms Neumann, 1-forms Dirichlet),
// heat traces, small-t asymptotic fits, and the conformal/scalar variation
// identities.

// phi(x) = sum_k c_k cos(k pi x). Cosine series guarantee phi'(0) = phi'(1)
// = 0, the Neumann-dilaton hypothesis behind the constant supertrace.
struct DilatonProfile {
    std::vector<double> cosine;  // c_1, c_2, ...

    double value(double x) const;
    double d1(double x) const;
    double d2(double x) const;
};

enum class BoundaryCondition { neumann, dirichlet };

// Symmetric tridiagonal second-order discretization on cell centers
// x_j = (j + 1/2)/n; Neumann by mirrored ghost values, Dirichlet by
// anti-mirrored ones.
struct SturmLiouvilleProblem {
    int n = 0;
    double h = 0.0;
    BoundaryCondition bc = BoundaryCondition::neumann;
    std::vector<double> grid;  // cell centers
    std::vector<double> diag;
    std::vector<double> off;
};

SturmLiouvilleProblem build_interval_problem(const std::vector<double>& potential, BoundaryCondition bc);

// The 0-form (Neumann, V = phi'^2 - phi'') and 1-form (Dirichlet,
// V = phi'^2 + phi'') realizations on an n-cell grid, n >= 16.
std::pair<SturmLiouvilleProblem, SturmLiouvilleProblem> build_problems(const DilatonProfile& phi, int n);

// Lowest `count` eigenvalues (ascending), count <= n/4. O(h^2) per
// eigenvalue.
std::vector<double> eigenvalues(const SturmLiouvilleProblem& p, int count);

struct EigenPairs {
    std::vector<double> values;
    Eigen::MatrixXd vectors;  // n x count, unit Euclidean norm columns
};

EigenPairs eigenpairs(const SturmLiouvilleProblem& p, int count);

// quadrature weights <f psi_k, psi_k> for a smeared trace
std::vector<double> smearing_weights(const EigenPairs& pairs, const std::vector<double>& f_samples);

struct HeatTraceValue {
    double value = 0.0;
    double tail_bound = 0.0;  // bound on the truncated modes
};

HeatTraceValue heat_trace(const std::vector<double>& eigs, double t, int total_modes);
HeatTraceValue smeared_heat_trace(const std::vector<double>& eigs, const std::vector<double>& weights,
                                  double t, int total_modes);

// Jacobi-theta value of the free Neumann heat trace (the analytic oracle):
// sum_{k>=0} exp(-pi^2 k^2 t), evaluated through the modular (Poisson) form
// for small t.
double free_neumann_trace_oracle(double t);

std::vector<double> geometric_grid(double tmin, double tmax, int points);

struct FitResult {
    std::vector<double> coefficients;   // of t^{(n-1)/2}, n = 0..terms-1
    std::vector<double> uncertainties;  // estimated 1-sigma per coefficient
    double condition = 0.0;             // of the design matrix
    bool ill_conditioned = false;       // condition > 1e12
};

// Least-squares fit of trace samples in half-integer powers of t (interval
// normalization m = 1: exponents (n-1)/2).
FitResult fit_asymptotics(const std::vector<double>& ts, const std::vector<double>& values, int terms);

// Smooth smearing function with the derivatives the engine-side coefficients
// need.
struct SmearingFunction {
    std::function<double(double)> f;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

struct SpectralConfig {
    int grid = 4000;
    double tmin = 4e-3;
    double tmax = 8e-2;
    int points = 12;
    int terms = 4;
    int eig_count = 300;
};

// supertrace of the heat kernel: Tr exp(-t D0) - Tr exp(-t D1)
double supertrace_heat(const DilatonProfile& phi, int n, double t, int eig_count = 300);

struct VariationReport {
    double lhs = 0.0;        // finite-difference slope of the fitted coefficient
    double rhs = 0.0;        // closed-form coefficient assembly
    double rel_err = 0.0;
    double stability = 0.0;  // relative slope change when the step is halved
};

// d/d eps of the fitted order-2 coefficient of exp(2 eps f)-weighted free
// Neumann problems against (1-2) a_2(f, D0). Richardson extrapolation over
// grid and 2x grid removes the lattice O(h^2) term.
VariationReport conformal_variation_check(const SmearingFunction& f, const SpectralConfig& cfg,
                                          double eps = 1e-3);

// d/d rho of the fitted order-4 coefficient of D0 - rho f against
// a_2(f, D0).
VariationReport potential_variation_check(const SmearingFunction& f, const SpectralConfig& cfg,
                                          double rho = 1e-3);

// composite Simpson integral on [0, 1]
double integrate_unit_interval(const std::function<double(double)>& f, int panels = 4096);

}  // namespace stlab
