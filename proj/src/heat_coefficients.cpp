#include "supertrace/heat_coefficients.hpp"

#include <cmath>

#include "supertrace/contraction.hpp"

namespace stlab {

namespace {

double trace_of(const ExteriorOperator& op, TraceMode mode) {
    return mode == TraceMode::super ? supertrace(op) : op.trace();
}

CurvatureTensor scaled_two_sphere(double sectional) {
    std::vector<double> r(16, 0.0);
    // R_{ijkl} = c (d_il d_jk - d_ik d_jl) in dimension 2
    auto at = [&](int i, int j, int k, int l) -> double& {
        return r[((static_cast<std::size_t>(i - 1) * 2 + (j - 1)) * 2 + (k - 1)) * 2 + (l - 1)];
    };
    at(1, 2, 2, 1) = sectional;
    at(2, 1, 1, 2) = sectional;
    at(1, 2, 1, 2) = -sectional;
    at(2, 1, 2, 1) = -sectional;
    return CurvatureTensor(2, std::move(r));
}

}  // namespace

ExteriorOperator curvature_operator(const CurvatureTensor& curv, int i, int j) {
    const int m = curv.dim();
    ExteriorOperator op = ExteriorOperator::zero(m);
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
            const double r = curv(i, j, k, l);
            if (r != 0.0) op += r * (wedge_op(l, m) * interior_op(k, m));
        }
    return op;
}

LaplaceTypeStructure witten_structure(const CurvatureTensor& curv, const DilatonJet& dilaton,
                                      const BoundaryJet* bdry) {
    const int m = curv.dim();
    if (dilaton.dim() != m) throw std::invalid_argument("witten_structure: dimension mismatch");

    LaplaceTypeStructure st;
    st.manifold_dim = m;
    st.curvature_op.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) st.curvature_op.push_back(curvature_operator(curv, i, j));

    ExteriorOperator endo = ExteriorOperator::zero(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const ExteriorOperator& om = st.curvature_op[(i - 1) * m + (j - 1)];
            endo += -0.5 * (clifford_op(i, m) * clifford_op(j, m) * om);
        }
    endo += -dilaton.grad_square() * ExteriorOperator::identity(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const double h = dilaton.hess(j, i);
            if (h != 0.0) {
                const ExteriorOperator ei = wedge_op(i, m), ij = interior_op(j, m);
                endo += -h * (ei * ij - ij * ei);
            }
        }
    st.endo = std::move(endo);

    st.scalar_curvature = curv.scalar_curvature();
    if (bdry) {
        if (bdry->dim() != m) throw std::invalid_argument("witten_structure: boundary dimension mismatch");
        st.normal_sectional = curv.normal_sectional_sum();
        st.second_form_trace = bdry->trace();
        st.second_form_square = bdry->square_norm();
        st.second_form_trace_sq = bdry->trace() * bdry->trace();
    }
    if (curv.has_jets()) st.endo_normal_jet = witten_endo_normal_jet(curv);
    return st;
}

ExteriorOperator witten_endo_normal_jet(const CurvatureTensor& curv) {
    const int m = curv.dim();
    if (!curv.has_jets()) throw std::runtime_error("witten_endo_normal_jet: curvature jets required");
    ExteriorOperator out = ExteriorOperator::zero(m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            ExteriorOperator om = ExteriorOperator::zero(m);
            bool nonzero = false;
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l) {
                    const double r = curv.jet(i, j, k, l, m);
                    if (r != 0.0) {
                        om += r * (wedge_op(l, m) * interior_op(k, m));
                        nonzero = true;
                    }
                }
            if (nonzero) out += -0.5 * (clifford_op(i, m) * clifford_op(j, m) * om);
        }
    return out;
}

BoundaryOperators absolute_boundary(const BoundaryJet& bdry) {
    const int m = bdry.dim();
    const std::uint32_t n = 1u << m;
    const std::uint32_t normal_bit = 1u << (m - 1);

    Eigen::MatrixXd chi = Eigen::MatrixXd::Zero(n, n);
    for (std::uint32_t mask = 0; mask < n; ++mask)
        chi(mask, mask) = (mask & normal_bit) ? -1.0 : 1.0;

    ExteriorOperator robin = ExteriorOperator::zero(m);
    for (int a = 1; a < m; ++a)
        for (int b = 1; b < m; ++b) {
            const double lab = bdry.L(a, b);
            if (lab != 0.0) robin += -lab * (wedge_op(b, m) * interior_op(a, m));
        }
    // S vanishes on the normal part
    for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c)
            if ((r & normal_bit) || (c & normal_bit)) robin.matrix()(r, c) = 0.0;

    BoundaryOperators bo;
    bo.chi = ExteriorOperator(m, std::move(chi));
    bo.robin = std::move(robin);
    for (int a = 1; a < m; ++a) {
        ExteriorOperator jet = ExteriorOperator::zero(m);
        for (int b = 1; b < m; ++b) {
            const double lab = bdry.L(a, b);
            if (lab != 0.0)
                jet += 2.0 * lab *
                       (wedge_op(b, m) * interior_op(m, m) + wedge_op(m, m) * interior_op(b, m));
        }
        bo.chi_jets.push_back(std::move(jet));
    }
    return bo;
}

LaplaceTypeStructure scalar_structure(int manifold_dim, double endo_value) {
    LaplaceTypeStructure st;
    st.manifold_dim = manifold_dim;
    st.endo = ExteriorOperator(0, Eigen::MatrixXd::Constant(1, 1, endo_value));
    return st;
}

BoundaryOperators scalar_robin(double robin_value) {
    BoundaryOperators bo;
    bo.chi = ExteriorOperator::identity(0);
    bo.robin = ExteriorOperator(0, Eigen::MatrixXd::Constant(1, 1, robin_value));
    return bo;
}

HeatDensity a_n_density(int n, const LaplaceTypeStructure& st, const BoundaryOperators* bo,
                        TraceMode mode) {
    const int m = st.manifold_dim;
    const ExteriorOperator id = ExteriorOperator::identity(st.endo.dim());
    const double vol_pref = std::pow(4.0 * M_PI, -0.5 * m);
    const double bdy_pref = std::pow(4.0 * M_PI, -0.5 * (m - 1));

    HeatDensity out;
    switch (n) {
        case 0:
            out.interior = vol_pref * trace_of(id, mode);
            return out;
        case 1: {
            if (!bo) throw std::invalid_argument("a_n_density: boundary operators required for n = 1");
            out.boundary_f = bdy_pref * 0.25 * trace_of(bo->chi, mode);
            return out;
        }
        case 2: {
            out.interior = vol_pref / 6.0 *
                           trace_of(6.0 * st.endo + st.scalar_curvature * id, mode);
            if (bo) {
                out.boundary_f = vol_pref / 6.0 *
                                 trace_of(2.0 * st.second_form_trace * id + 12.0 * bo->robin, mode);
                out.boundary_fn = vol_pref / 6.0 * 3.0 * trace_of(bo->chi, mode);
            }
            return out;
        }
        case 3: {
            if (!bo) throw std::invalid_argument("a_n_density: boundary operators required for n = 3");
            const ExteriorOperator pi_plus = bo->projector_plus();
            const ExteriorOperator pi_minus = bo->projector_minus();
            ExteriorOperator chi_jet_sq = ExteriorOperator::zero(st.endo.dim());
            for (const auto& jet : bo->chi_jets) chi_jet_sq += jet * jet;

            ExteriorOperator f_term =
                96.0 * (bo->chi * st.endo) + 16.0 * st.scalar_curvature * bo->chi +
                8.0 * st.normal_sectional * bo->chi +
                st.second_form_trace_sq * (13.0 * pi_plus - 7.0 * pi_minus) +
                st.second_form_square * (2.0 * pi_plus + 10.0 * pi_minus) +
                96.0 * st.second_form_trace * bo->robin + 192.0 * (bo->robin * bo->robin) -
                12.0 * chi_jet_sq;
            ExteriorOperator fn_term =
                st.second_form_trace * (6.0 * pi_plus + 30.0 * pi_minus) + 96.0 * bo->robin;

            out.boundary_f = bdy_pref / 384.0 * trace_of(f_term, mode);
            out.boundary_fn = bdy_pref / 384.0 * trace_of(fn_term, mode);
            out.boundary_fnn = bdy_pref / 384.0 * 24.0 * trace_of(bo->chi, mode);
            return out;
        }
        default:
            throw std::invalid_argument("a_n_density: only n in {0,1,2,3} is supported");
    }
}

double interval_coefficient(int n, const LaplaceTypeStructure& st, const BoundaryOperators& bo,
                            double integral_f, const std::array<double, 3>& jets_left,
                            const std::array<double, 3>& jets_right, TraceMode mode) {
    const HeatDensity d = a_n_density(n, st, &bo, mode);
    double value = d.interior * integral_f;
    for (const auto& jets : {jets_left, jets_right})
        value += d.boundary_f * jets[0] + d.boundary_fn * jets[1] + d.boundary_fnn * jets[2];
    return value;
}

CrosscheckReport crosscheck_theorem12(int m, int trials, Rng& rng) {
    if (m != 1 && m != 2)
        throw std::invalid_argument("crosscheck_theorem12: closed forms available for m in {1, 2}");
    CrosscheckReport report;
    report.m = m;
    report.trials = trials;

    for (int trial = 0; trial < trials; ++trial) {
        Rng trial_rng = rng.fork(trial);
        if (m == 1) {
            const double g1 = trial_rng.uniform(-2.0, 2.0);
            const double h11 = trial_rng.uniform(-2.0, 2.0);
            const DilatonJet dj(1, {g1}, {h11});
            const CurvatureTensor flat = CurvatureTensor::zero(1);
            const BoundaryJet bdry = BoundaryJet::flat(1);

            const LaplaceTypeStructure st = witten_structure(flat, dj, &bdry);
            const BoundaryOperators bo = absolute_boundary(bdry);
            const HeatDensity engine = a_n_density(2, st, &bo, TraceMode::super);

            const double closed_interior = eval_dilaton_interior_density(dj, flat, 1);
            const BoundaryDilatonDensities closed = eval_dilaton_boundary_densities(&dj, bdry, 1);

            report.max_err_interior =
                std::max(report.max_err_interior, std::abs(engine.interior - closed_interior));
            report.max_err_f = std::max(report.max_err_f, std::abs(engine.boundary_f - closed.zeroth));
            report.max_err_fn = std::max(report.max_err_fn, std::abs(engine.boundary_fn - closed.first));
        } else {
            const double sectional = trial_rng.uniform(-2.0, 2.0);
            const double l11 = trial_rng.uniform(-2.0, 2.0);
            const double g1 = trial_rng.uniform(-2.0, 2.0);
            const double h11 = trial_rng.uniform(-2.0, 2.0);
            // normal-direction dilaton jets, varied again below
            double g2 = trial_rng.uniform(-2.0, 2.0);
            double h12 = trial_rng.uniform(-2.0, 2.0);
            double h22 = trial_rng.uniform(-2.0, 2.0);

            const CurvatureTensor curv = scaled_two_sphere(sectional);
            const BoundaryJet bdry(2, {l11}, std::nullopt, curv);

            auto engine_density = [&](double gg2, double hh12, double hh22) {
                const DilatonJet dj(2, {g1, gg2}, {h11, hh12, hh12, hh22});
                const LaplaceTypeStructure st = witten_structure(curv, dj, &bdry);
                const BoundaryOperators bo = absolute_boundary(bdry);
                return a_n_density(3, st, &bo, TraceMode::super);
            };
            const HeatDensity engine = engine_density(g2, h12, h22);

            const DilatonJet dj(2, {g1, g2}, {h11, h12, h12, h22});
            const BoundaryDilatonDensities closed = eval_dilaton_boundary_densities(&dj, bdry, 2);

            report.max_err_f = std::max(report.max_err_f, std::abs(engine.boundary_f - closed.zeroth));
            report.max_err_fn = std::max(report.max_err_fn, std::abs(engine.boundary_fn - closed.first));

            // exact cancellation of every phi_{;m*} contribution
            const HeatDensity varied = engine_density(trial_rng.uniform(-2.0, 2.0),
                                                      trial_rng.uniform(-2.0, 2.0),
                                                      trial_rng.uniform(-2.0, 2.0));
            report.max_normal_dependence =
                std::max(report.max_normal_dependence, std::abs(varied.boundary_f - engine.boundary_f));
            report.max_normal_dependence =
                std::max(report.max_normal_dependence, std::abs(varied.boundary_fn - engine.boundary_fn));

            // interior order-2 supertrace equals the index density
            const DilatonJet dj_again(2, {g1, g2}, {h11, h12, h12, h22});
            const LaplaceTypeStructure st = witten_structure(curv, dj_again, &bdry);
            const BoundaryOperators bo = absolute_boundary(bdry);
            const HeatDensity a2 = a_n_density(2, st, &bo, TraceMode::super);
            report.max_err_index = std::max(
                report.max_err_index, std::abs(a2.interior - eval_interior_index_density(curv, 2)));
        }
    }
    return report;
}

}  // namespace stlab
