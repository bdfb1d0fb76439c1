#include "supertrace/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <lapacke.h>

#include "supertrace/heat_coefficients.hpp"

namespace stlab {

double DilatonProfile::value(double x) const {
    double v = 0.0;
    for (std::size_t k = 0; k < cosine.size(); ++k) v += cosine[k] * std::cos((k + 1) * M_PI * x);
    return v;
}

double DilatonProfile::d1(double x) const {
    double v = 0.0;
    for (std::size_t k = 0; k < cosine.size(); ++k) {
        const double w = (k + 1) * M_PI;
        v -= cosine[k] * w * std::sin(w * x);
    }
    return v;
}

double DilatonProfile::d2(double x) const {
    double v = 0.0;
    for (std::size_t k = 0; k < cosine.size(); ++k) {
        const double w = (k + 1) * M_PI;
        v -= cosine[k] * w * w * std::cos(w * x);
    }
    return v;
}

SturmLiouvilleProblem build_interval_problem(const std::vector<double>& potential, BoundaryCondition bc) {
    const int n = static_cast<int>(potential.size());
    if (n < 16) throw std::invalid_argument("build_interval_problem: need at least 16 cells");
    SturmLiouvilleProblem p;
    p.n = n;
    p.h = 1.0 / n;
    p.bc = bc;
    const double inv_h2 = 1.0 / (p.h * p.h);
    p.grid.resize(n);
    p.diag.resize(n);
    p.off.assign(n - 1, -inv_h2);
    for (int j = 0; j < n; ++j) {
        p.grid[j] = (j + 0.5) * p.h;
        p.diag[j] = 2.0 * inv_h2 + potential[j];
    }
    // mirrored ghost cell: u_{-1} = +u_0 (Neumann) or -u_0 (Dirichlet)
    const double edge = (bc == BoundaryCondition::neumann) ? -inv_h2 : inv_h2;
    p.diag[0] += edge;
    p.diag[n - 1] += edge;
    return p;
}

std::pair<SturmLiouvilleProblem, SturmLiouvilleProblem> build_problems(const DilatonProfile& phi, int n) {
    std::vector<double> v0(n), v1(n);
    for (int j = 0; j < n; ++j) {
        const double x = (j + 0.5) / n;
        const double p1 = phi.d1(x), p2 = phi.d2(x);
        v0[j] = p1 * p1 - p2;
        v1[j] = p1 * p1 + p2;
    }
    return {build_interval_problem(v0, BoundaryCondition::neumann),
            build_interval_problem(v1, BoundaryCondition::dirichlet)};
}

namespace {

void run_stevr(const SturmLiouvilleProblem& p, int count, bool want_vectors,
               std::vector<double>& values, Eigen::MatrixXd* vectors) {
    if (count < 1 || count > p.n / 4)
        throw std::invalid_argument("eigenvalues: count must be in [1, n/4]");
    std::vector<double> d = p.diag, e = p.off;
    values.assign(count, 0.0);
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(count));
    lapack_int found = 0;
    Eigen::MatrixXd z;
    if (want_vectors) z.resize(p.n, count);
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', p.n, d.data(), e.data(), 0.0, 0.0, 1, count,
        0.0, &found, values.data(), want_vectors ? z.data() : nullptr, want_vectors ? p.n : 1,
        isuppz.data());
    if (info != 0)
        throw std::runtime_error("eigenvalues: tridiagonal solver failed at index " + std::to_string(info));
    if (found < count) throw std::runtime_error("eigenvalues: solver returned fewer values than requested");
    if (want_vectors && vectors) *vectors = std::move(z);
}

}  // namespace

std::vector<double> eigenvalues(const SturmLiouvilleProblem& p, int count) {
    std::vector<double> values;
    run_stevr(p, count, false, values, nullptr);
    return values;
}

EigenPairs eigenpairs(const SturmLiouvilleProblem& p, int count) {
    EigenPairs pairs;
    run_stevr(p, count, true, pairs.values, &pairs.vectors);
    return pairs;
}

std::vector<double> smearing_weights(const EigenPairs& pairs, const std::vector<double>& f_samples) {
    if (static_cast<int>(f_samples.size()) != pairs.vectors.rows())
        throw std::invalid_argument("smearing_weights: sample count mismatch");
    std::vector<double> w(pairs.values.size(), 0.0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < pairs.vectors.rows(); ++j)
            acc += f_samples[j] * pairs.vectors(j, k) * pairs.vectors(j, k);
        w[k] = acc;  // columns are unit vectors, so the h weights cancel
    }
    return w;
}

HeatTraceValue heat_trace(const std::vector<double>& eigs, double t, int total_modes) {
    if (t <= 0.0) throw std::invalid_argument("heat_trace: t must be positive");
    HeatTraceValue out;
    for (double lam : eigs) {
        const double term = std::exp(-t * lam);
        out.value += term;
        if (term < 1e-16 * std::max(1.0, out.value)) break;
    }
    if (!eigs.empty() && total_modes > static_cast<int>(eigs.size()))
        out.tail_bound = (total_modes - static_cast<int>(eigs.size())) * std::exp(-t * eigs.back());
    return out;
}

HeatTraceValue smeared_heat_trace(const std::vector<double>& eigs, const std::vector<double>& weights,
                                  double t, int total_modes) {
    if (t <= 0.0) throw std::invalid_argument("smeared_heat_trace: t must be positive");
    if (eigs.size() != weights.size())
        throw std::invalid_argument("smeared_heat_trace: weight count mismatch");
    HeatTraceValue out;
    for (std::size_t k = 0; k < eigs.size(); ++k) out.value += weights[k] * std::exp(-t * eigs[k]);
    if (!eigs.empty() && total_modes > static_cast<int>(eigs.size()))
        out.tail_bound = (total_modes - static_cast<int>(eigs.size())) * std::exp(-t * eigs.back());
    return out;
}

double free_neumann_trace_oracle(double t) {
    if (t <= 0.0) throw std::invalid_argument("free_neumann_trace_oracle: t must be positive");
    // theta(t) = sum_{k in Z} exp(-pi^2 k^2 t) = theta(1/(pi^2 t)) / sqrt(pi t);
    // Neumann trace = (1 + theta)/2. Use whichever side converges fastest.
    auto direct = [](double a) {  // sum_{k in Z} exp(-a k^2)
        double s = 1.0;
        for (int k = 1;; ++k) {
            const double term = std::exp(-a * k * k);
            s += 2.0 * term;
            if (term < 1e-18) break;
        }
        return s;
    };
    const double a = M_PI * M_PI * t;
    double theta;
    if (a >= 1.0)
        theta = direct(a);
    else
        theta = direct(M_PI * M_PI / a) / std::sqrt(a / M_PI);
    return 0.5 * (1.0 + theta);
}

std::vector<double> geometric_grid(double tmin, double tmax, int points) {
    if (tmin <= 0.0 || tmax <= tmin || points < 2)
        throw std::invalid_argument("geometric_grid: need 0 < tmin < tmax and >= 2 points");
    std::vector<double> ts(points);
    const double ratio = std::pow(tmax / tmin, 1.0 / (points - 1));
    double t = tmin;
    for (int i = 0; i < points; ++i, t *= ratio) ts[i] = t;
    ts.back() = tmax;
    return ts;
}

FitResult fit_asymptotics(const std::vector<double>& ts, const std::vector<double>& values, int terms) {
    const int npts = static_cast<int>(ts.size());
    if (static_cast<int>(values.size()) != npts)
        throw std::invalid_argument("fit_asymptotics: sample count mismatch");
    if (npts < 2 * terms)
        throw std::invalid_argument("fit_asymptotics: need at least 2x as many points as terms");

    Eigen::MatrixXd design(npts, terms);
    Eigen::VectorXd rhs(npts);
    for (int i = 0; i < npts; ++i) {
        rhs(i) = values[i];
        for (int n = 0; n < terms; ++n) design(i, n) = std::pow(ts[i], 0.5 * (n - 1));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd coef = svd.solve(rhs);
    const auto& sv = svd.singularValues();

    FitResult fit;
    fit.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
    fit.ill_conditioned = !(fit.condition < 1e12);
    fit.coefficients.assign(coef.data(), coef.data() + terms);

    const double rss = (design * coef - rhs).squaredNorm();
    const double sigma2 = (npts > terms) ? rss / (npts - terms) : 0.0;
    fit.uncertainties.resize(terms);
    for (int i = 0; i < terms; ++i) {
        double cov = 0.0;
        for (int j = 0; j < terms; ++j) {
            const double s = sv(j);
            if (s > 0.0) cov += svd.matrixV()(i, j) * svd.matrixV()(i, j) / (s * s);
        }
        fit.uncertainties[i] = std::sqrt(sigma2 * cov);
    }
    return fit;
}

double supertrace_heat(const DilatonProfile& phi, int n, double t, int eig_count) {
    auto [p0, p1] = build_problems(phi, n);
    const auto w0 = eigenvalues(p0, eig_count);
    const auto w1 = eigenvalues(p1, eig_count);
    return heat_trace(w0, t, n).value - heat_trace(w1, t, n).value;
}

double integrate_unit_interval(const std::function<double(double)>& f, int panels) {
    double acc = f(0.0) + f(1.0);
    const double h = 1.0 / panels;
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return acc * h / 3.0;
}

namespace {

// variation checks need their own denser grid and longer expansion: the
// differenced series carries terms through t^3
struct VariationFitConfig {
    double tmin = 2e-3;
    double tmax = 5e-2;
    int points = 20;
    int terms = 8;
};

double fitted_coefficient(const std::vector<double>& eigs, int total_modes,
                          const VariationFitConfig& vf, int index) {
    const auto ts = geometric_grid(vf.tmin, vf.tmax, vf.points);
    std::vector<double> vals(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) vals[i] = heat_trace(eigs, ts[i], total_modes).value;
    return fit_asymptotics(ts, vals, vf.terms).coefficients[index];
}

// a_2(f, D0) for the free Neumann scalar Laplacian on [0, 1]
double scalar_a2(const SmearingFunction& f) {
    const LaplaceTypeStructure st = scalar_structure(1);
    const BoundaryOperators bo = scalar_robin(0.0);
    const double integral = integrate_unit_interval(f.f);
    return interval_coefficient(2, st, bo, integral, {f.f(0.0), f.d1(0.0), f.d2(0.0)},
                                {f.f(1.0), -f.d1(1.0), f.d2(1.0)}, TraceMode::plain);
}

}  // namespace

VariationReport conformal_variation_check(const SmearingFunction& f, const SpectralConfig& cfg,
                                          double eps) {
    const VariationFitConfig vf;
    auto slope_at = [&](int n, double step) {
        auto coefficient = [&](double signed_eps) {
            const SturmLiouvilleProblem base =
                build_interval_problem(std::vector<double>(n, 0.0), BoundaryCondition::neumann);
            SturmLiouvilleProblem scaled = base;
            std::vector<double> s(n);
            for (int j = 0; j < n; ++j) s[j] = std::exp(-signed_eps * f.f(base.grid[j]));
            for (int j = 0; j < n; ++j) scaled.diag[j] = base.diag[j] * s[j] * s[j];
            for (int j = 0; j + 1 < n; ++j) scaled.off[j] = base.off[j] * s[j] * s[j + 1];
            return fitted_coefficient(eigenvalues(scaled, cfg.eig_count), n, vf, 2);
        };
        return (coefficient(step) - coefficient(-step)) / (2.0 * step);
    };
    // Richardson in the grid spacing removes the lattice h^2 contribution
    auto richardson = [&](double step) {
        return (4.0 * slope_at(2 * cfg.grid, step) - slope_at(cfg.grid, step)) / 3.0;
    };

    VariationReport report;
    report.lhs = richardson(eps);
    report.rhs = (1.0 - 2.0) * scalar_a2(f);
    report.rel_err = std::abs(report.lhs - report.rhs) /
                     std::max(std::abs(report.rhs), 1e-12);
    report.stability = std::abs(richardson(0.5 * eps) - report.lhs) /
                       std::max(std::abs(report.rhs), 1e-12);
    return report;
}

VariationReport potential_variation_check(const SmearingFunction& f, const SpectralConfig& cfg,
                                          double rho) {
    const VariationFitConfig vf;
    auto slope_at = [&](int n, double step) {
        auto coefficient = [&](double signed_rho) {
            std::vector<double> v(n);
            for (int j = 0; j < n; ++j) v[j] = -signed_rho * f.f((j + 0.5) / n);
            const SturmLiouvilleProblem p = build_interval_problem(v, BoundaryCondition::neumann);
            return fitted_coefficient(eigenvalues(p, cfg.eig_count), n, vf, 4);
        };
        return (coefficient(step) - coefficient(-step)) / (2.0 * step);
    };

    VariationReport report;
    report.lhs = slope_at(cfg.grid, rho);
    report.rhs = scalar_a2(f);
    report.rel_err = std::abs(report.lhs - report.rhs) / std::max(std::abs(report.rhs), 1e-12);
    report.stability = std::abs(slope_at(cfg.grid, 0.5 * rho) - report.lhs) /
                       std::max(std::abs(report.rhs), 1e-12);
    return report;
}

}  // namespace stlab
