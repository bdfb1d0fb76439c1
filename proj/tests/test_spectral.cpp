#include <doctest.h>

#include <cmath>

#include "supertrace/spectral.hpp"

using namespace stlab;

TEST_CASE("interval problems for a dilaton profile") {
    const DilatonProfile phi{{1.0}};  // cos(pi x)
    auto [p0, p1] = build_problems(phi, 64);
    CHECK(p0.bc == BoundaryCondition::neumann);
    CHECK(p1.bc == BoundaryCondition::dirichlet);
    // V0 = pi^2 sin^2(pi x) + pi^2 cos(pi x), sampled exactly at cell centers
    const double x0 = p0.grid[10];
    const double expected = M_PI * M_PI * std::sin(M_PI * x0) * std::sin(M_PI * x0) +
                            M_PI * M_PI * std::cos(M_PI * x0);
    CHECK(p0.diag[10] - 2.0 * 64.0 * 64.0 == doctest::Approx(expected).epsilon(1e-13));
    CHECK_THROWS_AS(build_problems(phi, 8), std::invalid_argument);
}

TEST_CASE("free spectra against the analytic spectrum") {
    const DilatonProfile free_phi{{}};
    auto [p0, p1] = build_problems(free_phi, 4000);
    const auto w0 = eigenvalues(p0, 50);
    const auto w1 = eigenvalues(p1, 50);
    CHECK(std::abs(w0[0]) < 1e-7);
    CHECK(std::abs(w0[1] - M_PI * M_PI) / (M_PI * M_PI) < 1e-5);
    CHECK(std::abs(w1[0] - M_PI * M_PI) / (M_PI * M_PI) < 1e-5);
    for (std::size_t i = 1; i < w0.size(); ++i) CHECK(w0[i] >= w0[i - 1]);
    CHECK_THROWS_AS(eigenvalues(p0, 2000), std::invalid_argument);
}

TEST_CASE("heat trace and the theta oracle") {
    std::vector<double> analytic(400);
    for (int k = 0; k < 400; ++k) analytic[k] = M_PI * M_PI * k * k;
    for (double t : {0.05, 0.1, 0.3, 1.0}) {
        CHECK(heat_trace(analytic, t, 400).value ==
              doctest::Approx(free_neumann_trace_oracle(t)).epsilon(1e-12));
    }
    // the modular form of the oracle agrees with direct summation
    CHECK(free_neumann_trace_oracle(0.02) ==
          doctest::Approx(0.5 + 0.5 / std::sqrt(M_PI * 0.02)).epsilon(1e-10));
    CHECK(heat_trace(analytic, 40.0, 400).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(heat_trace(analytic, 0.0, 400), std::invalid_argument);
    CHECK_THROWS_AS(heat_trace(analytic, -1.0, 400), std::invalid_argument);
}

TEST_CASE("heat trace truncation bound") {
    std::vector<double> eigs{0.0, 1.0, 2.0};
    const HeatTraceValue v = heat_trace(eigs, 1.0, 10);
    CHECK(v.tail_bound == doctest::Approx(7.0 * std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("asymptotic fit recovers the free coefficients") {
    const DilatonProfile free_phi{{}};
    auto [p0, p1] = build_problems(free_phi, 4000);
    const auto w0 = eigenvalues(p0, 300);
    const auto w1 = eigenvalues(p1, 300);

    const auto ts = geometric_grid(4e-3, 8e-2, 12);
    std::vector<double> vals(ts.size()), svals(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        vals[i] = heat_trace(w0, ts[i], 4000).value;
        svals[i] = vals[i] - heat_trace(w1, ts[i], 4000).value;
    }
    const FitResult fit = fit_asymptotics(ts, vals, 4);
    CHECK(std::abs(fit.coefficients[0] - 0.5 / std::sqrt(M_PI)) < 1e-4);
    CHECK(std::abs(fit.coefficients[1] - 0.5) < 1e-3);
    CHECK(fit.condition > 1.0);
    CHECK(!fit.ill_conditioned);
    CHECK(fit.uncertainties.size() == 4);

    const FitResult sfit = fit_asymptotics(ts, svals, 4);
    CHECK(std::abs(sfit.coefficients[0]) < 1e-4);
    CHECK(std::abs(sfit.coefficients[1] - 1.0) < 1e-3);

    CHECK_THROWS_AS(fit_asymptotics(ts, vals, 7), std::invalid_argument);
}

TEST_CASE("supertrace equals the interval Euler characteristic") {
    for (double t : {0.05, 0.2, 0.5}) {
        CHECK(std::abs(supertrace_heat(DilatonProfile{{}}, 4000, t) - 1.0) < 1e-6);
        CHECK(std::abs(supertrace_heat(DilatonProfile{{1.0}}, 4000, t) - 1.0) < 1e-6);
    }
}

TEST_CASE("smeared weights behave like averages") {
    const DilatonProfile free_phi{{}};
    auto [p0, p1] = build_problems(free_phi, 256);
    const EigenPairs pairs = eigenpairs(p0, 10);
    std::vector<double> ones(256, 1.0);
    for (double w : smearing_weights(pairs, ones)) CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("geometric grid endpoints") {
    const auto ts = geometric_grid(0.01, 0.16, 5);
    CHECK(ts.front() == 0.01);
    CHECK(ts.back() == 0.16);
    CHECK(ts[1] / ts[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 4), std::invalid_argument);
}

TEST_CASE("variation identities" * doctest::timeout(300)) {
    const SmearingFunction f{[](double x) { return std::sin(0.5 * M_PI * x); },
                             [](double x) { return 0.5 * M_PI * std::cos(0.5 * M_PI * x); },
                             [](double x) { return -0.25 * M_PI * M_PI * std::sin(0.5 * M_PI * x); }};
    SpectralConfig cfg;
    cfg.grid = 2000;  // unit-test scale; the acceptance suite runs the full grid
    SUBCASE("conformal") {
        const VariationReport report = conformal_variation_check(f, cfg);
        CHECK(report.rhs == doctest::Approx(-(0.5 * M_PI) / (4.0 * std::sqrt(M_PI))).epsilon(1e-12));
        CHECK(report.rel_err < 2e-2);
    }
    SUBCASE("potential") {
        const VariationReport report = potential_variation_check(f, cfg);
        CHECK(report.rhs == doctest::Approx((0.5 * M_PI) / (4.0 * std::sqrt(M_PI))).epsilon(1e-12));
        CHECK(report.rel_err < 2e-2);
    }
}

TEST_CASE("constant smearing functions make both variation sides vanish") {
    SpectralConfig cfg;
    cfg.grid = 1000;
    cfg.eig_count = 200;
    const SmearingFunction one{[](double) { return 1.0; }, [](double) { return 0.0; },
                               [](double) { return 0.0; }};
    const VariationReport conf = conformal_variation_check(one, cfg);
    CHECK(conf.rhs == 0.0);
    CHECK(std::abs(conf.lhs) < 1e-3);  // fit noise at the coarse unit-test grid
    const VariationReport pot = potential_variation_check(one, cfg);
    CHECK(pot.rhs == 0.0);
    CHECK(std::abs(pot.lhs) < 1e-3);
}

TEST_CASE("constant potential shifts the spectrum exactly") {
    // D - rho: every discrete eigenvalue moves by exactly -rho
    const DilatonProfile free_phi{{}};
    auto [p0, p1] = build_problems(free_phi, 512);
    const auto base = eigenvalues(p0, 20);
    const double rho = 1e-3;
    std::vector<double> shifted_potential(512, -rho);
    const auto shifted = eigenvalues(build_interval_problem(shifted_potential,
                                                            BoundaryCondition::neumann),
                                     20);
    for (int k = 0; k < 20; ++k) CHECK(base[k] - shifted[k] == doctest::Approx(rho).epsilon(1e-9));
}

TEST_CASE("simpson quadrature") {
    CHECK(integrate_unit_interval([](double x) { return x * x; }) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate_unit_interval([](double x) { return std::sin(M_PI * x); }) ==
          doctest::Approx(2.0 / M_PI).epsilon(1e-10));
}
