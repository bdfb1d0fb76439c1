#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "supertrace/contraction.hpp"
#include "supertrace/geometry_models.hpp"
#include "supertrace/report.hpp"
#include "supertrace/suites.hpp"
#include "supertrace/tensor_data.hpp"

namespace {

using namespace stlab;

DilatonProfile parse_phi(const std::string& text) {
    // "c1=1,c2=0.3" -> cosine coefficients
    DilatonProfile phi;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos || item[0] != 'c')
            throw CLI::ValidationError("--phi expects ck=value entries, e.g. c1=1");
        const int k = std::stoi(item.substr(1, eq - 1));
        if (k < 1) throw CLI::ValidationError("--phi: cosine index must be >= 1");
        if (static_cast<int>(phi.cosine.size()) < k) phi.cosine.resize(k, 0.0);
        phi.cosine[k - 1] = std::stod(item.substr(eq + 1));
    }
    return phi;
}

int emit(const std::vector<VerificationReport>& reports, ReportFormat format,
         const std::string& out_path) {
    if (out_path.empty()) {
        emit_report(reports, format, std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open output path: " << out_path << "\n";
        return 3;
    }
    emit_report(reports, format, out);
    if (!out.good()) {
        std::cerr << "error: write failed: " << out_path << "\n";
        return 3;
    }
    return 0;
}

// densities of a tensor bundle loaded from JSON, reported as plain cases
std::vector<VerificationReport> density_report(const SuiteOptions& options) {
    std::vector<VerificationReport> reports;
    const TensorBundle bundle = load_tensor_bundle_file(*options.tensor_file);
    const int m = bundle.dim;
    auto push = [&](const std::string& id, double value) {
        reports.push_back(make_report("density", id, value, value, 0.0, TolerancePolicy::absolute,
                                      0.0, options.seed));
    };
    if (bundle.curvature && m % 2 == 0)
        push("interior_index", eval_interior_index_density(*bundle.curvature, m));
    if (bundle.curvature && bundle.dilaton && m % 2 == 1)
        push("dilaton_interior", eval_dilaton_interior_density(*bundle.dilaton, *bundle.curvature, m));
    if (bundle.boundary) {
        push("boundary_index", eval_boundary_index_density(*bundle.boundary, m));
        const auto bd = eval_dilaton_boundary_densities(
            bundle.dilaton ? &*bundle.dilaton : nullptr, *bundle.boundary, m);
        push("dilaton_boundary_zeroth", bd.zeroth);
        push("dilaton_boundary_first", bd.first);
    }
    return reports;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "supertrace-lab: verification suites for supertrace heat-kernel densities of the\n"
        "twisted de Rham complex with absolute boundary conditions"};

    std::string suite = "all";
    SuiteOptions options;
    std::string phi_text;
    std::string geometry;
    std::string tensors;
    std::string out_path;
    bool as_json = false, as_csv = false, as_text = false;
    bool timings = false;

    app.add_option("--suite", suite,
                   "suite to run: algebra, contraction, gauss-bonnet, heat-crosscheck, invariance, "
                   "spectral, all, density (density needs --tensors)")
        ->capture_default_str();
    app.add_option("--seed", options.seed,
                   "base RNG seed; default 0xD11A70 (a hex spelling of 'dilaton')")
        ->capture_default_str();
    app.add_option("--tolerance-scale", options.tolerance_scale,
                   "multiply every case tolerance by this factor")
        ->capture_default_str();
    app.add_option("--geometry", geometry, "extra gauss-bonnet case, e.g. sphere:m=4,r=1 or graph:A=1;2");
    app.add_option("--tensors", tensors, "JSON tensor bundle for the density command");
    app.add_option("--phi", phi_text, "dilaton cosine coefficients for spectral checks, e.g. c1=1,c2=0.3");
    app.add_option("--grid", options.spectral.grid, "interval grid cells")->capture_default_str();
    app.add_option("--tmin", options.spectral.tmin, "smallest fit time")->capture_default_str();
    app.add_option("--tmax", options.spectral.tmax, "largest fit time")->capture_default_str();
    app.add_option("--terms", options.spectral.terms, "fitted expansion terms")->capture_default_str();
    app.add_option("--points", options.spectral.points, "fit grid points")->capture_default_str();
    app.add_flag("--json", as_json, "emit JSON report (default)");
    app.add_flag("--csv", as_csv, "emit CSV report");
    app.add_flag("--text", as_text, "emit plain-text report");
    app.add_option("--out", out_path, "write the report to this path instead of stdout");
    app.add_flag("--timings", timings,
                 "include real per-case runtimes (breaks byte-stable output across runs)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!phi_text.empty()) options.phi = parse_phi(phi_text);
    if (!geometry.empty()) options.geometry_spec = geometry;
    if (!tensors.empty()) options.tensor_file = tensors;

    ReportFormat format = ReportFormat::json;
    if (as_csv) format = ReportFormat::csv;
    if (as_text) format = ReportFormat::text;

    std::vector<VerificationReport> reports;
    try {
        if (suite == "density") {
            if (!options.tensor_file) {
                std::cerr << "error: density requires --tensors FILE\n";
                return 2;
            }
            reports = density_report(options);
        } else {
            reports = run_suite(suite, options);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!timings)
        for (auto& r : reports) r.runtime_ms = 0.0;

    const int io_status = emit(reports, format, out_path);
    if (io_status != 0) return io_status;

    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}
