#include "supertrace/geometry_models.hpp"

#include <cmath>
#include <sstream>

#include "supertrace/contraction.hpp"
#include "supertrace/math_util.hpp"

namespace stlab {

namespace {

std::size_t idx4(int m, int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i - 1) * m + (j - 1)) * m + (k - 1)) * m + (l - 1);
}

std::size_t idx5(int m, int i, int j, int k, int l, int n) {
    return idx4(m, i, j, k, l) * m + (n - 1);
}

// write v into R_{ijkl;n} together with all algebraically forced copies
void set_jet_symmetric(std::vector<double>& jets, int m, int i, int j, int k, int l, int n, double v) {
    jets[idx5(m, i, j, k, l, n)] = v;
    jets[idx5(m, j, i, k, l, n)] = -v;
    jets[idx5(m, i, j, l, k, n)] = -v;
    jets[idx5(m, j, i, l, k, n)] = v;
    jets[idx5(m, k, l, i, j, n)] = v;
    jets[idx5(m, l, k, i, j, n)] = -v;
    jets[idx5(m, k, l, j, i, n)] = -v;
    jets[idx5(m, l, k, j, i, n)] = v;
}

}  // namespace

CurvatureTensor sphere_curvature(int m, double radius) {
    if (m < 2) throw std::invalid_argument("sphere_curvature: dimension must be >= 2");
    if (radius <= 0.0) throw std::invalid_argument("sphere_curvature: radius must be positive");
    const double c = 1.0 / (radius * radius);
    std::vector<double> r(static_cast<std::size_t>(m) * m * m * m, 0.0);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l)
                    r[idx4(m, i, j, k, l)] = c * ((i == l && j == k ? 1.0 : 0.0) -
                                                  (i == k && j == l ? 1.0 : 0.0));
    return CurvatureTensor(m, std::move(r));
}

BoundaryJet disk_boundary(int m) {
    if (m < 1) throw std::invalid_argument("disk_boundary: dimension must be >= 1");
    const int q = m - 1;
    std::vector<double> l(static_cast<std::size_t>(q) * q, 0.0);
    for (int a = 0; a < q; ++a) l[a * q + a] = 1.0;
    std::vector<double> dl(static_cast<std::size_t>(q) * q * q, 0.0);
    std::vector<double> dr(static_cast<std::size_t>(m) * m * m * m * m, 0.0);
    CurvatureTensor flat(m, std::vector<double>(static_cast<std::size_t>(m) * m * m * m, 0.0),
                         std::move(dr));
    return BoundaryJet(m, std::move(l), std::move(dl), std::move(flat));
}

BoundaryJet graph_hypersurface(const std::vector<double>& second_form_eigenvalues) {
    const int q = static_cast<int>(second_form_eigenvalues.size());
    const int m = q + 1;
    std::vector<double> l(static_cast<std::size_t>(q) * q, 0.0);
    for (int a = 0; a < q; ++a) l[a * q + a] = -second_form_eigenvalues[a];
    std::vector<double> dl(static_cast<std::size_t>(q) * q * q, 0.0);
    std::vector<double> dr(static_cast<std::size_t>(m) * m * m * m * m, 0.0);
    CurvatureTensor flat(m, std::vector<double>(static_cast<std::size_t>(m) * m * m * m, 0.0),
                         std::move(dr));
    return BoundaryJet(m, std::move(l), std::move(dl), std::move(flat));
}

WarpedProductJets warped_product_jets(double a0, int m, const std::vector<double>& graph_eigenvalues) {
    if (m < 3) throw std::invalid_argument("warped_product_jets: dimension must be >= 3");
    if (!graph_eigenvalues.empty() && static_cast<int>(graph_eigenvalues.size()) != m - 3)
        throw std::invalid_argument("warped_product_jets: expected m-3 graph eigenvalues");

    std::vector<double> r(static_cast<std::size_t>(m) * m * m * m, 0.0);
    std::vector<double> jets(r.size() * m, 0.0);
    // the two nonzero first-jet families: directions u1 = 1, u2 = 2, normal = m
    set_jet_symmetric(jets, m, 1, 2, 2, 1, m, a0);
    set_jet_symmetric(jets, m, 1, 2, 2, m, 1, a0);
    CurvatureTensor curv(m, std::move(r), std::move(jets));

    const int q = m - 1;
    std::vector<double> l(static_cast<std::size_t>(q) * q, 0.0);
    if (!graph_eigenvalues.empty())
        for (int a = 0; a < m - 3; ++a) l[(a + 2) * q + (a + 2)] = -graph_eigenvalues[a];
    std::vector<double> dl(static_cast<std::size_t>(q) * q * q, 0.0);
    BoundaryJet bdry(m, std::move(l), std::move(dl), curv);
    return WarpedProductJets{std::move(curv), std::move(bdry)};
}

ModelGeometry make_sphere(int m, double radius) {
    if (m < 1) throw std::invalid_argument("make_sphere: dimension must be >= 1");
    ModelGeometry g;
    g.kind = GeometryKind::sphere;
    g.dim = m;
    std::ostringstream label;
    label << "S^" << m << (radius != 1.0 ? "(r)" : "");
    g.label = label.str();
    g.curvature = (m >= 2) ? sphere_curvature(m, radius) : CurvatureTensor::zero(1);
    g.interior_volume = sphere_volume(m) * std::pow(radius, m);
    return g;
}

ModelGeometry make_disk(int m) {
    if (m < 1) throw std::invalid_argument("make_disk: dimension must be >= 1");
    ModelGeometry g;
    g.kind = GeometryKind::disk;
    g.dim = m;
    g.label = "D^" + std::to_string(m);
    g.curvature = CurvatureTensor::zero(m);
    g.boundary = disk_boundary(m);
    g.interior_volume = ball_volume(m);
    g.boundary_volume = sphere_volume(m - 1);
    return g;
}

ModelGeometry make_hemisphere(int m, double radius) {
    if (m < 2) throw std::invalid_argument("make_hemisphere: dimension must be >= 2");
    ModelGeometry g;
    g.kind = GeometryKind::hemisphere;
    g.dim = m;
    g.label = "hemisphere S^" + std::to_string(m) + "_+";
    g.curvature = sphere_curvature(m, radius);
    // geodesic equator: L = 0, curvature of the ambient sphere at the boundary
    const int q = m - 1;
    std::vector<double> l(static_cast<std::size_t>(q) * q, 0.0);
    g.boundary = BoundaryJet(m, std::move(l), std::nullopt, sphere_curvature(m, radius));
    g.interior_volume = 0.5 * sphere_volume(m) * std::pow(radius, m);
    g.boundary_volume = sphere_volume(m - 1) * std::pow(radius, m - 1);
    return g;
}

ModelGeometry product_geometry(const ModelGeometry& closed_factor, const ModelGeometry& other) {
    if (closed_factor.has_boundary())
        throw std::invalid_argument("product_geometry: first factor must be closed");
    const int m1 = closed_factor.dim;
    const int m2 = other.dim;
    const int m = m1 + m2;

    // block-diagonal curvature
    std::vector<double> r(static_cast<std::size_t>(m) * m * m * m, 0.0);
    auto embed = [&](const CurvatureTensor& src, int offset) {
        for (int i = 1; i <= src.dim(); ++i)
            for (int j = 1; j <= src.dim(); ++j)
                for (int k = 1; k <= src.dim(); ++k)
                    for (int l = 1; l <= src.dim(); ++l)
                        r[idx4(m, i + offset, j + offset, k + offset, l + offset)] = src(i, j, k, l);
    };
    if (closed_factor.curvature) embed(*closed_factor.curvature, 0);
    if (other.curvature) embed(*other.curvature, m1);
    CurvatureTensor curv(m, r);

    ModelGeometry g;
    g.kind = GeometryKind::product;
    g.dim = m;
    g.label = closed_factor.label + " x " + other.label;
    g.curvature = std::move(curv);
    g.interior_volume = closed_factor.interior_volume * other.interior_volume;

    if (other.has_boundary()) {
        // boundary tangential directions: all of M1, then the boundary of M2;
        // the normal stays the last index
        const int q = m - 1;
        const BoundaryJet& b2 = *other.boundary;
        std::vector<double> l(static_cast<std::size_t>(q) * q, 0.0);
        for (int a = 1; a <= m2 - 1; ++a)
            for (int b = 1; b <= m2 - 1; ++b)
                l[(m1 + a - 1) * q + (m1 + b - 1)] = b2.L(a, b);
        std::vector<double> dl(static_cast<std::size_t>(q) * q * q, 0.0);

        // boundary-adapted curvature: closed factor block plus M2's boundary
        // curvature block (with its normal mapped to index m)
        std::vector<double> rb(static_cast<std::size_t>(m) * m * m * m, 0.0);
        std::vector<double> drb(rb.size() * m, 0.0);
        auto embed_b = [&](const CurvatureTensor& src, int offset) {
            for (int i = 1; i <= src.dim(); ++i)
                for (int j = 1; j <= src.dim(); ++j)
                    for (int k = 1; k <= src.dim(); ++k)
                        for (int l4 = 1; l4 <= src.dim(); ++l4)
                            rb[idx4(m, i + offset, j + offset, k + offset, l4 + offset)] =
                                src(i, j, k, l4);
        };
        if (closed_factor.curvature) embed_b(*closed_factor.curvature, 0);
        if (b2.has_curvature()) embed_b(b2.curvature(), m1);  // its index m2 lands on index m
        g.boundary = BoundaryJet(m, std::move(l), std::move(dl),
                                 CurvatureTensor(m, std::move(rb), std::move(drb)));
        g.boundary_volume = closed_factor.interior_volume * other.boundary_volume;
    }
    return g;
}

double gauss_bonnet(const ModelGeometry& geometry) {
    switch (geometry.kind) {
        case GeometryKind::sphere:
        case GeometryKind::disk:
        case GeometryKind::hemisphere:
        case GeometryKind::product:
            break;
        default:
            throw std::invalid_argument("gauss_bonnet: unsupported geometry kind");
    }
    double chi = 0.0;
    if (geometry.dim % 2 == 0 && geometry.curvature)
        chi += eval_interior_index_density(*geometry.curvature, geometry.dim) * geometry.interior_volume;
    if (geometry.has_boundary())
        chi += eval_boundary_index_density(*geometry.boundary, geometry.dim) * geometry.boundary_volume;
    return chi;
}

namespace {

std::vector<std::pair<std::string, std::string>> parse_params(const std::string& s) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("geometry spec: expected param=value, got '" + item + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

}  // namespace

ModelGeometry parse_geometry_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::vector<std::pair<std::string, std::string>> params;
    if (colon != std::string::npos) params = parse_params(spec.substr(colon + 1));

    auto get = [&](const std::string& key, const std::string& fallback) {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        if (fallback.empty()) throw std::invalid_argument("geometry spec: missing parameter " + key);
        return fallback;
    };

    if (kind == "sphere") return make_sphere(std::stoi(get("m", "2")), std::stod(get("r", "1")));
    if (kind == "disk") return make_disk(std::stoi(get("m", "2")));
    if (kind == "hemisphere") return make_hemisphere(std::stoi(get("m", "2")), std::stod(get("r", "1")));
    if (kind == "product")
        return product_geometry(make_sphere(std::stoi(get("m1", ""))), make_disk(std::stoi(get("m2", ""))));
    if (kind == "graph") {
        std::vector<double> a;
        std::stringstream ss(get("A", ""));
        std::string item;
        while (std::getline(ss, item, ';')) a.push_back(std::stod(item));
        ModelGeometry g;
        g.kind = GeometryKind::graph_hypersurface;
        g.dim = static_cast<int>(a.size()) + 1;
        g.label = "graph hypersurface";
        g.curvature = CurvatureTensor::zero(g.dim);
        g.boundary = graph_hypersurface(a);
        return g;
    }
    throw std::invalid_argument("geometry spec: unknown kind '" + kind + "'");
}

}  // namespace stlab
