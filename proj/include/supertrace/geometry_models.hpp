#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supertrace/tensor_data.hpp"

namespace stlab {

// Exact tensor data for the model geometries used by the verification
// suites. All kinds are homogeneous (or point-normalized constructions), so
// volumes are closed-form and densities integrate exactly as density*volume.

enum class GeometryKind { sphere, disk, hemisphere, graph_hypersurface, warped_product, product };

struct ModelGeometry {
    GeometryKind kind;
    int dim = 0;
    std::string label;
    std::optional<CurvatureTensor> curvature;  // interior point data
    std::optional<BoundaryJet> boundary;       // boundary point data, when the boundary is non-empty
    double interior_volume = 0.0;
    double boundary_volume = 0.0;

    bool has_boundary() const { return boundary.has_value(); }
};

// R_{ijkl} = (delta_{il} delta_{jk} - delta_{ik} delta_{jl}) / radius^2 on S^m.
CurvatureTensor sphere_curvature(int m, double radius);

// Unit disk D^m: flat interior, L_{ab} = delta_{ab} with respect to the
// inward normal, explicit zero jets so every divergence term evaluates.
BoundaryJet disk_boundary(int m);

// Flat ambient space, boundary normalized so L = -diag(A), higher tangential
// jets of L killed (set to zero).
BoundaryJet graph_hypersurface(const std::vector<double>& second_form_eigenvalues);

struct WarpedProductJets {
    CurvatureTensor curvature;  // vanishes at the point; carries the two first-jet families
    BoundaryJet boundary;
};

// The warped metric model: R(0) = 0, and the only first-jet components up to
// forced symmetries are R_{1221;m} = a0 and R_{122m;1} = a0. The boundary is
// geodesic in the u-directions; optional eigenvalues give L = -diag(A) on the
// remaining m-3 tangential directions.
WarpedProductJets warped_product_jets(double a0, int m, const std::vector<double>& graph_eigenvalues = {});

// Factory helpers for the geometry suite.
ModelGeometry make_sphere(int m, double radius = 1.0);      // m >= 1; m = 1 is the flat circle
ModelGeometry make_disk(int m);                             // m >= 1
ModelGeometry make_hemisphere(int m, double radius = 1.0);  // geodesic equator boundary

// Product M1 x M2 where M1 is closed. Curvature is block diagonal; the
// boundary jet of M2 (if any) is padded by zeros on the M1 directions.
ModelGeometry product_geometry(const ModelGeometry& closed_factor, const ModelGeometry& other);

// Interior index-density integral plus boundary index-density integral;
// returns the Euler characteristic for every supported kind.
double gauss_bonnet(const ModelGeometry& geometry);

// Parse a CLI geometry spec: kind[:param=value,...]
//   sphere:m=4,r=1    disk:m=3    hemisphere:m=2    graph:A=1;2;3
//   product:m1=2,m2=2   (the closed sphere S^{m1} times the disk D^{m2})
ModelGeometry parse_geometry_spec(const std::string& spec);

}  // namespace stlab
