#include <doctest.h>

#include <cmath>

#include "supertrace/contraction.hpp"
#include "supertrace/geometry_models.hpp"
#include "supertrace/math_util.hpp"

using namespace stlab;

TEST_CASE("sphere curvature sign convention and scaling") {
    const CurvatureTensor unit = sphere_curvature(2, 1.0);
    CHECK(unit(1, 2, 2, 1) == 1.0);
    const CurvatureTensor scaled = sphere_curvature(2, 2.0);
    CHECK(scaled(1, 2, 2, 1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(sphere_curvature(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sphere_curvature(3, 0.0), std::invalid_argument);

    ContractionExpression expr;
    expr.block_size = 2;
    append_curvature_chain(expr, 0, 1);
    CHECK(epsilon_contract(expr, TensorAssignment{2, &unit, nullptr, nullptr}) ==
          doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("disk boundary data") {
    const BoundaryJet d2 = disk_boundary(2);
    CHECK(d2.L(1, 1) == 1.0);
    const BoundaryJet d4 = disk_boundary(4);
    ContractionExpression expr;
    expr.block_size = 3;
    append_second_form_chain(expr, 0, 3);
    CHECK(epsilon_contract(expr, TensorAssignment{3, nullptr, &d4, nullptr}) ==
          doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("graph hypersurface carries minus the prescribed eigenvalues") {
    const BoundaryJet bdry = graph_hypersurface({1.0, 2.0});
    CHECK(bdry.dim() == 3);
    CHECK(bdry.L(1, 1) == -1.0);
    CHECK(bdry.L(2, 2) == -2.0);
    CHECK(bdry.L(1, 2) == 0.0);
    CHECK(bdry.has_jets());
    CHECK(bdry.jet(1, 1, 2) == 0.0);

    const BoundaryJet geodesic = graph_hypersurface({0.0, 0.0, 0.0});
    CHECK(eval_boundary_index_density(geodesic, 4) == 0.0);
}

TEST_CASE("warped model jets") {
    CHECK_THROWS_AS(warped_product_jets(1.0, 2), std::invalid_argument);
    const WarpedProductJets warped = warped_product_jets(0.0, 3);
    bool all_zero = true;
    for (int i = 1; i <= 3 && all_zero; ++i)
        for (int j = 1; j <= 3 && all_zero; ++j)
            for (int k = 1; k <= 3 && all_zero; ++k)
                for (int l = 1; l <= 3 && all_zero; ++l)
                    for (int n = 1; n <= 3 && all_zero; ++n)
                        all_zero = warped.curvature.jet(i, j, k, l, n) == 0.0;
    CHECK(all_zero);

    const WarpedProductJets with_graph = warped_product_jets(0.7, 5, {1.0, 2.0});
    CHECK(with_graph.boundary.L(3, 3) == -1.0);
    CHECK(with_graph.boundary.L(4, 4) == -2.0);
    CHECK(with_graph.boundary.L(1, 1) == 0.0);
}

TEST_CASE("product geometry") {
    const ModelGeometry torus_like = product_geometry(make_sphere(1), make_disk(2));
    CHECK(torus_like.dim == 3);
    CHECK(torus_like.boundary->L(1, 1) == 0.0);
    CHECK(torus_like.boundary->L(2, 2) == 1.0);
    // the mixed second-form pattern kills the boundary density
    CHECK(eval_boundary_index_density(*torus_like.boundary, 3) == 0.0);

    CHECK_THROWS_AS(product_geometry(make_disk(2), make_sphere(2)), std::invalid_argument);

    const ModelGeometry flat = product_geometry(make_sphere(1), make_disk(1));
    CHECK(flat.curvature->scalar_curvature() == 0.0);
}

TEST_CASE("gauss-bonnet reproduces the Euler characteristics") {
    CHECK(gauss_bonnet(make_sphere(2)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gauss_bonnet(make_sphere(4)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gauss_bonnet(make_disk(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gauss_bonnet(make_disk(3)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gauss_bonnet(make_hemisphere(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gauss_bonnet(product_geometry(make_sphere(1), make_disk(2))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gauss_bonnet(product_geometry(make_sphere(2), make_disk(2))) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // odd-dimensional closed spheres carry no interior density
    CHECK(gauss_bonnet(make_sphere(3)) == 0.0);
}

TEST_CASE("gauss-bonnet rejects point-normalized kinds") {
    ModelGeometry g;
    g.kind = GeometryKind::graph_hypersurface;
    g.dim = 3;
    CHECK_THROWS_AS(gauss_bonnet(g), std::invalid_argument);
}

TEST_CASE("geometry spec parsing") {
    CHECK(gauss_bonnet(parse_geometry_spec("sphere:m=4,r=1")) == doctest::Approx(2.0));
    CHECK(gauss_bonnet(parse_geometry_spec("disk:m=3")) == doctest::Approx(1.0));
    CHECK(gauss_bonnet(parse_geometry_spec("hemisphere:m=2")) == doctest::Approx(1.0));
    CHECK(gauss_bonnet(parse_geometry_spec("product:m1=2,m2=2")) == doctest::Approx(2.0));
    const ModelGeometry graph = parse_geometry_spec("graph:A=1;2;3");
    CHECK(graph.dim == 4);
    CHECK(graph.boundary->L(3, 3) == -3.0);
    CHECK_THROWS_AS(parse_geometry_spec("torus:m=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_geometry_spec("sphere:m"), std::invalid_argument);
}

TEST_CASE("volumes are analytic") {
    CHECK(make_sphere(2).interior_volume == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(make_sphere(4).interior_volume == doctest::Approx(8.0 * M_PI * M_PI / 3.0).epsilon(1e-14));
    CHECK(make_disk(3).boundary_volume == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(make_hemisphere(2).interior_volume == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(sphere_volume(0) == 2.0);
    CHECK(sphere_volume(1) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-15));
}
