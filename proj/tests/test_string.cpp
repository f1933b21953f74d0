#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lk/string_su2.hpp"

using namespace lk;

TEST_CASE("calibration against the closed-form oracle") {
    // analytic oracle: eta0(i,j,k) = -<[i,j],k> = -2 on the orthonormal
    // left-invariant frame and vol(S^3) = 2 pi^2, so the raw integral is
    // -4 pi^2 and the calibrated scale must be -1/(4 pi^2)
    CHECK(std::fabs(std::fabs(kCartanScale) - 1.0 / (4 * M_PI * M_PI)) < 1e-15);
    CHECK(std::fabs(calibration_integral(12) - 1.0) < 1e-3);
}

TEST_CASE("cartan periods of the builtin maps") {
    auto constant = builtin_su2_map("constant");
    CHECK(std::fabs(cartan_period(constant, 8)) < 1e-12);

    auto d1 = builtin_su2_map("degree1");
    double p12 = cartan_period(d1, 12);
    CHECK(std::fabs(p12 - 1.0) < 1e-2);

    auto dr = builtin_su2_map("degree1-reversed");
    CHECK(std::fabs(cartan_period(dr, 12) + 1.0) < 1e-2);
    // the reversal is an odd barycentric permutation: exact sign flip
    CHECK(std::fabs(cartan_period(dr, 12) + p12) < 1e-12);

    CHECK_THROWS_AS(builtin_su2_map("nope"), std::invalid_argument);
}

TEST_CASE("quadrature convergence") {
    auto d1 = builtin_su2_map("degree1");
    for (int k : {8, 12}) {
        double a = cartan_period(d1, k);
        double b = cartan_period(d1, 2 * k);
        CHECK(std::fabs(a - b) < 1e-3);
    }
}

TEST_CASE("integrality of concatenated maps") {
    for (int k = 1; k <= 3; ++k) {
        auto f = builtin_su2_map(k == 1 ? "degree1" : ("concat-" + std::to_string(k)));
        // the k-fold pointwise power has degree k; larger k needs more nodes
        double p = cartan_period(f, 16);
        CHECK(std::fabs(p - k) < 2e-2);
    }
}

TEST_CASE("gauge invariance under left translation") {
    auto d1 = builtin_su2_map("degree1");
    Quat g = quat_exp(0.83, {0.1, -0.7, 0.4});
    SU2Map translated;
    translated.m = 3;
    translated.name = "translated";
    translated.eval = [g, d1](const std::vector<double>& t) { return g * d1.eval(t); };
    double a = cartan_period(d1, 10);
    double b = cartan_period(translated, 10);
    CHECK(std::fabs(a - b) < 1e-10);
}

TEST_CASE("primitive of the pulled-back 3-form") {
    auto constant = builtin_su2_map("constant");
    Numeric2Form zero = [](int, int, const std::vector<double>&) { return 0.0; };
    CHECK(mc_pair_residual(constant, zero, 6) < 1e-12);

    auto d1 = builtin_su2_map("degree1");
    auto beta = radial_primitive(d1, 12);
    CHECK(mc_pair_residual(d1, beta, 6) < 1e-3);

    // dropping the primitive leaves the full density
    CHECK(mc_pair_residual(d1, zero, 6) > 1e-1);
}

TEST_CASE("cocycle model of the 2-truncation") {
    auto d1 = builtin_su2_map("degree1");
    BundleTetra tetra;
    tetra.filling = d1;
    double bs[4] = {1, 0, 0, 0};
    for (int i = 0; i <= 3; ++i) tetra.faces[i] = bundle_face(d1, i, bs[i]);
    double defect = cocycle_check(tetra, 12);
    CHECK(defect < 1e-2);

    // integer shifts of any b leave the defect unchanged exactly
    BundleTetra shifted = tetra;
    shifted.faces[0].b += 5;
    shifted.faces[2].b -= 3;
    CHECK(cocycle_check(shifted, 12) == defect);

    // constant filling with zero b's
    auto cst = builtin_su2_map("constant");
    BundleTetra trivial;
    trivial.filling = cst;
    for (int i = 0; i <= 3; ++i) trivial.faces[i] = bundle_face(cst, i, 0);
    CHECK(cocycle_check(trivial, 8) < 1e-12);

    // incompatible edges are rejected: a filling with nonconstant boundary
    // against faces of a different map
    SU2Map wavy;
    wavy.m = 3;
    wavy.name = "wavy";
    wavy.eval = [](const std::vector<double>& t) {
        return quat_exp(0.4 * t[0] + 0.9 * t[1] * t[2], {0.3, 0.1 + t[2], -0.8});
    };
    BundleTetra bad;
    bad.filling = wavy;
    for (int i = 0; i <= 3; ++i) bad.faces[i] = bundle_face(wavy, i, 0);
    bad.faces[1] = bundle_face(cst, 1, 0);
    CHECK_THROWS_AS(cocycle_check(bad, 8), std::invalid_argument);
}

TEST_CASE("class separation in the S^1 fiber") {
    // a 2-simplex datum: smooth nonconstant map on the triangle
    auto f2 = [](double t1, double t2) {
        return quat_exp(0.9 * t1 + 0.3 * t2 * t2, {0.2, 0.5 + t1, -0.3 + t2});
    };
    auto edges_of = [&](double) {
        BundleTwoSimplex s;
        s.edges[0] = [f2](double u) { return f2(u, 0); };
        s.edges[1] = [f2](double u) { return f2(0, u); };
        s.edges[2] = [f2](double u) { return f2(1 - u, u); };
        return s;
    };
    BundleTwoSimplex x = edges_of(0);
    x.b = 0.25;
    SU2Homotopy constant_h;
    constant_h.eval = [f2](double t1, double t2, double) { return f2(t1, t2); };

    BundleTwoSimplex same = x;
    CHECK(class_equal(x, same, constant_h, 8, 1e-3));

    BundleTwoSimplex half = x;
    half.b += 0.5;
    CHECK(!class_equal(x, half, constant_h, 8, 1e-3));

    BundleTwoSimplex whole = x;
    whole.b += 1.0;
    CHECK(class_equal(x, whole, constant_h, 8, 1e-3));

    // a homotopy that moves the boundary is rejected
    SU2Homotopy moving;
    moving.eval = [f2](double t1, double t2, double s) {
        return quat_exp(0.5 * s, {1, 0, 0}) * f2(t1, t2);
    };
    CHECK_THROWS_AS(class_equal(x, same, moving, 8, 1e-3), std::invalid_argument);
}
