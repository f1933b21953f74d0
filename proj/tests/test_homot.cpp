#include "doctest.h"
#include "lk/homot.hpp"

using namespace lk;

TEST_CASE("string LES: pi_2 = R/Z, pi_3 = 0") {
    auto str = string_su2();
    auto H = homology_dims(str);
    auto B = string_boundary_data();
    auto pres = les_assemble(H, B, 3);
    REQUIRE(pres.size() == 3);

    CHECK(pres[0].is_group_token);

    // pi_2 = R / Z: one-dimensional vector part with the unit subgroup
    CHECK(pres[1].vector_dim == 1);
    REQUIRE(pres[1].subgroup.size() == 1);
    CHECK(pres[1].subgroup[0] == std::vector<Scalar>{Scalar(1)});
    CHECK(pres[1].discrete.is_trivial());
    CHECK(pres[1].vector_part_is_hausdorff());
    CHECK(pres[1].str() == "R^1/<(1)>");

    // pi_3 = 0: H_2 = 0 and ker(d_2: Z -> R) = 0
    CHECK(pres[2].vector_dim == 0);
    CHECK(pres[2].discrete.is_trivial());
    CHECK(pres[2].str() == "0");
}

TEST_CASE("LES with vanishing higher homotopy gives the homology") {
    // nilpotent L with pi_{>=2}(G) = 0: pi_n = H_{n-1}(L) for n >= 2
    LInftyAlgebra L = heisenberg_algebra();
    L.space.dims[1] = 1;
    L.brackets[3][{{0, 0}, {0, 1}, {0, 2}}] = {Scalar(1)};
    auto H = homology_dims(L);
    BoundaryData B;  // all zero
    auto pres = les_assemble(H, B, 3);
    CHECK(pres[1].vector_dim == H[1]);
    CHECK(pres[1].subgroup.empty());
    CHECK(pres[1].discrete.is_trivial());
    CHECK(pres[2].vector_dim == 0);

    // abelian L in degree n-1 alone: pi_n = L_{n-1}, others vanish
    auto ab = abelian_algebra({{1, 2}});
    auto Hab = homology_dims(ab);
    auto pab = les_assemble(Hab, BoundaryData{}, 3);
    CHECK(pab[1].vector_dim == 2);
    CHECK(pab[1].subgroup.empty());
    CHECK(pab[2].vector_dim == 0);
    CHECK(pab[1].lie_algebra_dim() == 2);
}

TEST_CASE("lie_algebra_of") {
    auto str = string_su2();
    auto pres = les_assemble(homology_dims(str), string_boundary_data(), 2);
    CHECK(pres[1].lie_algebra_dim() == 1);  // H_1(str) = R

    DiffeoGroupPres konly;
    konly.vector_dim = 0;
    konly.discrete = FGAbGroup{0, {2}};
    CHECK(konly.lie_algebra_dim() == 0);

    DiffeoGroupPres torus;
    torus.vector_dim = 2;
    torus.subgroup = {{Scalar(1), Scalar()}, {Scalar(), Scalar(1)}};
    CHECK(torus.lie_algebra_dim() == 2);
    CHECK(torus.vector_part_is_hausdorff());
}

TEST_CASE("TVF integrability") {
    auto str = string_su2();
    CHECK(tvf_integrability(homology_dims(str), string_boundary_data(), 2));

    auto L = end_example(Scalar(1), Scalar::sqrt_of(2));
    auto B = end_boundary_data(Scalar(1), Scalar::sqrt_of(2));
    CHECK(!tvf_integrability(homology_dims(L), B, 2));

    // zero boundary is always integrable
    CHECK(tvf_integrability(homology_dims(str), BoundaryData{}, 2));

    // rational slope is integrable again
    auto B2 = end_boundary_data(Scalar(1), Scalar(1, 2));
    // build the corresponding algebra quotient: p,q dependent is rejected by
    // end_example, but the boundary data itself is fine to test
    std::map<int, int> H{{0, 6}, {1, 1}};
    CHECK(tvf_integrability(H, B2, 2));

    // integrability agrees with the Hausdorff property of the assembled pi_n
    auto presND = les_assemble(homology_dims(L), B, 2);
    CHECK(presND[1].vector_part_is_hausdorff() ==
          tvf_integrability(homology_dims(L), B, 2));
    auto presStr = les_assemble(homology_dims(str), string_boundary_data(), 2);
    CHECK(presStr[1].vector_part_is_hausdorff() ==
          tvf_integrability(homology_dims(str), string_boundary_data(), 2));
}

TEST_CASE("LES input validation") {
    auto str = string_su2();
    auto H = homology_dims(str);
    BoundaryData bad = string_boundary_data();
    bad.boundary[2] = Mat(2, 1);  // H_1 is 1-dimensional, not 2
    CHECK_THROWS_AS(les_assemble(H, bad, 3), std::invalid_argument);

    BoundaryData bad2 = string_boundary_data();
    bad2.boundary[2] = Mat(1, 3);  // pi_3 has rank 1, not 3
    CHECK_THROWS_AS(les_assemble(H, bad2, 3), std::invalid_argument);
}

TEST_CASE("LES is functorial under truncation") {
    // assembling for tau_{<=n} L agrees with L in degrees <= n
    auto str = string_su2();
    auto B = string_boundary_data();
    auto full = les_assemble(homology_dims(str), B, 2);
    auto trunc = truncate_linf(str, 1, TruncMode::LE);
    auto tr = les_assemble(homology_dims(trunc.algebra), B, 2);
    CHECK(full[1].vector_dim == tr[1].vector_dim);
    CHECK(full[1].subgroup == tr[1].subgroup);
    CHECK(full[1].discrete == tr[1].discrete);

    // tau_{<1}: degree-1 homology dies, so pi_2's vector part vanishes
    auto lt = truncate_linf(str, 1, TruncMode::LT);
    BoundaryData Blt;  // the boundary into H_1 = 0 is forced to vanish
    Blt.pi_g = B.pi_g;
    auto low = les_assemble(homology_dims(lt.algebra), Blt, 2);
    CHECK(low[1].vector_dim == 0);
}

TEST_CASE("exactness audit on the string sequence") {
    // 0 -> pi_3^spl -> pi_3(G) --d--> H_1 -> pi_2^spl -> pi_2(G) = 0
    // with d injective: pi_3^spl = ker d = 0 and pi_2^spl = H_1/im d; the
    // assembled presentation realizes both kernels/cokernels exactly.
    auto H = homology_dims(string_su2());
    auto B = string_boundary_data();
    auto pres = les_assemble(H, B, 3);
    // im(d_2) = ker(H_1 -> pi_2^spl): the subgroup stored in pi_2
    CHECK(pres[1].subgroup.size() == (size_t)B.boundary[2].rank());
    // ker(d_2) = im(pi_3^spl -> pi_3(G)) = the discrete part of pi_3
    CHECK(pres[2].discrete == les_discrete_part(H, B, 3));
    CHECK(les_discrete_part(H, B, 3).is_trivial());
    // pi_2(G) = 0 forces the discrete part of pi_2 to vanish
    CHECK(pres[1].discrete.is_trivial());
}
